"""Typed errors shared across the package."""


class DegenerateLine(ValueError):
    """The two defining points coincide, so the line has no direction."""


class AxisParallel(ValueError):
    """An intersection was requested with a boundary the line never crosses."""


class AxisParallelNotSupported(AxisParallel):
    """The reduced clipper was handed an axis-parallel line it excludes by contract."""


class ConfigError(ValueError):
    """Invalid benchmark or verification configuration."""


class SamplingOverflow(RuntimeError):
    """Rejection sampling exhausted its attempt budget for one line."""
