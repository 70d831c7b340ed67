"""Whole-batch clipping with backend selection.

The hot per-line kernels exist twice: compiled Cython in
:mod:`lineclip._kernels` and the pure-Python reference in
:mod:`lineclip.clippers`.  The compiled module is preferred when the
extension was built; both produce bitwise-identical output, which the test
suite checks.  ``backend`` arguments accept ``"auto"``, ``"compiled"`` or
``"python"``.

Batches are (n, 4) float64 arrays of ``x_a y_a x_b y_b`` rows.  Results
are (n, 5) float64 arrays: column 0 is 1.0 for an accepted chord and 0.0
for a rejection, columns 1..4 hold ``x1 y1 x2 y2`` (zeros when rejected).
"""

import numpy as np

from .clippers import Algorithm, RAW_CLIPPERS, _finalize_raw
from .errors import AxisParallelNotSupported, DegenerateLine

try:
    from . import _kernels
except ImportError:  # built without the extension; fall back to pure Python
    _kernels = None

__all__ = ["ALGO_IDS", "active_backend", "clip_many", "compiled_available", "kernels"]

# Algorithm ids shared with the compiled kernels.
ALGO_IDS = {
    Algorithm.LB: 0,
    Algorithm.SF: 1,
    Algorithm.MSF: 2,
    Algorithm.MSF1: 3,
    Algorithm.LSA: 4,
}


def compiled_available() -> bool:
    return _kernels is not None


def kernels():
    """The compiled kernel module, or None when unavailable."""
    return _kernels


def active_backend(backend: str = "auto") -> str:
    """Resolve a backend request to the backend that will actually run."""
    if backend == "auto":
        return "compiled" if _kernels is not None else "python"
    if backend == "compiled":
        if _kernels is None:
            raise RuntimeError("compiled kernels are not available in this build")
        return "compiled"
    if backend == "python":
        return "python"
    raise ValueError(f"unknown backend {backend!r}")


def _as_batch(lines) -> np.ndarray:
    coords = np.ascontiguousarray(lines, dtype=np.float64)
    if coords.ndim != 2 or coords.shape[1] != 4:
        raise ValueError(f"expected an (n, 4) coordinate array, got shape {coords.shape}")
    return coords


def _validate(coords: np.ndarray, algo: Algorithm) -> None:
    bad = ~np.isfinite(coords)
    if bad.any():
        i = int(np.argmax(bad.any(axis=1)))
        raise ValueError(f"record {i}: coordinates must be finite")
    dx = coords[:, 2] - coords[:, 0]
    dy = coords[:, 3] - coords[:, 1]
    deg = (dx == 0.0) & (dy == 0.0)
    if deg.any():
        i = int(np.argmax(deg))
        raise DegenerateLine(f"record {i}: defining points coincide")
    if algo is Algorithm.MSF1:
        par = (dx == 0.0) | (dy == 0.0)
        if par.any():
            i = int(np.argmax(par))
            raise AxisParallelNotSupported(f"record {i}: axis-parallel line")


def _clip_many_python(raw, coords, win, out):
    xmin, ymin, xmax, ymax = win.x_min, win.y_min, win.x_max, win.y_max
    w, h = win.w, win.h
    tol = win.tolerance
    fin = _finalize_raw
    for i in range(coords.shape[0]):
        res = raw(coords[i, 0], coords[i, 1], coords[i, 2], coords[i, 3],
                  xmin, ymin, xmax, ymax, w, h, None)
        if res is not None and fin(res[0], res[1], res[2], res[3],
                                   xmin, ymin, xmax, ymax, tol):
            out[i, 0] = 1.0
            out[i, 1] = res[0]
            out[i, 2] = res[1]
            out[i, 3] = res[2]
            out[i, 4] = res[3]
        else:
            out[i, 0] = 0.0
            out[i, 1] = 0.0
            out[i, 2] = 0.0
            out[i, 3] = 0.0
            out[i, 4] = 0.0
    return out


def clip_many(algo: Algorithm, lines, win, backend: str = "auto",
              out: np.ndarray | None = None) -> np.ndarray:
    """Clip every line of a batch, returning the (n, 5) outcome array.

    Input is validated once up front (degenerate records always raise;
    axis-parallel records raise for MSF1), so the timed kernels run
    check-free.  ``out`` may supply a preallocated result buffer.
    """
    algo = Algorithm(algo)
    coords = _as_batch(lines)
    _validate(coords, algo)
    n = coords.shape[0]
    if out is None:
        out = np.empty((n, 5), dtype=np.float64)
    which = active_backend(backend)
    if which == "compiled":
        _kernels.clip_batch(ALGO_IDS[algo], coords,
                            win.x_min, win.y_min, win.x_max, win.y_max,
                            win.w, win.h, win.tolerance, out)
        return out
    return _clip_many_python(RAW_CLIPPERS[algo], coords, win, out)
