"""Infinite-line clipping against axis-aligned windows.

Five clippers sharing one outcome contract, a brute-force oracle for
cross-checking, deterministic workload generators and a benchmark
harness.  Hot paths run through a compiled extension when it is built;
otherwise a pure-Python fallback with identical semantics is used (see
:func:`lineclip.batch.active_backend`).
"""

from .errors import (
    AxisParallel,
    AxisParallelNotSupported,
    ConfigError,
    DegenerateLine,
    SamplingOverflow,
)
from .geometry import (
    GEOM_EPS,
    CaseLabel,
    ClipWindow,
    EdgeId,
    Line,
    LineCoefficients,
    Point,
    VertexCodes,
    case_edges,
    classify_case,
    edge_intersection,
    line_coefficients,
    separation_value,
    vertex_codes_direct,
    vertex_codes_incremental,
)
from .clippers import (
    ALGORITHMS,
    Algorithm,
    ClipOutcome,
    OpCounts,
    clip_counted,
    clip_lb,
    clip_lsa,
    clip_msf,
    clip_msf1,
    clip_sf,
)
from .batch import active_backend, clip_many, compiled_available
from .workload import (
    LineBatch,
    SCENARIOS,
    ScenarioId,
    dump_batch,
    gen_batch,
    gen_unconstrained,
    load_coords,
)
from .verify import VerifyReport, clip_oracle, outcomes_equal, verify_batch
from .bench import BenchConfig, BenchReport, render_report, run_bench

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "GEOM_EPS",
    "Point",
    "Line",
    "LineCoefficients",
    "ClipWindow",
    "VertexCodes",
    "CaseLabel",
    "EdgeId",
    "line_coefficients",
    "separation_value",
    "vertex_codes_direct",
    "vertex_codes_incremental",
    "classify_case",
    "case_edges",
    "edge_intersection",
    "Algorithm",
    "ALGORITHMS",
    "ClipOutcome",
    "OpCounts",
    "clip_lb",
    "clip_sf",
    "clip_msf",
    "clip_msf1",
    "clip_lsa",
    "clip_counted",
    "active_backend",
    "compiled_available",
    "clip_many",
    "ScenarioId",
    "SCENARIOS",
    "LineBatch",
    "gen_batch",
    "gen_unconstrained",
    "dump_batch",
    "load_coords",
    "clip_oracle",
    "outcomes_equal",
    "verify_batch",
    "VerifyReport",
    "BenchConfig",
    "BenchReport",
    "run_bench",
    "render_report",
    "DegenerateLine",
    "AxisParallel",
    "AxisParallelNotSupported",
    "ConfigError",
    "SamplingOverflow",
]
