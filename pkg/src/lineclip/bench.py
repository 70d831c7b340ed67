"""Timing harness for the clippers over the twelve scenario batches.

Method: per scenario one batch is generated and shared by all algorithms.
Each algorithm gets one untimed warmup pass, then ``repetitions`` timed
passes over the whole batch; the per-line cost is the median pass time
divided by the batch size.  A 64-bit checksum over the quantized outcomes
of a pass guards against elided work and doubles as the cross-algorithm
agreement check (every algorithm must produce the same checksum for a
scenario).  Speed is reported as ``v = t_LB / t_algo`` with ``v`` of the
Liang-Barsky baseline pinned to 1.

Checksum quantization: coordinates are snapped to a grid of
``1e-6 * max(1, diagonal)`` world units before hashing.  That is coarse
enough that the few-ulp spread between algorithms cannot straddle a grid
boundary in practice, and still three orders of magnitude finer than any
real disagreement the verifier would accept.

Mean operation counts come from an instrumented pass over a prefix of the
batch (``counted_sample`` lines); counting runs outside the timed region.

MSF1 is excluded from axis-parallel scenarios (P8..P12) unless
``force_msf1`` is set, in which case its contract error propagates.
"""

import platform
import statistics
import sys
import time
from dataclasses import dataclass, field
from hashlib import blake2b

import numpy as np

from . import batch as _batch
from .clippers import ALGORITHMS, Algorithm, OpCounts, RAW_CLIPPERS
from .errors import ConfigError
from .geometry import ClipWindow
from .workload import SCENARIOS, ScenarioId, gen_batch

__all__ = [
    "BenchConfig",
    "BenchRow",
    "BenchReport",
    "run_bench",
    "render_report",
    "outcome_checksum",
    "DEFAULT_WINDOW",
]

DEFAULT_WINDOW = ClipWindow(-1.0, -1.0, 1.0, 1.0)

_CANONICAL = {algo: i for i, algo in enumerate(ALGORITHMS)}


@dataclass(frozen=True)
class BenchConfig:
    scenarios: tuple[ScenarioId, ...] = SCENARIOS
    algorithms: tuple[Algorithm, ...] = ALGORITHMS
    n: int = 100_000
    repetitions: int = 5
    seed: int = 1
    window: ClipWindow = DEFAULT_WINDOW
    format: str = "md"
    backend: str = "auto"
    force_msf1: bool = False
    counted_sample: int = 2048

    def __post_init__(self):
        if not self.scenarios:
            raise ConfigError("at least one scenario is required")
        if not self.algorithms:
            raise ConfigError("at least one algorithm is required")
        if len(set(self.scenarios)) != len(self.scenarios):
            raise ConfigError("duplicate scenarios")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigError("duplicate algorithms")
        if self.n < 1:
            raise ConfigError("n must be >= 1")
        if self.repetitions < 3:
            raise ConfigError("repetitions must be >= 3 for a stable median")
        if self.format not in ("csv", "md", "markdown"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.counted_sample < 1:
            raise ConfigError("counted_sample must be >= 1")


@dataclass(frozen=True)
class BenchRow:
    scenario: ScenarioId
    algorithm: Algorithm
    excluded: bool
    ns_per_line: float | None
    v: float | None
    ops_mean: tuple[float, float, float, float] | None  # div, mul, sign, isect
    outcome_checksum: int | None


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    rows: tuple[BenchRow, ...]
    meta: dict = field(default_factory=dict)

    def row(self, scenario: ScenarioId, algorithm: Algorithm) -> BenchRow:
        for r in self.rows:
            if r.scenario is scenario and r.algorithm is algorithm:
                return r
        raise KeyError((scenario, algorithm))


def outcome_checksum(out: np.ndarray, win: ClipWindow) -> int:
    """Digest of accept flags plus grid-quantized endpoint coordinates.

    A chord is an unordered endpoint pair and the algorithms emit the two
    points in different orders, so each quantized pair is put in
    lexicographic order before hashing.
    """
    q = 1e-6 * max(1.0, win.diagonal)
    flags = out[:, 0].astype(np.uint8)
    quant = np.rint(out[:, 1:] / q).astype(np.int64)
    p, s = quant[:, :2], quant[:, 2:]
    swap = (p[:, 0] > s[:, 0]) | ((p[:, 0] == s[:, 0]) & (p[:, 1] > s[:, 1]))
    canon = np.where(swap[:, None], np.hstack((s, p)), quant)
    dig = blake2b(flags.tobytes(), digest_size=8)
    dig.update(np.ascontiguousarray(canon, dtype="<i8").tobytes())
    return int.from_bytes(dig.digest(), "big")


def _mean_ops(algo: Algorithm, coords: np.ndarray, win: ClipWindow,
              sample: int) -> tuple[float, float, float, float]:
    raw = RAW_CLIPPERS[algo]
    m = min(sample, coords.shape[0])
    acc = OpCounts()
    for i in range(m):
        raw(coords[i, 0], coords[i, 1], coords[i, 2], coords[i, 3],
            win.x_min, win.y_min, win.x_max, win.y_max, win.w, win.h, acc)
    return (acc.divisions / m, acc.multiplications / m,
            acc.sign_tests / m, acc.intersections_computed / m)


def run_bench(config: BenchConfig) -> BenchReport:
    backend = _batch.active_backend(config.backend)
    win = config.window
    algos = sorted(config.algorithms, key=_CANONICAL.get)
    rows = []
    for scenario in config.scenarios:
        batch = gen_batch(scenario, config.seed, config.n, win, backend=backend)
        out = np.empty((config.n, 5), dtype=np.float64)
        lb_ns = None
        scen_rows = []
        for algo in algos:
            if (algo is Algorithm.MSF1 and scenario.axis_parallel
                    and not config.force_msf1):
                scen_rows.append(BenchRow(scenario, algo, True, None, None, None, None))
                continue
            _batch.clip_many(algo, batch.coords, win, backend=backend, out=out)
            times = []
            for _ in range(config.repetitions):
                t0 = time.perf_counter_ns()
                _batch.clip_many(algo, batch.coords, win, backend=backend, out=out)
                times.append(time.perf_counter_ns() - t0)
            ns = statistics.median(times) / config.n
            checksum = outcome_checksum(out, win)
            ops = _mean_ops(algo, batch.coords, win, config.counted_sample)
            if algo is Algorithm.LB:
                lb_ns = ns
            scen_rows.append(BenchRow(scenario, algo, False, ns, None, ops, checksum))
        for r in scen_rows:
            if r.excluded:
                rows.append(r)
            elif r.algorithm is Algorithm.LB:
                rows.append(BenchRow(r.scenario, r.algorithm, False, r.ns_per_line,
                                     1.0, r.ops_mean, r.outcome_checksum))
            else:
                v = (lb_ns / r.ns_per_line) if lb_ns and r.ns_per_line else None
                rows.append(BenchRow(r.scenario, r.algorithm, False, r.ns_per_line,
                                     v, r.ops_mean, r.outcome_checksum))
    meta = {
        "backend": backend,
        "compiled_available": _batch.compiled_available(),
        "python": sys.version.split()[0],
        "platform": platform.platform(),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        "n": config.n,
        "repetitions": config.repetitions,
        "seed": config.seed,
        "window": (win.x_min, win.y_min, win.x_max, win.y_max),
    }
    return BenchReport(config=config, rows=tuple(rows), meta=meta)


def _fmt(value, pattern="{:.6g}") -> str:
    return "n/a" if value is None else pattern.format(value)


def render_report(report: BenchReport, fmt: str | None = None) -> str:
    fmt = fmt or report.config.format
    if fmt == "csv":
        return _render_csv(report)
    if fmt in ("md", "markdown"):
        return _render_md(report)
    raise ConfigError(f"unknown format {fmt!r}")


def _render_csv(report: BenchReport) -> str:
    lines = ["scenario,algorithm,ns_per_line,v,divisions,multiplications,sign_tests,intersections"]
    for r in report.rows:
        ops = r.ops_mean or (None, None, None, None)
        lines.append(",".join([
            r.scenario.name,
            r.algorithm.value,
            _fmt(r.ns_per_line, "{:.2f}"),
            _fmt(r.v, "{:.3f}"),
            _fmt(ops[0]),
            _fmt(ops[1]),
            _fmt(ops[2]),
            _fmt(ops[3]),
        ]))
    return "\n".join(lines) + "\n"


_MD_LABEL = {
    Algorithm.LB: "LB",
    Algorithm.SF: "SF",
    Algorithm.MSF: "MSF",
    Algorithm.MSF1: "MSF-1",
    Algorithm.LSA: "LSA",
}


def _render_md(report: BenchReport) -> str:
    algos = sorted(set(r.algorithm for r in report.rows), key=_CANONICAL.get)
    header = ["Case"]
    header += [f"{_MD_LABEL[a]} ns/line" for a in algos]
    header += [f"v_{_MD_LABEL[a]}" for a in algos if a is not Algorithm.LB]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    scenarios = []
    for r in report.rows:
        if r.scenario not in scenarios:
            scenarios.append(r.scenario)
    for scenario in scenarios:
        cells = [scenario.name]
        by_algo = {r.algorithm: r for r in report.rows if r.scenario is scenario}
        for a in algos:
            r = by_algo.get(a)
            cells.append(_fmt(None if r is None or r.excluded else r.ns_per_line, "{:.2f}"))
        for a in algos:
            if a is Algorithm.LB:
                continue
            r = by_algo.get(a)
            cells.append(_fmt(None if r is None or r.excluded else r.v, "{:.2f}"))
        lines.append("| " + " | ".join(cells) + " |")
    meta = report.meta
    lines.append("")
    lines.append(
        f"backend: {meta.get('backend')}; n={meta.get('n')}; "
        f"repetitions={meta.get('repetitions')}; seed={meta.get('seed')}; "
        f"window={meta.get('window')}"
    )
    return "\n".join(lines) + "\n"
