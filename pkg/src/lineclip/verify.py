"""Differential verification of the clippers against a brute-force oracle.

The oracle never forms the implicit line equation.  It solves the line
parametrically against each of the four window edge *segments* (endpoints
inclusive, with a tolerance shell against its own rounding on slanted
crossings), collects the hits, merges points closer than the window
tolerance, and applies the same outcome normalization as the clippers:
fewer than two distinct points is a rejection, two points shorter than
the tolerance apart as well.  A line collinear with an edge contributes
that whole edge.

:func:`verify_batch` runs every algorithm over a generated scenario batch
and compares against the oracle per line.  Accounting is per (line,
algorithm) attempt: each is a match, a mismatch, or a degenerate skip
(MSF1 on an axis-parallel line, which it refuses by contract).  Reports
merge associatively, so a batch may be verified in any chunking with an
identical result.
"""

from dataclasses import dataclass, field

import numpy as np

from . import batch as _batch
from .clippers import ALGORITHMS, Algorithm, ClipOutcome, REJECTED, _finalize_raw
from .geometry import ClipWindow, Line, Point
from .workload import ScenarioId, gen_batch

__all__ = [
    "clip_oracle",
    "outcomes_equal",
    "FailureRecord",
    "VerifyReport",
    "verify_batch",
    "MAX_RECORDED_FAILURES",
]

MAX_RECORDED_FAILURES = 16


def _oracle_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, tol):
    """Edge-by-edge parametric intersection; (px, py, qx, qy) or None."""
    dx = xb - xa
    dy = yb - ya
    pts = []

    # A corner-through crossing can land an ulp outside the edge extent
    # purely from the parametric rounding here, so slanted lines get a
    # tolerance shell (clamped back onto the edge).  Axis-parallel lines
    # reproduce their constant coordinate exactly and keep exact bounds,
    # matching the clippers' inclusive contract.
    slack = tol if (dx != 0.0 and dy != 0.0) else 0.0

    # top edge: y = ymax, x in [xmin, xmax]
    if dy != 0.0:
        t = (ymax - ya) / dy
        x = xa + t * dx
        if xmin - slack <= x <= xmax + slack:
            pts.append((min(max(x, xmin), xmax), ymax))
    elif ya == ymax:
        pts.append((xmin, ymax))
        pts.append((xmax, ymax))

    # bottom edge: y = ymin
    if dy != 0.0:
        t = (ymin - ya) / dy
        x = xa + t * dx
        if xmin - slack <= x <= xmax + slack:
            pts.append((min(max(x, xmin), xmax), ymin))
    elif ya == ymin:
        pts.append((xmin, ymin))
        pts.append((xmax, ymin))

    # right edge: x = xmax, y in [ymin, ymax]
    if dx != 0.0:
        t = (xmax - xa) / dx
        y = ya + t * dy
        if ymin - slack <= y <= ymax + slack:
            pts.append((xmax, min(max(y, ymin), ymax)))
    elif xa == xmax:
        pts.append((xmax, ymin))
        pts.append((xmax, ymax))

    # left edge: x = xmin
    if dx != 0.0:
        t = (xmin - xa) / dx
        y = ya + t * dy
        if ymin - slack <= y <= ymax + slack:
            pts.append((xmin, min(max(y, ymin), ymax)))
    elif xa == xmin:
        pts.append((xmin, ymin))
        pts.append((xmin, ymax))

    tol2 = tol * tol
    uniq = []
    for cand in pts:
        for kept in uniq:
            ex = cand[0] - kept[0]
            ey = cand[1] - kept[1]
            if ex * ex + ey * ey < tol2:
                break
        else:
            uniq.append(cand)
    if len(uniq) < 2:
        return None
    if len(uniq) > 2:
        # Corner grazes can leave near-duplicates just over the merge
        # radius; keep the extreme pair along the line direction.
        uniq.sort(key=lambda pt: pt[0] * dx + pt[1] * dy)
    p = uniq[0]
    q = uniq[-1]
    return (p[0], p[1], q[0], q[1])


def clip_oracle(line: Line, win: ClipWindow) -> ClipOutcome:
    """Reference outcome by brute force; shares no formulas with the clippers."""
    res = _oracle_raw(
        line.a_pt.x, line.a_pt.y, line.b_pt.x, line.b_pt.y,
        win.x_min, win.y_min, win.x_max, win.y_max, win.tolerance,
    )
    if res is None:
        return REJECTED
    px, py, qx, qy = res
    if _finalize_raw(px, py, qx, qy, win.x_min, win.y_min, win.x_max, win.y_max, win.tolerance):
        return ClipOutcome.of(Point(px, py), Point(qx, qy))
    return REJECTED


def _oracle_batch(coords: np.ndarray, win: ClipWindow, out: np.ndarray) -> np.ndarray:
    xmin, ymin, xmax, ymax = win.x_min, win.y_min, win.x_max, win.y_max
    tol = win.tolerance
    raw = _oracle_raw
    fin = _finalize_raw
    for i in range(coords.shape[0]):
        res = raw(coords[i, 0], coords[i, 1], coords[i, 2], coords[i, 3],
                  xmin, ymin, xmax, ymax, tol)
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


def outcomes_equal(o1: ClipOutcome, o2: ClipOutcome, tol: float) -> bool:
    """Equality up to endpoint order and ``tol`` per endpoint."""
    if not o1.accepted or not o2.accepted:
        return o1.accepted == o2.accepted
    d_pp = max(_dist(o1.p, o2.p), _dist(o1.q, o2.q))
    d_pq = max(_dist(o1.p, o2.q), _dist(o1.q, o2.p))
    return min(d_pp, d_pq) <= tol


def _dist(p: Point, q: Point) -> float:
    ex = p.x - q.x
    ey = p.y - q.y
    return (ex * ex + ey * ey) ** 0.5


def _pair_deviation(out: np.ndarray, orc: np.ndarray) -> np.ndarray:
    """Best-pairing max endpoint distance for accept/accept rows, else 0."""
    d11 = np.hypot(out[:, 1] - orc[:, 1], out[:, 2] - orc[:, 2])
    d22 = np.hypot(out[:, 3] - orc[:, 3], out[:, 4] - orc[:, 4])
    d12 = np.hypot(out[:, 1] - orc[:, 3], out[:, 2] - orc[:, 4])
    d21 = np.hypot(out[:, 3] - orc[:, 1], out[:, 4] - orc[:, 2])
    dev = np.minimum(np.maximum(d11, d22), np.maximum(d12, d21))
    both_acc = (out[:, 0] == 1.0) & (orc[:, 0] == 1.0)
    return np.where(both_acc, dev, 0.0)


@dataclass(frozen=True)
class FailureRecord:
    index: int
    line: Line
    window: ClipWindow
    algorithm: Algorithm
    expected: ClipOutcome
    got: ClipOutcome


@dataclass(frozen=True)
class VerifyReport:
    total: int
    mismatches: int
    degenerate_skips: int
    max_endpoint_deviation: float
    first_failures: tuple[FailureRecord, ...] = field(default=())

    @property
    def matches(self) -> int:
        return self.total - self.mismatches - self.degenerate_skips

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        return VerifyReport(
            total=self.total + other.total,
            mismatches=self.mismatches + other.mismatches,
            degenerate_skips=self.degenerate_skips + other.degenerate_skips,
            max_endpoint_deviation=max(self.max_endpoint_deviation,
                                       other.max_endpoint_deviation),
            first_failures=(self.first_failures + other.first_failures)[:MAX_RECORDED_FAILURES],
        )


EMPTY_REPORT = VerifyReport(0, 0, 0, 0.0)


def _row_outcome(row) -> ClipOutcome:
    if row[0] == 1.0:
        return ClipOutcome.of(Point(row[1], row[2]), Point(row[3], row[4]))
    return REJECTED


def _verify_chunk(coords: np.ndarray, win: ClipWindow, backend: str,
                  base_index: int, budget: int) -> VerifyReport:
    n = coords.shape[0]
    tol = win.tolerance
    orc = _oracle_batch(coords, win, np.empty((n, 5), dtype=np.float64))
    dx = coords[:, 2] - coords[:, 0]
    dy = coords[:, 3] - coords[:, 1]
    msf1_ok = (dx != 0.0) & (dy != 0.0)

    total = 0
    mismatches = 0
    skips = 0
    maxdev = 0.0
    failures = []
    out = np.empty((n, 5), dtype=np.float64)

    for algo in ALGORITHMS:
        if algo is Algorithm.MSF1 and not msf1_ok.all():
            idx = np.flatnonzero(msf1_ok)
            total += n
            skips += n - idx.size
            if idx.size == 0:
                continue
            sub = np.ascontiguousarray(coords[idx])
            sub_out = _batch.clip_many(algo, sub, win, backend=backend)
            sub_orc = orc[idx]
            dev = _pair_deviation(sub_out, sub_orc)
            ok = (sub_out[:, 0] == sub_orc[:, 0]) & (dev <= tol)
            rows = idx
        else:
            total += n
            sub_out = _batch.clip_many(algo, coords, win, backend=backend, out=out)
            sub_orc = orc
            dev = _pair_deviation(sub_out, sub_orc)
            ok = (sub_out[:, 0] == sub_orc[:, 0]) & (dev <= tol)
            rows = np.arange(n)

        if dev.size:
            maxdev = max(maxdev, float(dev.max()))
        bad = np.flatnonzero(~ok)
        mismatches += bad.size
        for j in bad:
            if len(failures) >= budget:
                break
            i = int(rows[j])
            failures.append(FailureRecord(
                index=base_index + i,
                line=Line(Point(coords[i, 0], coords[i, 1]),
                          Point(coords[i, 2], coords[i, 3])),
                window=win,
                algorithm=algo,
                expected=_row_outcome(sub_orc[j]),
                got=_row_outcome(sub_out[j]),
            ))

    return VerifyReport(total=total, mismatches=mismatches, degenerate_skips=skips,
                        max_endpoint_deviation=maxdev, first_failures=tuple(failures))


def verify_batch(scenario: ScenarioId, seed: int, n: int, win: ClipWindow,
                 backend: str = "auto", chunk: int = 65536) -> VerifyReport:
    """Compare every algorithm against the oracle over one scenario batch.

    ``total`` counts (line, algorithm) attempts, so it equals ``n`` times
    the number of algorithms.  Chunked processing only bounds memory; the
    merged report is independent of ``chunk``.
    """
    batch = gen_batch(scenario, seed, n, win, backend=backend)
    report = EMPTY_REPORT
    for start in range(0, n, chunk):
        coords = batch.coords[start:start + chunk]
        budget = MAX_RECORDED_FAILURES - len(report.first_failures)
        report = report.merge(
            _verify_chunk(np.ascontiguousarray(coords), win, backend, start, budget)
        )
    return report
