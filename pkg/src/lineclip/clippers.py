"""Five clippers for infinite lines, sharing one outcome contract.

Every clipper maps (line, window) to the same result: the chord the line
cuts out of the window, with both endpoints on the window boundary, or a
rejection.  They differ only in how much arithmetic they spend finding it:

``clip_lb``
    Liang-Barsky parametric clipping adapted to infinite lines.  All four
    boundary parameters ``r = q/p`` are computed for a generic line; there
    is no early out between boundaries.
``clip_sf``
    Vertex codes evaluated directly from the implicit form, a seven-way
    sign-pattern dispatch, then point-slope intersection formulas.
``clip_msf``
    Same dispatch, but the codes are built incrementally from the anchored
    first code, and each crossing is recovered from a code and a division,
    saving an addition and a multiplication per intersection.  Opposite
    crossings share one reciprocal.
``clip_msf1``
    ``clip_msf`` with the axis-parallel entry branches removed.  Inputs
    with dx == 0 or dy == 0 raise :class:`AxisParallelNotSupported`; for
    every other input it executes the exact code path of ``clip_msf`` and
    returns a bitwise-identical outcome.
``clip_lsa``
    Slope comparison first: ``|dy|*w > |dx|*h`` (steeper than the window
    diagonal) decides whether horizontal or vertical boundaries are tried
    first.  Ties take the shallow branch.  Sign tests on crossing
    numerators pick the two edges actually hit, so only the two reported
    intersections are ever evaluated.

Raw accepted pairs all pass through :func:`finalize_outcome`: an endpoint
off the window by more than the window tolerance, or a chord no longer
than it, turns the answer into a rejection.  That is the only place
degeneracy is judged; the arithmetic above it never snaps values.

Operation counting (:func:`clip_counted`) tallies the work on the clip
path itself: float divisions, float multiplications, comparisons of
computed reals (``sign_tests``), and boundary crossings whose coordinate
or parameter was actually evaluated (``intersections_computed``; for
``clip_lb`` each computed ``r`` counts, which is what makes its constant
four divisions visible next to the two of the code-based clippers).
Absolute values, precondition validation, and outcome normalization are
not counted.  Composite range tests count both comparisons even when the
first one decides.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import AxisParallelNotSupported, DegenerateLine
from .geometry import ClipWindow, Line, Point

__all__ = [
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
    "finalize_outcome",
    "CLIPPERS",
]

_INF = math.inf


class Algorithm(str, Enum):
    LB = "lb"
    SF = "sf"
    MSF = "msf"
    MSF1 = "msf1"
    LSA = "lsa"


ALGORITHMS = (Algorithm.LB, Algorithm.SF, Algorithm.MSF, Algorithm.MSF1, Algorithm.LSA)


@dataclass(frozen=True)
class ClipOutcome:
    """Accepted chord (unordered endpoint pair) or rejection.

    ``p`` and ``q`` are both set on acceptance and both ``None`` on
    rejection.  Endpoint order carries no meaning; compare outcomes with
    :func:`lineclip.verify.outcomes_equal`.
    """

    p: Point | None
    q: Point | None

    @property
    def accepted(self) -> bool:
        return self.p is not None

    @classmethod
    def rejected(cls) -> "ClipOutcome":
        return cls(None, None)

    @classmethod
    def of(cls, p: Point, q: Point) -> "ClipOutcome":
        return cls(p, q)


REJECTED = ClipOutcome(None, None)


@dataclass
class OpCounts:
    divisions: int = 0
    multiplications: int = 0
    sign_tests: int = 0
    intersections_computed: int = 0


def _finalize_raw(px, py, qx, qy, xmin, ymin, xmax, ymax, tol):
    """Degeneracy policy shared by every clipper and the oracle.

    True only for a genuine chord: finite endpoints, inside the window
    within ``tol``, and longer than ``tol``.
    """
    if not (math.isfinite(px) and math.isfinite(py) and math.isfinite(qx) and math.isfinite(qy)):
        return False
    if px < xmin - tol or px > xmax + tol or py < ymin - tol or py > ymax + tol:
        return False
    if qx < xmin - tol or qx > xmax + tol or qy < ymin - tol or qy > ymax + tol:
        return False
    ex = qx - px
    ey = qy - py
    if ex * ex + ey * ey <= tol * tol:
        return False
    return True


def finalize_outcome(raw_p: Point, raw_q: Point, line: Line, win: ClipWindow) -> ClipOutcome:
    """Normalize a raw endpoint pair produced for ``line`` into an outcome.

    Rejects when either endpoint lies outside the window by more than the
    window tolerance or when the pair spans no more than it (tangency and
    corner-touch cases); otherwise accepts the pair unchanged.
    """
    if _finalize_raw(
        raw_p.x, raw_p.y, raw_q.x, raw_q.y, win.x_min, win.y_min, win.x_max, win.y_max,
        win.tolerance,
    ):
        return ClipOutcome.of(raw_p, raw_q)
    return REJECTED


# --- raw kernels -----------------------------------------------------------
#
# Each returns (px, py, qx, qy) or None, without outcome normalization.
# The compiled kernels in _kernels.pyx transcribe these line for line; any
# change here must be mirrored there (the test suite compares bitwise).


def _lb_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, w, h, ops=None):
    dx = xb - xa
    dy = yb - ya
    tmin = -_INF
    tmax = _INF

    p = -dx
    q = xa - xmin
    if ops is not None:
        ops.sign_tests += 1
    if p == 0.0:
        if ops is not None:
            ops.sign_tests += 1
        if q < 0.0:
            return None
    else:
        r = q / p
        if ops is not None:
            ops.divisions += 1
            ops.intersections_computed += 1
            ops.sign_tests += 2
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = dx
    q = xmax - xa
    if ops is not None:
        ops.sign_tests += 1
    if p == 0.0:
        if ops is not None:
            ops.sign_tests += 1
        if q < 0.0:
            return None
    else:
        r = q / p
        if ops is not None:
            ops.divisions += 1
            ops.intersections_computed += 1
            ops.sign_tests += 2
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = -dy
    q = ya - ymin
    if ops is not None:
        ops.sign_tests += 1
    if p == 0.0:
        if ops is not None:
            ops.sign_tests += 1
        if q < 0.0:
            return None
    else:
        r = q / p
        if ops is not None:
            ops.divisions += 1
            ops.intersections_computed += 1
            ops.sign_tests += 2
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = dy
    q = ymax - ya
    if ops is not None:
        ops.sign_tests += 1
    if p == 0.0:
        if ops is not None:
            ops.sign_tests += 1
        if q < 0.0:
            return None
    else:
        r = q / p
        if ops is not None:
            ops.divisions += 1
            ops.intersections_computed += 1
            ops.sign_tests += 2
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    if ops is not None:
        ops.sign_tests += 1
    if tmin > tmax:
        return None
    if ops is not None:
        ops.multiplications += 4
    return (xa + tmin * dx, ya + tmin * dy, xa + tmax * dx, ya + tmax * dy)


def _sf_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, w, h, ops=None):
    dx = xb - xa
    if ops is not None:
        ops.sign_tests += 1
    if dx == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if xa < xmin or xa > xmax:
            return None
        return (xa, ymin, xa, ymax)
    dy = yb - ya
    if ops is not None:
        ops.sign_tests += 1
    if dy == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if ya < ymin or ya > ymax:
            return None
        return (xmin, ya, xmax, ya)

    c = xb * ya - xa * yb
    c1 = dy * xmin - dx * ymax + c
    c2 = dy * xmax - dx * ymax + c
    c3 = dy * xmax - dx * ymin + c
    if ops is not None:
        ops.multiplications += 9
        ops.sign_tests += 1
    if c1 * c3 < 0.0:
        c4 = dy * xmin - dx * ymin + c
        if ops is not None:
            ops.multiplications += 4
            ops.sign_tests += 2
        if c2 * c4 > 0.0:
            if c1 * c2 > 0.0:  # right + bottom
                if ops is not None:
                    ops.divisions += 2
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                qy = ya + (xmax - xa) * dy / dx
                qx = xmax
                px = xa + (ymin - ya) * dx / dy
                py = ymin
            else:  # top + left
                if ops is not None:
                    ops.divisions += 2
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                qx = xa + (ymax - ya) * dx / dy
                qy = ymax
                py = ya + (xmin - xa) * dy / dx
                px = xmin
        else:
            if c1 * c2 > 0.0:  # right + left
                if ops is not None:
                    ops.divisions += 1
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                t = dy / dx
                qy = ya + (xmax - xa) * t
                qx = xmax
                py = ya + (xmin - xa) * t
                px = xmin
            else:  # top + bottom
                if ops is not None:
                    ops.divisions += 1
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                t = dx / dy
                qx = xa + (ymax - ya) * t
                qy = ymax
                px = xa + (ymin - ya) * t
                py = ymin
    else:
        if ops is not None:
            ops.multiplications += 1
            ops.sign_tests += 1
        if c1 * c2 < 0.0:  # right + top
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
            qy = ya + (xmax - xa) * dy / dx
            qx = xmax
            px = xa + (ymax - ya) * dx / dy
            py = ymax
        else:
            c4 = dy * xmin - dx * ymin + c
            if ops is not None:
                ops.multiplications += 3
                ops.sign_tests += 1
            if c1 * c4 > 0.0:  # misses the window
                return None
            # bottom + left
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
            qx = xa + (ymin - ya) * dx / dy
            qy = ymin
            py = ya + (xmin - xa) * dy / dx
            px = xmin
    return (px, py, qx, qy)


def _msf_core(xa, ya, dx, dy, xmin, ymin, xmax, ymax, w, h, ops=None):
    c1 = dy * (xmin - xa) - dx * (ymax - ya)
    c2 = c1 + dy * w
    if ops is not None:
        ops.multiplications += 5
        ops.sign_tests += 1
    if c1 * (c2 + dx * h) < 0.0:
        c4 = c1 + dx * h
        if ops is not None:
            ops.multiplications += 3
            ops.sign_tests += 2
        if c2 * c4 > 0.0:
            if c1 * c2 > 0.0:  # right + bottom
                if ops is not None:
                    ops.divisions += 2
                    ops.intersections_computed += 2
                qy = ymax + c2 / dx
                qx = xmax
                px = xmin - c4 / dy
                py = ymin
            else:  # top + left
                if ops is not None:
                    ops.divisions += 2
                    ops.intersections_computed += 2
                qx = xmin - c1 / dy
                qy = ymax
                py = ymax + c1 / dx
                px = xmin
        else:
            if c1 * c2 > 0.0:  # right + left, one reciprocal
                if ops is not None:
                    ops.divisions += 1
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                t = 1.0 / dx
                qy = ymax + c2 * t
                qx = xmax
                py = ymax + c1 * t
                px = xmin
            else:  # top + bottom, one reciprocal
                if ops is not None:
                    ops.divisions += 1
                    ops.multiplications += 2
                    ops.intersections_computed += 2
                t = 1.0 / dy
                qx = xmin - c1 * t
                qy = ymax
                px = xmin - c4 * t
                py = ymin
    else:
        if ops is not None:
            ops.multiplications += 1
            ops.sign_tests += 1
        if c1 * c2 < 0.0:  # right + top
            if ops is not None:
                ops.divisions += 2
                ops.intersections_computed += 2
            qy = ymax + c2 / dx
            qx = xmax
            px = xmin - c1 / dy
            py = ymax
        else:
            c4 = c1 + dx * h
            if ops is not None:
                ops.multiplications += 2
                ops.sign_tests += 1
            if c1 * c4 > 0.0:  # misses the window
                return None
            # bottom + left
            if ops is not None:
                ops.divisions += 2
                ops.intersections_computed += 2
            qx = xmin - c4 / dy
            qy = ymin
            py = ymax + c1 / dx
            px = xmin
    return (px, py, qx, qy)


def _msf_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, w, h, ops=None):
    dx = xb - xa
    if ops is not None:
        ops.sign_tests += 1
    if dx == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if xa < xmin or xa > xmax:
            return None
        return (xa, ymin, xa, ymax)
    dy = yb - ya
    if ops is not None:
        ops.sign_tests += 1
    if dy == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if ya < ymin or ya > ymax:
            return None
        return (xmin, ya, xmax, ya)
    return _msf_core(xa, ya, dx, dy, xmin, ymin, xmax, ymax, w, h, ops)


def _msf1_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, w, h, ops=None):
    dx = xb - xa
    dy = yb - ya
    # Precondition validation, not part of the counted clip path.
    if dx == 0.0 or dy == 0.0:
        raise AxisParallelNotSupported(
            f"axis-parallel line (dx={dx}, dy={dy}) is outside this clipper's domain"
        )
    return _msf_core(xa, ya, dx, dy, xmin, ymin, xmax, ymax, w, h, ops)


def _lsa_raw(xa, ya, xb, yb, xmin, ymin, xmax, ymax, w, h, ops=None):
    dx = xb - xa
    if ops is not None:
        ops.sign_tests += 1
    if dx == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if xa < xmin or xa > xmax:
            return None
        return (xa, ymin, xa, ymax)
    dy = yb - ya
    if ops is not None:
        ops.sign_tests += 1
    if dy == 0.0:
        if ops is not None:
            ops.sign_tests += 2
        if ya < ymin or ya > ymax:
            return None
        return (xmin, ya, xmax, ya)

    adx = abs(dx)
    ady = abs(dy)
    if ops is not None:
        ops.multiplications += 2
        ops.sign_tests += 1
    if ady * w > adx * h:
        # Steeper than the window diagonal: both crossings of the
        # horizontal boundary lines are less than one window width apart,
        # so at most one endpoint moves to a vertical edge.
        if ops is not None:
            ops.sign_tests += 1
        if dy > 0.0:
            sx = dx
            sy = dy
        else:
            sx = -dx
            sy = -dy
        # nb/nt: (crossing_x - x_min) * sy at y_min / y_max
        # mb/mt: (crossing_x - x_max) * sy
        nb = (xa - xmin) * sy - (ya - ymin) * sx
        hs = h * sx
        nt = nb + hs
        ws = w * sy
        mb = nb - ws
        mt = nt - ws
        if ops is not None:
            ops.multiplications += 4
            ops.sign_tests += 4
        if nb < 0.0 and nt < 0.0:
            return None
        if mb > 0.0 and mt > 0.0:
            return None
        if ops is not None:
            ops.sign_tests += 4
        bot_in = nb >= 0.0 and mb <= 0.0
        top_in = nt >= 0.0 and mt <= 0.0
        if bot_in and top_in:
            if ops is not None:
                ops.divisions += 1
                ops.multiplications += 2
                ops.intersections_computed += 2
            t = sx / sy
            px = xa + (ymin - ya) * t
            py = ymin
            qx = xa + (ymax - ya) * t
            qy = ymax
        elif bot_in:
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
                ops.sign_tests += 1
            t = sx / sy
            px = xa + (ymin - ya) * t
            py = ymin
            u = sy / sx
            if nt < 0.0:
                qx = xmin
                qy = ya + (xmin - xa) * u
            else:
                qx = xmax
                qy = ya + (xmax - xa) * u
        elif top_in:
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
                ops.sign_tests += 1
            t = sx / sy
            qx = xa + (ymax - ya) * t
            qy = ymax
            u = sy / sx
            if nb < 0.0:
                px = xmin
                py = ya + (xmin - xa) * u
            else:
                px = xmax
                py = ya + (xmax - xa) * u
        else:
            # Opposite-side overshoot is possible only for slope ties
            # within rounding; both endpoints sit on vertical edges then.
            if ops is not None:
                ops.divisions += 1
                ops.multiplications += 2
                ops.intersections_computed += 2
            u = sy / sx
            px = xmin
            py = ya + (xmin - xa) * u
            qx = xmax
            qy = ya + (xmax - xa) * u
    else:
        # Shallow (ties land here): vertical boundary lines first.
        if ops is not None:
            ops.sign_tests += 1
        if dx > 0.0:
            sx = dx
            sy = dy
        else:
            sx = -dx
            sy = -dy
        # pl/pr: (crossing_y - y_min) * sx at x_min / x_max
        # ql/qr: (crossing_y - y_max) * sx
        pl = (ya - ymin) * sx - (xa - xmin) * sy
        ws = w * sy
        pr = pl + ws
        hs = h * sx
        ql = pl - hs
        qr = pr - hs
        if ops is not None:
            ops.multiplications += 4
            ops.sign_tests += 4
        if pl < 0.0 and pr < 0.0:
            return None
        if ql > 0.0 and qr > 0.0:
            return None
        if ops is not None:
            ops.sign_tests += 4
        left_in = pl >= 0.0 and ql <= 0.0
        right_in = pr >= 0.0 and qr <= 0.0
        if left_in and right_in:
            if ops is not None:
                ops.divisions += 1
                ops.multiplications += 2
                ops.intersections_computed += 2
            t = sy / sx
            py = ya + (xmin - xa) * t
            px = xmin
            qy = ya + (xmax - xa) * t
            qx = xmax
        elif left_in:
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
                ops.sign_tests += 1
            t = sy / sx
            py = ya + (xmin - xa) * t
            px = xmin
            u = sx / sy
            if pr < 0.0:
                qy = ymin
                qx = xa + (ymin - ya) * u
            else:
                qy = ymax
                qx = xa + (ymax - ya) * u
        elif right_in:
            if ops is not None:
                ops.divisions += 2
                ops.multiplications += 2
                ops.intersections_computed += 2
                ops.sign_tests += 1
            t = sy / sx
            qy = ya + (xmax - xa) * t
            qx = xmax
            u = sx / sy
            if pl < 0.0:
                py = ymin
                px = xa + (ymin - ya) * u
            else:
                py = ymax
                px = xa + (ymax - ya) * u
        else:
            if ops is not None:
                ops.divisions += 1
                ops.multiplications += 2
                ops.intersections_computed += 2
            u = sx / sy
            px = xa + (ymin - ya) * u
            py = ymin
            qx = xa + (ymax - ya) * u
            qy = ymax
    return (px, py, qx, qy)


RAW_CLIPPERS = {
    Algorithm.LB: _lb_raw,
    Algorithm.SF: _sf_raw,
    Algorithm.MSF: _msf_raw,
    Algorithm.MSF1: _msf1_raw,
    Algorithm.LSA: _lsa_raw,
}


def _clip(raw, line: Line, win: ClipWindow, ops=None) -> ClipOutcome:
    res = raw(
        line.a_pt.x, line.a_pt.y, line.b_pt.x, line.b_pt.y,
        win.x_min, win.y_min, win.x_max, win.y_max, win.w, win.h, ops,
    )
    if res is None:
        return REJECTED
    px, py, qx, qy = res
    if _finalize_raw(px, py, qx, qy, win.x_min, win.y_min, win.x_max, win.y_max, win.tolerance):
        return ClipOutcome.of(Point(px, py), Point(qx, qy))
    return REJECTED


def clip_lb(line: Line, win: ClipWindow) -> ClipOutcome:
    """Liang-Barsky clip of an infinite line (four boundary divisions)."""
    return _clip(_lb_raw, line, win)


def clip_sf(line: Line, win: ClipWindow) -> ClipOutcome:
    """Vertex-code clip with direct code evaluation."""
    return _clip(_sf_raw, line, win)


def clip_msf(line: Line, win: ClipWindow) -> ClipOutcome:
    """Vertex-code clip with incremental codes and code-derived crossings."""
    return _clip(_msf_raw, line, win)


def clip_msf1(line: Line, win: ClipWindow) -> ClipOutcome:
    """``clip_msf`` without axis-parallel handling; such input raises."""
    return _clip(_msf1_raw, line, win)


def clip_lsa(line: Line, win: ClipWindow) -> ClipOutcome:
    """Slope-comparison clip; evaluates only the two reported crossings."""
    return _clip(_lsa_raw, line, win)


CLIPPERS = {
    Algorithm.LB: clip_lb,
    Algorithm.SF: clip_sf,
    Algorithm.MSF: clip_msf,
    Algorithm.MSF1: clip_msf1,
    Algorithm.LSA: clip_lsa,
}


def clip_counted(algo: Algorithm, line: Line, win: ClipWindow) -> tuple[ClipOutcome, OpCounts]:
    """Clip with instrumentation; the outcome is identical to the plain run."""
    ops = OpCounts()
    outcome = _clip(RAW_CLIPPERS[Algorithm(algo)], line, win, ops)
    return outcome, ops
