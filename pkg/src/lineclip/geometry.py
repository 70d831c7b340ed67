"""Planar primitives for clipping infinite lines against an axis-aligned window.

A line through points A and B is stored implicitly as

    F(x, y) = a*x + b*y + c,   a = y_B - y_A,  b = -(x_B - x_A),
                               c = x_B*y_A - x_A*y_B

so F vanishes on the line and its sign at any point tells which half-plane
the point lies in.  Evaluating F at the four window corners yields the
vertex codes c1..c4; their sign pattern alone decides which window edges
the line crosses.  Seven sign patterns are possible for a line that is not
axis-parallel, labelled ``CaseLabel.A`` .. ``CaseLabel.G``.

Corner and edge numbering used everywhere in this package::

    V1 = (x_min, y_max)   V2 = (x_max, y_max)    e1 = V1V2  top
    V4 = (x_min, y_min)   V3 = (x_max, y_min)    e2 = V2V3  right
                                                 e3 = V3V4  bottom
                                                 e4 = V4V1  left

No result snapping happens here; callers that need a tolerance scale
``GEOM_EPS`` by the window diagonal (see :attr:`ClipWindow.tolerance`).
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import AxisParallel, DegenerateLine

__all__ = [
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
]

# Relative geometric tolerance; world-unit tolerances are GEOM_EPS * diagonal.
GEOM_EPS = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class Line:
    """Infinite line through two distinct points."""

    a_pt: Point
    b_pt: Point

    def __post_init__(self):
        if self.a_pt.x == self.b_pt.x and self.a_pt.y == self.b_pt.y:
            raise DegenerateLine(f"defining points coincide at ({self.a_pt.x}, {self.a_pt.y})")


@dataclass(frozen=True)
class LineCoefficients:
    """Implicit form of a line, anchored at its first defining point.

    ``a*x + b*y + c`` is zero exactly on the line.  The anchor (x_a, y_a)
    is carried along so vertex codes can be formed from coordinate
    differences instead of the raw ``c`` term, which keeps intermediate
    magnitudes small when the window is far from the origin.
    """

    dx: float
    dy: float
    a: float
    b: float
    c: float
    x_a: float
    y_a: float


@dataclass(frozen=True)
class ClipWindow:
    """Axis-aligned rectangle with strictly positive extent."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float
    w: float = field(init=False)
    h: float = field(init=False)

    def __post_init__(self):
        for v in (self.x_min, self.y_min, self.x_max, self.y_max):
            if not math.isfinite(v):
                raise ValueError("window coordinates must be finite")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(
                f"degenerate window: ({self.x_min}, {self.y_min}, {self.x_max}, {self.y_max})"
            )
        object.__setattr__(self, "w", self.x_max - self.x_min)
        object.__setattr__(self, "h", self.y_max - self.y_min)

    @property
    def diagonal(self) -> float:
        return math.hypot(self.w, self.h)

    @property
    def tolerance(self) -> float:
        """World-unit geometric tolerance for this window."""
        return GEOM_EPS * self.diagonal

    @property
    def v1(self) -> Point:
        return Point(self.x_min, self.y_max)

    @property
    def v2(self) -> Point:
        return Point(self.x_max, self.y_max)

    @property
    def v3(self) -> Point:
        return Point(self.x_max, self.y_min)

    @property
    def v4(self) -> Point:
        return Point(self.x_min, self.y_min)

    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (self.v1, self.v2, self.v3, self.v4)


@dataclass(frozen=True)
class VertexCodes:
    """Separation-function values at the four window corners V1..V4."""

    c1: float
    c2: float
    c3: float
    c4: float


class CaseLabel(Enum):
    """The seven crossing categories of a non-axis-parallel line.

    A: right+bottom   B: top+left   C: right+left   D: top+bottom
    E: right+top      F: no crossing (line misses the window)
    G: bottom+left
    """

    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    G = "g"


class EdgeId(Enum):
    TOP = 1
    RIGHT = 2
    BOTTOM = 3
    LEFT = 4


_CASE_EDGES = {
    CaseLabel.A: (EdgeId.RIGHT, EdgeId.BOTTOM),
    CaseLabel.B: (EdgeId.TOP, EdgeId.LEFT),
    CaseLabel.C: (EdgeId.RIGHT, EdgeId.LEFT),
    CaseLabel.D: (EdgeId.TOP, EdgeId.BOTTOM),
    CaseLabel.E: (EdgeId.RIGHT, EdgeId.TOP),
    CaseLabel.F: (),
    CaseLabel.G: (EdgeId.BOTTOM, EdgeId.LEFT),
}


def line_coefficients(line: Line) -> LineCoefficients:
    """Implicit coefficients of the line through ``a_pt`` and ``b_pt``."""
    xa, ya = line.a_pt.x, line.a_pt.y
    xb, yb = line.b_pt.x, line.b_pt.y
    dx = xb - xa
    dy = yb - ya
    return LineCoefficients(dx=dx, dy=dy, a=dy, b=-dx, c=xb * ya - xa * yb, x_a=xa, y_a=ya)


def separation_value(coeffs: LineCoefficients, p: Point) -> float:
    """F(p): signed, scale-dependent separation of ``p`` from the line."""
    return coeffs.a * p.x + coeffs.b * p.y + coeffs.c


def vertex_codes_direct(coeffs: LineCoefficients, win: ClipWindow) -> VertexCodes:
    """Corner codes by direct evaluation of F at V1..V4."""
    dx, dy, c = coeffs.dx, coeffs.dy, coeffs.c
    return VertexCodes(
        c1=dy * win.x_min - dx * win.y_max + c,
        c2=dy * win.x_max - dx * win.y_max + c,
        c3=dy * win.x_max - dx * win.y_min + c,
        c4=dy * win.x_min - dx * win.y_min + c,
    )


def vertex_codes_incremental(coeffs: LineCoefficients, win: ClipWindow) -> VertexCodes:
    """Corner codes with one anchored evaluation and three increments.

    c1 is formed from coordinate differences against the anchor (no raw
    ``c`` term), then walking the corners adds ``dy*w`` along the top and
    ``dx*h`` down the sides:

        c2 = c1 + dy*w     c4 = c1 + dx*h     c3 = c2 + dx*h
    """
    dx, dy = coeffs.dx, coeffs.dy
    c1 = dy * (win.x_min - coeffs.x_a) - dx * (win.y_max - coeffs.y_a)
    c2 = c1 + dy * win.w
    c4 = c1 + dx * win.h
    c3 = c2 + dx * win.h
    return VertexCodes(c1=c1, c2=c2, c3=c3, c4=c4)


def classify_case(codes: VertexCodes) -> CaseLabel:
    """Crossing category from the corner-code signs.

    The decision tree uses strict inequalities; a product that is exactly
    zero (line through a corner) falls through to the *else* arm of its
    test.  Such lines get a well-defined label whose raw crossing points
    may degenerate; outcome normalization downstream handles them.
    """
    c1, c2, c3, c4 = codes.c1, codes.c2, codes.c3, codes.c4
    if c1 * c3 < 0.0:
        if c2 * c4 > 0.0:
            return CaseLabel.A if c1 * c2 > 0.0 else CaseLabel.B
        return CaseLabel.C if c1 * c2 > 0.0 else CaseLabel.D
    if c1 * c2 < 0.0:
        return CaseLabel.E
    return CaseLabel.F if c1 * c4 > 0.0 else CaseLabel.G


def case_edges(label: CaseLabel) -> tuple[EdgeId, ...]:
    """Window edges crossed in the given category (empty for F)."""
    return _CASE_EDGES[label]


def edge_intersection(
    coeffs: LineCoefficients, codes: VertexCodes, win: ClipWindow, edge: EdgeId
) -> Point:
    """Intersection of the line with the boundary line carrying ``edge``.

    The crossing is recovered from one corner code and one direction
    component; no fresh evaluation of F is needed:

        top     x = x_min - c1/dy        right   y = y_max + c2/dx
        bottom  x = x_min - c4/dy        left    y = y_max + c1/dx

    Raises :class:`AxisParallel` when the line runs parallel to the
    requested boundary.  The returned point lies on the boundary *line*;
    it is inside the edge segment only when the codes put a crossing
    there.
    """
    if edge in (EdgeId.TOP, EdgeId.BOTTOM):
        if coeffs.dy == 0.0:
            raise AxisParallel("horizontal line never crosses a horizontal boundary")
        if edge is EdgeId.TOP:
            return Point(win.x_min - codes.c1 / coeffs.dy, win.y_max)
        return Point(win.x_min - codes.c4 / coeffs.dy, win.y_min)
    if coeffs.dx == 0.0:
        raise AxisParallel("vertical line never crosses a vertical boundary")
    if edge is EdgeId.RIGHT:
        return Point(win.x_max, win.y_max + codes.c2 / coeffs.dx)
    return Point(win.x_min, win.y_max + codes.c1 / coeffs.dx)
