"""Seeded line generators for the twelve benchmark scenarios.

Scenarios P1..P7 draw both defining points uniformly from the enclosing
box ``[x_min - w, x_max + w] x [y_min - h, y_max + h]`` and keep only
draws whose vertex-code classification matches the scenario's crossing
category (P1 -> A .. P7 -> G); axis-parallel draws are discarded before
classification.  The remaining five are axis-parallel populations:

    P8   horizontal, y strictly inside (y_min, y_max)
    P9   horizontal, y outside but within one window height
    P10  vertical, x outside but within one window width
    P11  vertical, x strictly inside (x_min, x_max)
    P12  uniform mix of the four kinds above

All randomness comes from one SplitMix64 stream per (seed, scenario); see
:mod:`lineclip.prng` for the bit-exact draw definition.  The compiled
generator mirrors the Python one draw for draw, so a batch is fully
determined by (scenario, seed, n, window) regardless of backend or
platform; the checksum (64-bit BLAKE2b over the little-endian coordinate
bytes) is frozen in the test suite.

Rejection sampling aborts with :class:`SamplingOverflow` after 10**6
attempts for a single line, which no sane window reaches.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from hashlib import blake2b

import numpy as np

from . import batch as _batch
from .errors import SamplingOverflow
from .geometry import ClipWindow, Line, Point
from .prng import SplitMix64, stream_seed

__all__ = [
    "ScenarioId",
    "SCENARIOS",
    "LineBatch",
    "gen_batch",
    "gen_unconstrained",
    "coords_checksum",
    "dump_batch",
    "load_coords",
    "parse_record",
    "MAX_ATTEMPTS_PER_LINE",
]

MAX_ATTEMPTS_PER_LINE = 1_000_000


class ScenarioId(Enum):
    P1 = 1
    P2 = 2
    P3 = 3
    P4 = 4
    P5 = 5
    P6 = 6
    P7 = 7
    P8 = 8
    P9 = 9
    P10 = 10
    P11 = 11
    P12 = 12

    @classmethod
    def parse(cls, text: str) -> "ScenarioId":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown scenario {text!r}") from None

    @property
    def axis_parallel(self) -> bool:
        return self.value >= 8


SCENARIOS = tuple(ScenarioId)


class _LineSeq(Sequence):
    """Sequence view presenting coordinate rows as Line objects."""

    __slots__ = ("_coords",)

    def __init__(self, coords: np.ndarray):
        self._coords = coords

    def __len__(self) -> int:
        return self._coords.shape[0]

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        row = self._coords[i]
        return Line(Point(row[0], row[1]), Point(row[2], row[3]))


@dataclass(frozen=True, eq=False)
class LineBatch:
    scenario: ScenarioId
    seed: int
    coords: np.ndarray  # (n, 4) float64, rows of x_a y_a x_b y_b
    checksum: int

    @property
    def lines(self) -> _LineSeq:
        return _LineSeq(self.coords)

    def __len__(self) -> int:
        return self.coords.shape[0]


def coords_checksum(coords: np.ndarray) -> int:
    """64-bit digest of the exact coordinate bits, platform-portable."""
    data = np.ascontiguousarray(coords, dtype="<f8").tobytes()
    return int.from_bytes(blake2b(data, digest_size=8).digest(), "big")


# --- pure-Python generation --------------------------------------------------
#
# The compiled generator transcribes these loops draw for draw; frozen
# checksums guard the equivalence.


def _classify_raw(dx, dy, c1, c2, c3, c4):
    # 0..6 for categories A..G, same strict tree as geometry.classify_case.
    if c1 * c3 < 0.0:
        if c2 * c4 > 0.0:
            return 0 if c1 * c2 > 0.0 else 1
        return 2 if c1 * c2 > 0.0 else 3
    if c1 * c2 < 0.0:
        return 4
    return 5 if c1 * c4 > 0.0 else 6


def _draw_case_line(g, target, lox, hix, loy, hiy, xmin, ymin, xmax, ymax):
    """One enclosing-box draw kept when its category equals ``target``.

    ``target < 0`` accepts any non-axis-parallel draw.
    """
    for _ in range(MAX_ATTEMPTS_PER_LINE):
        xa = lox + (hix - lox) * g.next_unit()
        ya = loy + (hiy - loy) * g.next_unit()
        xb = lox + (hix - lox) * g.next_unit()
        yb = loy + (hiy - loy) * g.next_unit()
        dx = xb - xa
        if dx == 0.0:
            continue
        dy = yb - ya
        if dy == 0.0:
            continue
        if target < 0:
            return xa, ya, xb, yb
        c = xb * ya - xa * yb
        c1 = dy * xmin - dx * ymax + c
        c2 = dy * xmax - dx * ymax + c
        c3 = dy * xmax - dx * ymin + c
        c4 = dy * xmin - dx * ymin + c
        if _classify_raw(dx, dy, c1, c2, c3, c4) == target:
            return xa, ya, xb, yb
    raise SamplingOverflow(
        f"no category-{'abcdefg'[target]} line after {MAX_ATTEMPTS_PER_LINE} attempts"
    )


def _draw_h_inside(g, lox, hix, ymin, ymax, h):
    while True:
        ya = ymin + h * g.next_unit()
        if not (ymin < ya < ymax):
            continue
        xa = lox + (hix - lox) * g.next_unit()
        xb = lox + (hix - lox) * g.next_unit()
        if xb == xa:
            continue
        return xa, ya, xb, ya


def _draw_h_outside(g, lox, hix, ymin, ymax, h):
    while True:
        side = g.next_unit()
        v = g.next_unit()
        if side < 0.5:
            ya = ymin - h * v
            if not (ya < ymin):
                continue
        else:
            ya = ymax + h * v
            if not (ya > ymax):
                continue
        xa = lox + (hix - lox) * g.next_unit()
        xb = lox + (hix - lox) * g.next_unit()
        if xb == xa:
            continue
        return xa, ya, xb, ya


def _draw_v_outside(g, loy, hiy, xmin, xmax, w):
    while True:
        side = g.next_unit()
        v = g.next_unit()
        if side < 0.5:
            xa = xmin - w * v
            if not (xa < xmin):
                continue
        else:
            xa = xmax + w * v
            if not (xa > xmax):
                continue
        ya = loy + (hiy - loy) * g.next_unit()
        yb = loy + (hiy - loy) * g.next_unit()
        if yb == ya:
            continue
        return xa, ya, xa, yb


def _draw_v_inside(g, loy, hiy, xmin, xmax, w):
    while True:
        xa = xmin + w * g.next_unit()
        if not (xmin < xa < xmax):
            continue
        ya = loy + (hiy - loy) * g.next_unit()
        yb = loy + (hiy - loy) * g.next_unit()
        if yb == ya:
            continue
        return xa, ya, xa, yb


def _gen_python(scenario: ScenarioId, state: int, n: int, win: ClipWindow,
                out: np.ndarray) -> None:
    g = SplitMix64(state)
    xmin, ymin, xmax, ymax = win.x_min, win.y_min, win.x_max, win.y_max
    w, h = win.w, win.h
    lox, hix = xmin - w, xmax + w
    loy, hiy = ymin - h, ymax + h
    s = scenario.value
    for i in range(n):
        if s <= 7:
            row = _draw_case_line(g, s - 1, lox, hix, loy, hiy, xmin, ymin, xmax, ymax)
        elif s == 8:
            row = _draw_h_inside(g, lox, hix, ymin, ymax, h)
        elif s == 9:
            row = _draw_h_outside(g, lox, hix, ymin, ymax, h)
        elif s == 10:
            row = _draw_v_outside(g, loy, hiy, xmin, xmax, w)
        elif s == 11:
            row = _draw_v_inside(g, loy, hiy, xmin, xmax, w)
        else:
            k = int(g.next_unit() * 4.0)
            if k == 0:
                row = _draw_h_inside(g, lox, hix, ymin, ymax, h)
            elif k == 1:
                row = _draw_h_outside(g, lox, hix, ymin, ymax, h)
            elif k == 2:
                row = _draw_v_outside(g, loy, hiy, xmin, xmax, w)
            else:
                row = _draw_v_inside(g, loy, hiy, xmin, xmax, w)
        out[i, 0] = row[0]
        out[i, 1] = row[1]
        out[i, 2] = row[2]
        out[i, 3] = row[3]


def gen_batch(scenario: ScenarioId, seed: int, n: int, win: ClipWindow,
              backend: str = "auto") -> LineBatch:
    """Generate the deterministic batch for (scenario, seed, n, window)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    scenario = ScenarioId(scenario)
    state = stream_seed(seed, scenario.value)
    coords = np.empty((n, 4), dtype=np.float64)
    which = _batch.active_backend(backend)
    if which == "compiled":
        status = _batch.kernels().gen_batch(
            scenario.value, state, win.x_min, win.y_min, win.x_max, win.y_max,
            win.w, win.h, coords,
        )
        if status != 0:
            raise SamplingOverflow(
                f"no {scenario.name} line after {MAX_ATTEMPTS_PER_LINE} attempts"
            )
    else:
        _gen_python(scenario, state, n, win, coords)
    return LineBatch(scenario=scenario, seed=seed, coords=coords,
                     checksum=coords_checksum(coords))


def gen_unconstrained(seed: int, n: int, win: ClipWindow, backend: str = "auto") -> np.ndarray:
    """Enclosing-box draws of every category mixed (never axis-parallel).

    Stream 0 of the seed, distinct from all scenario streams.
    """
    state = stream_seed(seed, 0)
    coords = np.empty((n, 4), dtype=np.float64)
    which = _batch.active_backend(backend)
    if which == "compiled":
        _batch.kernels().gen_batch(
            0, state, win.x_min, win.y_min, win.x_max, win.y_max, win.w, win.h, coords,
        )
        return coords
    g = SplitMix64(state)
    lox, hix = win.x_min - win.w, win.x_max + win.w
    loy, hiy = win.y_min - win.h, win.y_max + win.h
    for i in range(n):
        row = _draw_case_line(g, -1, lox, hix, loy, hiy,
                              win.x_min, win.y_min, win.x_max, win.y_max)
        coords[i, 0] = row[0]
        coords[i, 1] = row[1]
        coords[i, 2] = row[2]
        coords[i, 3] = row[3]
    return coords


# --- text interchange --------------------------------------------------------


def parse_record(text: str) -> tuple[float, float, float, float] | None:
    """Parse one input record; None for blank lines and ``#`` comments."""
    stripped = text.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = stripped.split()
    if len(parts) != 4:
        raise ValueError(f"expected 4 fields, got {len(parts)}")
    try:
        xa, ya, xb, yb = (float(p) for p in parts)
    except ValueError:
        raise ValueError("fields must be decimal numbers") from None
    if not (math.isfinite(xa) and math.isfinite(ya)
            and math.isfinite(xb) and math.isfinite(yb)):
        raise ValueError("fields must be finite")
    return xa, ya, xb, yb


def dump_batch(batch: LineBatch, fp) -> None:
    """Write a batch in the text record format (round-trip exact)."""
    fp.write(f"# scenario={batch.scenario.name} seed={batch.seed} "
             f"n={len(batch)} checksum={batch.checksum:016x}\n")
    for row in batch.coords:
        fp.write(f"{float(row[0])!r} {float(row[1])!r} "
                 f"{float(row[2])!r} {float(row[3])!r}\n")


def load_coords(fp) -> np.ndarray:
    """Read records from a text stream into an (n, 4) array."""
    rows = []
    for lineno, raw in enumerate(fp, start=1):
        try:
            rec = parse_record(raw)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if rec is not None:
            rows.append(rec)
    return np.array(rows, dtype=np.float64).reshape(-1, 4)
