# cython: language_level=3
"""Compiled hot loops: batch clipping and workload generation.

Line-for-line transcriptions of the pure-Python kernels in
``lineclip.clippers``, ``lineclip.workload`` and ``lineclip.prng``.  The
arithmetic, its order, and every branch predicate match the Python source
exactly, and the extension is built with FP contraction disabled, so all
outputs are bitwise-equal to the Python backend (the test suite compares
digests of both).  Change nothing here without mirroring the reference.

Inputs are pre-validated by the callers in ``lineclip.batch`` and
``lineclip.workload``; the kernels themselves run check-free.
"""

from libc.math cimport INFINITY, fabs, isfinite

ctypedef unsigned long long u64

ctypedef int (*clip_fn)(double, double, double, double, double, double,
                        double, double, double, double, double *) noexcept nogil

cdef enum:
    MAX_ATTEMPTS_PER_LINE = 1000000


# --- SplitMix64 --------------------------------------------------------------

cdef inline u64 _mix64(u64 z) noexcept nogil:
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline u64 _sm_next(u64 *state) noexcept nogil:
    state[0] = state[0] + <u64>0x9E3779B97F4A7C15
    return _mix64(state[0])


cdef inline double _sm_unit(u64 *state) noexcept nogil:
    # top 53 bits scaled by 2**-53, a double in [0, 1)
    return <double>(_sm_next(state) >> 11) * (1.0 / 9007199254740992.0)


# --- clip kernels -------------------------------------------------------------
#
# Each returns 1 and fills res[0..3] with (px, py, qx, qy), or returns 0.

cdef int _lb_raw(double xa, double ya, double xb, double yb,
                 double xmin, double ymin, double xmax, double ymax,
                 double w, double h, double *res) noexcept nogil:
    cdef double dx = xb - xa
    cdef double dy = yb - ya
    cdef double tmin = -INFINITY
    cdef double tmax = INFINITY
    cdef double p, q, r

    p = -dx
    q = xa - xmin
    if p == 0.0:
        if q < 0.0:
            return 0
    else:
        r = q / p
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = dx
    q = xmax - xa
    if p == 0.0:
        if q < 0.0:
            return 0
    else:
        r = q / p
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = -dy
    q = ya - ymin
    if p == 0.0:
        if q < 0.0:
            return 0
    else:
        r = q / p
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    p = dy
    q = ymax - ya
    if p == 0.0:
        if q < 0.0:
            return 0
    else:
        r = q / p
        if p < 0.0:
            if r > tmin:
                tmin = r
        else:
            if r < tmax:
                tmax = r

    if tmin > tmax:
        return 0
    res[0] = xa + tmin * dx
    res[1] = ya + tmin * dy
    res[2] = xa + tmax * dx
    res[3] = ya + tmax * dy
    return 1


cdef int _sf_raw(double xa, double ya, double xb, double yb,
                 double xmin, double ymin, double xmax, double ymax,
                 double w, double h, double *res) noexcept nogil:
    cdef double dx = xb - xa
    cdef double dy, c, c1, c2, c3, c4, t, px, py, qx, qy
    if dx == 0.0:
        if xa < xmin or xa > xmax:
            return 0
        res[0] = xa; res[1] = ymin; res[2] = xa; res[3] = ymax
        return 1
    dy = yb - ya
    if dy == 0.0:
        if ya < ymin or ya > ymax:
            return 0
        res[0] = xmin; res[1] = ya; res[2] = xmax; res[3] = ya
        return 1

    c = xb * ya - xa * yb
    c1 = dy * xmin - dx * ymax + c
    c2 = dy * xmax - dx * ymax + c
    c3 = dy * xmax - dx * ymin + c
    if c1 * c3 < 0.0:
        c4 = dy * xmin - dx * ymin + c
        if c2 * c4 > 0.0:
            if c1 * c2 > 0.0:  # right + bottom
                qy = ya + (xmax - xa) * dy / dx
                qx = xmax
                px = xa + (ymin - ya) * dx / dy
                py = ymin
            else:  # top + left
                qx = xa + (ymax - ya) * dx / dy
                qy = ymax
                py = ya + (xmin - xa) * dy / dx
                px = xmin
        else:
            if c1 * c2 > 0.0:  # right + left
                t = dy / dx
                qy = ya + (xmax - xa) * t
                qx = xmax
                py = ya + (xmin - xa) * t
                px = xmin
            else:  # top + bottom
                t = dx / dy
                qx = xa + (ymax - ya) * t
                qy = ymax
                px = xa + (ymin - ya) * t
                py = ymin
    else:
        if c1 * c2 < 0.0:  # right + top
            qy = ya + (xmax - xa) * dy / dx
            qx = xmax
            px = xa + (ymax - ya) * dx / dy
            py = ymax
        else:
            c4 = dy * xmin - dx * ymin + c
            if c1 * c4 > 0.0:  # misses the window
                return 0
            # bottom + left
            qx = xa + (ymin - ya) * dx / dy
            qy = ymin
            py = ya + (xmin - xa) * dy / dx
            px = xmin
    res[0] = px; res[1] = py; res[2] = qx; res[3] = qy
    return 1


cdef int _msf_core(double xa, double ya, double dx, double dy,
                   double xmin, double ymin, double xmax, double ymax,
                   double w, double h, double *res) noexcept nogil:
    cdef double c1 = dy * (xmin - xa) - dx * (ymax - ya)
    cdef double c2 = c1 + dy * w
    cdef double c4, t, px, py, qx, qy
    if c1 * (c2 + dx * h) < 0.0:
        c4 = c1 + dx * h
        if c2 * c4 > 0.0:
            if c1 * c2 > 0.0:  # right + bottom
                qy = ymax + c2 / dx
                qx = xmax
                px = xmin - c4 / dy
                py = ymin
            else:  # top + left
                qx = xmin - c1 / dy
                qy = ymax
                py = ymax + c1 / dx
                px = xmin
        else:
            if c1 * c2 > 0.0:  # right + left, one reciprocal
                t = 1.0 / dx
                qy = ymax + c2 * t
                qx = xmax
                py = ymax + c1 * t
                px = xmin
            else:  # top + bottom, one reciprocal
                t = 1.0 / dy
                qx = xmin - c1 * t
                qy = ymax
                px = xmin - c4 * t
                py = ymin
    else:
        if c1 * c2 < 0.0:  # right + top
            qy = ymax + c2 / dx
            qx = xmax
            px = xmin - c1 / dy
            py = ymax
        else:
            c4 = c1 + dx * h
            if c1 * c4 > 0.0:  # misses the window
                return 0
            # bottom + left
            qx = xmin - c4 / dy
            qy = ymin
            py = ymax + c1 / dx
            px = xmin
    res[0] = px; res[1] = py; res[2] = qx; res[3] = qy
    return 1


cdef int _msf_raw(double xa, double ya, double xb, double yb,
                  double xmin, double ymin, double xmax, double ymax,
                  double w, double h, double *res) noexcept nogil:
    cdef double dx = xb - xa
    cdef double dy
    if dx == 0.0:
        if xa < xmin or xa > xmax:
            return 0
        res[0] = xa; res[1] = ymin; res[2] = xa; res[3] = ymax
        return 1
    dy = yb - ya
    if dy == 0.0:
        if ya < ymin or ya > ymax:
            return 0
        res[0] = xmin; res[1] = ya; res[2] = xmax; res[3] = ya
        return 1
    return _msf_core(xa, ya, dx, dy, xmin, ymin, xmax, ymax, w, h, res)


cdef int _msf1_raw(double xa, double ya, double xb, double yb,
                   double xmin, double ymin, double xmax, double ymax,
                   double w, double h, double *res) noexcept nogil:
    # Axis-parallel rows are rejected before a batch reaches this kernel.
    cdef double dx = xb - xa
    cdef double dy = yb - ya
    return _msf_core(xa, ya, dx, dy, xmin, ymin, xmax, ymax, w, h, res)


cdef int _lsa_raw(double xa, double ya, double xb, double yb,
                  double xmin, double ymin, double xmax, double ymax,
                  double w, double h, double *res) noexcept nogil:
    cdef double dx = xb - xa
    cdef double dy, adx, ady, sx, sy
    cdef double nb, hs, nt, ws, mb, mt, pl, pr, ql, qr
    cdef double t, u, px, py, qx, qy
    cdef bint bot_in, top_in, left_in, right_in
    if dx == 0.0:
        if xa < xmin or xa > xmax:
            return 0
        res[0] = xa; res[1] = ymin; res[2] = xa; res[3] = ymax
        return 1
    dy = yb - ya
    if dy == 0.0:
        if ya < ymin or ya > ymax:
            return 0
        res[0] = xmin; res[1] = ya; res[2] = xmax; res[3] = ya
        return 1

    adx = fabs(dx)
    ady = fabs(dy)
    if ady * w > adx * h:
        # Steep: horizontal boundaries first.
        if dy > 0.0:
            sx = dx
            sy = dy
        else:
            sx = -dx
            sy = -dy
        nb = (xa - xmin) * sy - (ya - ymin) * sx
        hs = h * sx
        nt = nb + hs
        ws = w * sy
        mb = nb - ws
        mt = nt - ws
        if nb < 0.0 and nt < 0.0:
            return 0
        if mb > 0.0 and mt > 0.0:
            return 0
        bot_in = nb >= 0.0 and mb <= 0.0
        top_in = nt >= 0.0 and mt <= 0.0
        if bot_in and top_in:
            t = sx / sy
            px = xa + (ymin - ya) * t
            py = ymin
            qx = xa + (ymax - ya) * t
            qy = ymax
        elif bot_in:
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
            u = sy / sx
            px = xmin
            py = ya + (xmin - xa) * u
            qx = xmax
            qy = ya + (xmax - xa) * u
    else:
        # Shallow (ties land here): vertical boundaries first.
        if dx > 0.0:
            sx = dx
            sy = dy
        else:
            sx = -dx
            sy = -dy
        pl = (ya - ymin) * sx - (xa - xmin) * sy
        ws = w * sy
        pr = pl + ws
        hs = h * sx
        ql = pl - hs
        qr = pr - hs
        if pl < 0.0 and pr < 0.0:
            return 0
        if ql > 0.0 and qr > 0.0:
            return 0
        left_in = pl >= 0.0 and ql <= 0.0
        right_in = pr >= 0.0 and qr <= 0.0
        if left_in and right_in:
            t = sy / sx
            py = ya + (xmin - xa) * t
            px = xmin
            qy = ya + (xmax - xa) * t
            qx = xmax
        elif left_in:
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
            u = sx / sy
            px = xa + (ymin - ya) * u
            py = ymin
            qx = xa + (ymax - ya) * u
            qy = ymax
    res[0] = px; res[1] = py; res[2] = qx; res[3] = qy
    return 1


cdef inline bint _finalize(double px, double py, double qx, double qy,
                           double xmin, double ymin, double xmax, double ymax,
                           double tol) noexcept nogil:
    cdef double ex, ey
    if not (isfinite(px) and isfinite(py) and isfinite(qx) and isfinite(qy)):
        return 0
    if px < xmin - tol or px > xmax + tol or py < ymin - tol or py > ymax + tol:
        return 0
    if qx < xmin - tol or qx > xmax + tol or qy < ymin - tol or qy > ymax + tol:
        return 0
    ex = qx - px
    ey = qy - py
    if ex * ex + ey * ey <= tol * tol:
        return 0
    return 1


def clip_batch(int algo, double[:, ::1] coords, double xmin, double ymin,
               double xmax, double ymax, double w, double h, double tol,
               double[:, ::1] out):
    """Clip every row of ``coords`` into ``out`` (flag, x1, y1, x2, y2)."""
    cdef Py_ssize_t i, n = coords.shape[0]
    cdef double res[4]
    cdef clip_fn fn
    if coords.shape[1] != 4 or out.shape[0] != n or out.shape[1] != 5:
        raise ValueError("expected coords (n, 4) and out (n, 5)")
    if algo == 0:
        fn = _lb_raw
    elif algo == 1:
        fn = _sf_raw
    elif algo == 2:
        fn = _msf_raw
    elif algo == 3:
        fn = _msf1_raw
    elif algo == 4:
        fn = _lsa_raw
    else:
        raise ValueError(f"unknown algorithm id {algo}")
    with nogil:
        for i in range(n):
            if fn(coords[i, 0], coords[i, 1], coords[i, 2], coords[i, 3],
                  xmin, ymin, xmax, ymax, w, h, res) and \
                    _finalize(res[0], res[1], res[2], res[3],
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


# --- workload generation -------------------------------------------------------

cdef int _classify_raw(double c1, double c2, double c3, double c4) noexcept nogil:
    if c1 * c3 < 0.0:
        if c2 * c4 > 0.0:
            return 0 if c1 * c2 > 0.0 else 1
        return 2 if c1 * c2 > 0.0 else 3
    if c1 * c2 < 0.0:
        return 4
    return 5 if c1 * c4 > 0.0 else 6


cdef int _draw_case_line(u64 *s, int target, double lox, double hix,
                         double loy, double hiy, double xmin, double ymin,
                         double xmax, double ymax, double *row) noexcept nogil:
    cdef long attempt
    cdef double xa, ya, xb, yb, dx, dy, c, c1, c2, c3, c4
    for attempt in range(MAX_ATTEMPTS_PER_LINE):
        xa = lox + (hix - lox) * _sm_unit(s)
        ya = loy + (hiy - loy) * _sm_unit(s)
        xb = lox + (hix - lox) * _sm_unit(s)
        yb = loy + (hiy - loy) * _sm_unit(s)
        dx = xb - xa
        if dx == 0.0:
            continue
        dy = yb - ya
        if dy == 0.0:
            continue
        if target < 0:
            row[0] = xa; row[1] = ya; row[2] = xb; row[3] = yb
            return 0
        c = xb * ya - xa * yb
        c1 = dy * xmin - dx * ymax + c
        c2 = dy * xmax - dx * ymax + c
        c3 = dy * xmax - dx * ymin + c
        c4 = dy * xmin - dx * ymin + c
        if _classify_raw(c1, c2, c3, c4) == target:
            row[0] = xa; row[1] = ya; row[2] = xb; row[3] = yb
            return 0
    return 1


cdef void _draw_h_inside(u64 *s, double lox, double hix, double ymin,
                         double ymax, double h, double *row) noexcept nogil:
    cdef double ya, xa, xb
    while True:
        ya = ymin + h * _sm_unit(s)
        if not (ymin < ya < ymax):
            continue
        xa = lox + (hix - lox) * _sm_unit(s)
        xb = lox + (hix - lox) * _sm_unit(s)
        if xb == xa:
            continue
        row[0] = xa; row[1] = ya; row[2] = xb; row[3] = ya
        return


cdef void _draw_h_outside(u64 *s, double lox, double hix, double ymin,
                          double ymax, double h, double *row) noexcept nogil:
    cdef double side, v, ya, xa, xb
    while True:
        side = _sm_unit(s)
        v = _sm_unit(s)
        if side < 0.5:
            ya = ymin - h * v
            if not (ya < ymin):
                continue
        else:
            ya = ymax + h * v
            if not (ya > ymax):
                continue
        xa = lox + (hix - lox) * _sm_unit(s)
        xb = lox + (hix - lox) * _sm_unit(s)
        if xb == xa:
            continue
        row[0] = xa; row[1] = ya; row[2] = xb; row[3] = ya
        return


cdef void _draw_v_outside(u64 *s, double loy, double hiy, double xmin,
                          double xmax, double w, double *row) noexcept nogil:
    cdef double side, v, xa, ya, yb
    while True:
        side = _sm_unit(s)
        v = _sm_unit(s)
        if side < 0.5:
            xa = xmin - w * v
            if not (xa < xmin):
                continue
        else:
            xa = xmax + w * v
            if not (xa > xmax):
                continue
        ya = loy + (hiy - loy) * _sm_unit(s)
        yb = loy + (hiy - loy) * _sm_unit(s)
        if yb == ya:
            continue
        row[0] = xa; row[1] = ya; row[2] = xa; row[3] = yb
        return


cdef void _draw_v_inside(u64 *s, double loy, double hiy, double xmin,
                         double xmax, double w, double *row) noexcept nogil:
    cdef double xa, ya, yb
    while True:
        xa = xmin + w * _sm_unit(s)
        if not (xmin < xa < xmax):
            continue
        ya = loy + (hiy - loy) * _sm_unit(s)
        yb = loy + (hiy - loy) * _sm_unit(s)
        if yb == ya:
            continue
        row[0] = xa; row[1] = ya; row[2] = xa; row[3] = yb
        return


def gen_batch(int scenario, state, double xmin, double ymin, double xmax,
              double ymax, double w, double h, double[:, ::1] out):
    """Fill ``out`` with scenario draws; scenario 0 is the unconstrained mix.

    Returns 0, or 1 when rejection sampling exhausted its attempt budget
    (the caller raises).  ``state`` is the already-derived stream seed.
    """
    cdef u64 s = state
    cdef Py_ssize_t i, n = out.shape[0]
    cdef double lox = xmin - w
    cdef double hix = xmax + w
    cdef double loy = ymin - h
    cdef double hiy = ymax + h
    cdef double row[4]
    cdef int k
    cdef int status = 0
    if out.shape[1] != 4:
        raise ValueError("expected an (n, 4) output buffer")
    if scenario < 0 or scenario > 12:
        raise ValueError(f"unknown scenario id {scenario}")
    with nogil:
        for i in range(n):
            if scenario == 0:
                status = _draw_case_line(&s, -1, lox, hix, loy, hiy,
                                         xmin, ymin, xmax, ymax, row)
            elif scenario <= 7:
                status = _draw_case_line(&s, scenario - 1, lox, hix, loy, hiy,
                                         xmin, ymin, xmax, ymax, row)
            elif scenario == 8:
                _draw_h_inside(&s, lox, hix, ymin, ymax, h, row)
            elif scenario == 9:
                _draw_h_outside(&s, lox, hix, ymin, ymax, h, row)
            elif scenario == 10:
                _draw_v_outside(&s, loy, hiy, xmin, xmax, w, row)
            elif scenario == 11:
                _draw_v_inside(&s, loy, hiy, xmin, xmax, w, row)
            else:
                k = <int>(_sm_unit(&s) * 4.0)
                if k == 0:
                    _draw_h_inside(&s, lox, hix, ymin, ymax, h, row)
                elif k == 1:
                    _draw_h_outside(&s, lox, hix, ymin, ymax, h, row)
                elif k == 2:
                    _draw_v_outside(&s, loy, hiy, xmin, xmax, w, row)
                else:
                    _draw_v_inside(&s, loy, hiy, xmin, xmax, w, row)
            if status:
                break
            out[i, 0] = row[0]
            out[i, 1] = row[1]
            out[i, 2] = row[2]
            out[i, 3] = row[3]
    return status
