"""Pure-Python kernels.  Same algorithms and signatures as ``_kernels.pyx``.

PL maps are passed as ``(T, xs, ys)``: breakpoint ``i`` is
``(xs[i] / 2**T, ys[i] / 2**T)``.  Every slope is a power of two, so the
slope exponent of a segment is ``bit_length(dy) - bit_length(dx)``.
"""


def _slope_exp(dx, dy):
    return dy.bit_length() - dx.bit_length()


def _max_abs_slope(xs, ys):
    m = 0
    for i in range(len(xs) - 1):
        k = _slope_exp(xs[i + 1] - xs[i], ys[i + 1] - ys[i])
        if k < 0:
            k = -k
        if k > m:
            m = k
    return m


def _mul_pow2(v, k):
    if k >= 0:
        return v << k
    return v >> -k


def pl_canonical(W, xs, ys):
    """Coalesce collinear breakpoints and reduce to the smallest exponent."""
    ox, oy = [xs[0]], [ys[0]]
    n = len(xs)
    for i in range(1, n):
        if i < n - 1:
            k1 = _slope_exp(xs[i] - ox[-1], ys[i] - oy[-1])
            k2 = _slope_exp(xs[i + 1] - xs[i], ys[i + 1] - ys[i])
            if k1 == k2:
                continue
        ox.append(xs[i])
        oy.append(ys[i])
    acc = 0
    for v in ox:
        acc |= v
    for v in oy:
        acc |= v
    tz = (acc & -acc).bit_length() - 1
    if tz > W:
        tz = W
    if tz:
        ox = [v >> tz for v in ox]
        oy = [v >> tz for v in oy]
    return W - tz, tuple(ox), tuple(oy)


def pl_compose(gT, gx, gy, hT, hx, hy):
    """Breakpoints of g o h."""
    W = max(gT, hT) + max(_max_abs_slope(gx, gy), _max_abs_slope(hx, hy))
    gx = [v << (W - gT) for v in gx]
    gy = [v << (W - gT) for v in gy]
    hx = [v << (W - hT) for v in hx]
    hy = [v << (W - hT) for v in hy]
    out_x = [0]
    out_y = [0]
    j = 0  # g segment index: gx[j] <= current h-value < gx[j+1]
    ng = len(gx)
    for i in range(len(hx) - 1):
        x0, y0 = hx[i], hy[i]
        x1, y1 = hx[i + 1], hy[i + 1]
        kh = _slope_exp(x1 - x0, y1 - y0)
        # g breakpoints strictly inside (y0, y1) pull back to new x-breakpoints
        while j + 1 < ng and gx[j + 1] <= y0:
            j += 1
        while j + 1 < ng - 1 and gx[j + 1] < y1:
            j += 1
            v = gx[j]
            out_x.append(x0 + _mul_pow2(v - y0, -kh))
            out_y.append(gy[j])
        # endpoint x1 maps to g(y1)
        while j + 1 < ng and gx[j + 1] <= y1 and j + 1 < ng - 1:
            j += 1
        kg = _slope_exp(gx[j + 1] - gx[j], gy[j + 1] - gy[j])
        out_x.append(x1)
        out_y.append(gy[j] + _mul_pow2(y1 - gx[j], kg))
    return pl_canonical(W, out_x, out_y)


def hinf_mul(a, b):
    """Normal form of u*v from exponent tuples (x_1^{a_1} ... x_m^{a_m})."""
    la, lb = len(a), len(b)
    out = list(a)
    if lb > la:
        out.extend([0] * (lb - la))
    for i in range(lb):
        e = b[i]
        if e:
            nxt = out[i + 1] if i + 1 < len(out) else 0
            out[i] += -e if nxt & 1 else e
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def hinf_inv(a):
    m = len(a)
    out = [0] * m
    for i in range(m):
        nxt = a[i + 1] if i + 1 < m else 0
        out[i] = a[i] if nxt & 1 else -a[i]
    return tuple(out)
