# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Mirrors ``_kernels_py``; works on int64 breakpoints.

``pl_compose`` returns None when the working exponent would exceed 62 bits;
callers then fall back to the pure-Python kernel, which uses unbounded ints.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef int MAX_BITS = 62


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _bitlen(i64 v) nogil:
    if v <= 0:
        return 0
    return 64 - __builtin_clzll(<unsigned long long>v)


cdef inline int _slope_exp(i64 dx, i64 dy) nogil:
    return _bitlen(dy) - _bitlen(dx)


cdef inline i64 _mul_pow2(i64 v, int k) nogil:
    if k >= 0:
        return v << k
    if v >= 0:
        return v >> (-k)
    return -((-v) >> (-k))


cdef int _max_abs_slope(i64* xs, i64* ys, int n) nogil:
    cdef int m = 0, k, i
    for i in range(n - 1):
        k = _slope_exp(xs[i + 1] - xs[i], ys[i + 1] - ys[i])
        if k < 0:
            k = -k
        if k > m:
            m = k
    return m


cdef tuple _canonical(int W, i64* xs, i64* ys, int n):
    cdef int i, k1, k2, cnt = 1, tz
    cdef i64 acc = 0
    cdef i64* ox = <i64*>malloc(n * sizeof(i64))
    cdef i64* oy = <i64*>malloc(n * sizeof(i64))
    try:
        ox[0] = xs[0]
        oy[0] = ys[0]
        for i in range(1, n):
            if i < n - 1:
                k1 = _slope_exp(xs[i] - ox[cnt - 1], ys[i] - oy[cnt - 1])
                k2 = _slope_exp(xs[i + 1] - xs[i], ys[i + 1] - ys[i])
                if k1 == k2:
                    continue
            ox[cnt] = xs[i]
            oy[cnt] = ys[i]
            cnt += 1
        for i in range(cnt):
            acc |= ox[i]
            acc |= oy[i]
        tz = __builtin_ctzll(<unsigned long long>acc)
        if tz > W:
            tz = W
        return (W - tz,
                tuple([ox[i] >> tz for i in range(cnt)]),
                tuple([oy[i] >> tz for i in range(cnt)]))
    finally:
        free(ox)
        free(oy)


cdef i64* _load(tuple vals, int shift):
    cdef int n = len(vals), i
    cdef i64* out = <i64*>malloc(n * sizeof(i64))
    for i in range(n):
        out[i] = (<i64>vals[i]) << shift
    return out


def pl_canonical(int W, xs, ys):
    if W > MAX_BITS:
        return None
    cdef tuple tx = tuple(xs), ty = tuple(ys)
    cdef int n = len(tx)
    cdef i64* a = _load(tx, 0)
    cdef i64* b = _load(ty, 0)
    try:
        return _canonical(W, a, b, n)
    finally:
        free(a)
        free(b)


def pl_compose(int gT, tuple gx, tuple gy, int hT, tuple hx, tuple hy):
    if gT > MAX_BITS or hT > MAX_BITS:
        return None
    cdef int ng = len(gx), nh = len(hx)
    cdef i64* gxa = _load(gx, 0)
    cdef i64* gya = _load(gy, 0)
    cdef i64* hxa = _load(hx, 0)
    cdef i64* hya = _load(hy, 0)
    cdef i64* ox = NULL
    cdef i64* oy = NULL
    cdef int W, sg, sh, i, j, cnt, kh, kg, m1, m2
    cdef i64 x0, y0, x1, y1, v
    try:
        m1 = _max_abs_slope(gxa, gya, ng)
        m2 = _max_abs_slope(hxa, hya, nh)
        W = (gT if gT > hT else hT) + (m1 if m1 > m2 else m2)
        if W > MAX_BITS:
            return None
        sg = W - gT
        sh = W - hT
        for i in range(ng):
            gxa[i] <<= sg
            gya[i] <<= sg
        for i in range(nh):
            hxa[i] <<= sh
            hya[i] <<= sh
        ox = <i64*>malloc((ng + nh) * sizeof(i64))
        oy = <i64*>malloc((ng + nh) * sizeof(i64))
        ox[0] = 0
        oy[0] = 0
        cnt = 1
        j = 0
        for i in range(nh - 1):
            x0 = hxa[i]
            y0 = hya[i]
            x1 = hxa[i + 1]
            y1 = hya[i + 1]
            kh = _slope_exp(x1 - x0, y1 - y0)
            while j + 1 < ng and gxa[j + 1] <= y0:
                j += 1
            while j + 1 < ng - 1 and gxa[j + 1] < y1:
                j += 1
                v = gxa[j]
                ox[cnt] = x0 + _mul_pow2(v - y0, -kh)
                oy[cnt] = gya[j]
                cnt += 1
            while j + 1 < ng and gxa[j + 1] <= y1 and j + 1 < ng - 1:
                j += 1
            kg = _slope_exp(gxa[j + 1] - gxa[j], gya[j + 1] - gya[j])
            ox[cnt] = x1
            oy[cnt] = gya[j] + _mul_pow2(y1 - gxa[j], kg)
            cnt += 1
        return _canonical(W, ox, oy, cnt)
    finally:
        free(gxa)
        free(gya)
        free(hxa)
        free(hya)
        if ox != NULL:
            free(ox)
        if oy != NULL:
            free(oy)


def hinf_mul(tuple a, tuple b):
    cdef int la = len(a), lb = len(b), n, i
    cdef i64 e, nxt
    n = la if la > lb else lb
    cdef i64* out = <i64*>malloc((n + 1) * sizeof(i64))
    try:
        for i in range(n):
            out[i] = <i64>a[i] if i < la else 0
        out[n] = 0
        for i in range(lb):
            e = <i64>b[i]
            if e:
                nxt = out[i + 1]
                if nxt & 1:
                    out[i] -= e
                else:
                    out[i] += e
        while n > 0 and out[n - 1] == 0:
            n -= 1
        return tuple([out[i] for i in range(n)])
    finally:
        free(out)


def hinf_inv(tuple a):
    cdef int m = len(a), i
    cdef i64 nxt, ai
    cdef list out = [0] * m
    for i in range(m):
        nxt = <i64>a[i + 1] if i + 1 < m else 0
        ai = <i64>a[i]
        out[i] = ai if nxt & 1 else -ai
    return tuple(out)
