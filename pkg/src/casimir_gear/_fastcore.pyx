# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical core: scaled Bessel functions and mode kernels.

Twin of ``_purecore``; the two must stay arithmetically identical,
expression by expression (the build disables FP contraction for exactly
this reason), so results do not depend on which backend got selected.
See ``_purecore`` for the algorithm notes.
"""

from libc.math cimport exp, fabs, log, sqrt

from . import _tables

BACKEND = "compiled"

DEF MAXN = 96  # order buffer: public cap 64 + derivative/seed margin

cdef double _HUGE = 1e300

# ---- Chebyshev tables, copied once into C storage --------------------

cdef double C_I0S[64]
cdef double C_I0L[64]
cdef double C_I1S[64]
cdef double C_I1L[64]
cdef double C_K0S[64]
cdef double C_K0L[64]
cdef double C_K1S[64]
cdef double C_K1L[64]
cdef int N_I0S, N_I0L, N_I1S, N_I1L, N_K0S, N_K0L, N_K1S, N_K1L

cdef int _fill(double* dst, object src):
    cdef int i, n
    n = len(src)
    for i in range(n):
        dst[i] = src[i]
    return n

N_I0S = _fill(C_I0S, _tables.I0E_SMALL)
N_I0L = _fill(C_I0L, _tables.I0E_LARGE)
N_I1S = _fill(C_I1S, _tables.I1E_SMALL_OVERX)
N_I1L = _fill(C_I1L, _tables.I1E_LARGE)
N_K0S = _fill(C_K0S, _tables.K0E_SMALL)
N_K0L = _fill(C_K0L, _tables.K0E_LARGE)
N_K1S = _fill(C_K1S, _tables.K1E_SMALL)
N_K1L = _fill(C_K1L, _tables.K1E_LARGE)

cdef double GLX[12]
cdef double GLW[12]
_fill(GLX, _tables.GL12_NODES)
_fill(GLW, _tables.GL12_WEIGHTS)


cdef double _clenshaw(const double* c, int n, double t) nogil:
    cdef double b1 = 0.0
    cdef double b2 = 0.0
    cdef double tmp
    cdef int k
    for k in range(n - 1, 0, -1):
        tmp = 2.0 * t * b1 - b2 + c[k]
        b2 = b1
        b1 = tmp
    return t * b1 - b2 + c[0]


cdef double _i0e(double x) nogil:
    if x <= 8.0:
        return _clenshaw(C_I0S, N_I0S, x / 4.0 - 1.0)
    return _clenshaw(C_I0L, N_I0L, 16.0 / x - 1.0) / sqrt(x)


cdef double _i1e(double x) nogil:
    if x <= 8.0:
        return x * _clenshaw(C_I1S, N_I1S, x / 4.0 - 1.0)
    return _clenshaw(C_I1L, N_I1L, 16.0 / x - 1.0) / sqrt(x)


cdef double _k0e(double x) nogil:
    cdef double g, ex
    if x <= 2.0:
        g = _clenshaw(C_K0S, N_K0S, x * x / 2.0 - 1.0)
        ex = exp(x)
        return ex * (g - log(x / 2.0) * (ex * _i0e(x)))
    return _clenshaw(C_K0L, N_K0L, 4.0 / x - 1.0) / sqrt(x)


cdef double _k1e(double x) nogil:
    cdef double h, ex
    if x <= 2.0:
        h = _clenshaw(C_K1S, N_K1S, x * x / 2.0 - 1.0)
        ex = exp(x)
        return ex * ((1.0 + h) / x + log(x / 2.0) * (ex * _i1e(x)))
    return _clenshaw(C_K1L, N_K1L, 4.0 / x - 1.0) / sqrt(x)


cdef void _kv_fill(int n, double x, double* out) nogil:
    cdef double k0 = _k0e(x)
    cdef double k1, tox, tmp
    cdef int m
    out[0] = k0
    if n == 0:
        return
    k1 = _k1e(x)
    out[1] = k1
    tox = 2.0 / x
    for m in range(1, n):
        tmp = k0 + (m * tox) * k1
        k0 = k1
        k1 = tmp
        out[m + 1] = k1


cdef double _iv_ratio(int n, double x) nogil:
    cdef double tiny = 1e-300
    cdef double f = tiny
    cdef double c = f
    cdef double d = 0.0
    cdef double b, delta
    cdef int k = 1
    while True:
        b = 2.0 * (n + k) / x
        d = b + d
        if d == 0.0:
            d = tiny
        c = b + 1.0 / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if fabs(delta - 1.0) < 1e-16 or k > 10000:
            return f
        k += 1


cdef void _iv_fill(int n, double x, const double* kv, double* out) nogil:
    # kv must hold orders 0..n+1
    cdef int ns = n
    cdef int m
    cdef double r, here, above, below
    while ns > 0 and not (kv[ns + 1] < _HUGE):
        ns -= 1
    for m in range(n + 1):
        out[m] = 0.0
    r = _iv_ratio(ns, x)
    here = 1.0 / (x * (kv[ns + 1] + r * kv[ns]))
    above = r * here
    out[ns] = here
    if ns + 1 <= n:
        out[ns + 1] = above
    for m in range(ns, 0, -1):
        below = above + (2.0 * m / x) * here
        out[m - 1] = below
        above = here
        here = below


cdef void _open_brackets_c(int mmax, double eta, double kz, double y,
                           double* f1, double* f2) nogil:
    cdef double lam = sqrt(eta * eta + kz * kz)
    cdef double x1 = lam
    cdef double x2 = lam * y
    cdef int n = mmax + 1
    cdef double kv1[MAXN]
    cdef double kv2[MAXN]
    cdef double expfac, lam2, kz2, eta2, c1, c2, d1, d2, kp1, kp2
    cdef int m, lo
    _kv_fill(n, x1, kv1)
    _kv_fill(n, x2, kv2)
    expfac = exp(-lam * (y - 1.0))
    lam2 = lam * lam
    kz2 = kz * kz
    eta2 = eta * eta
    c1 = kz2 / (lam2 * y)
    c2 = eta2 / lam2
    d1 = kz2 / lam
    d2 = eta2 / (lam2 * lam * y)
    for m in range(mmax + 1):
        lo = 1 if m == 0 else m - 1
        kp1 = -0.5 * (kv1[lo] + kv1[m + 1])
        kp2 = -0.5 * (kv2[lo] + kv2[m + 1])
        if m > 0:
            f1[m] = expfac * m * (c1 * (kv2[m] / kv1[m]) + c2 * (kp2 / kp1))
        else:
            f1[m] = 0.0
        f2[m] = expfac * (d1 * (kp2 / kv1[m]) + (d2 * m * m) * (kv2[m] / kp1))


cdef void _conc_brackets_c(int mmax, double eta, double kz, double y,
                           double* out) nogil:
    cdef double lam = sqrt(eta * eta + kz * kz)
    cdef double x1 = lam
    cdef double x2 = lam * y
    cdef int n = mmax + 1
    cdef double kv1[MAXN]
    cdef double kv2[MAXN]
    cdef double iv1[MAXN]
    cdef double iv2[MAXN]
    cdef double e1, e2, lam2, kz2, eta2, a1, a2
    cdef double kp1, kp2, ip1, ip2, dd, dp, t1
    cdef int m, lo
    # _iv_fill reads kv up to order n+1, so fill one extra order; the
    # bracket loop below only touches the 0..n prefix (identical values).
    _kv_fill(n + 1, x1, kv1)
    _kv_fill(n + 1, x2, kv2)
    _iv_fill(n, x1, kv1, iv1)
    _iv_fill(n, x2, kv2, iv2)
    e1 = exp(-lam * (y - 1.0))
    e2 = e1 * e1
    lam2 = lam * lam
    kz2 = kz * kz
    eta2 = eta * eta
    a1 = eta2 / (lam2 * lam2 * y * y)
    a2 = kz2 / (lam2 * y)
    for m in range(mmax + 1):
        lo = 1 if m == 0 else m - 1
        kp1 = -0.5 * (kv1[lo] + kv1[m + 1])
        kp2 = -0.5 * (kv2[lo] + kv2[m + 1])
        ip1 = 0.5 * (iv1[lo] + iv1[m + 1])
        ip2 = 0.5 * (iv2[lo] + iv2[m + 1])
        dd = iv1[m] * kv2[m] * e2 - iv2[m] * kv1[m]
        dp = ip1 * kp2 * e2 - ip2 * kp1
        if m > 0:
            t1 = (a1 * m * m) / dp
        else:
            t1 = 0.0
        out[m] = e1 * (t1 - a2 / dd)


# ---- Python-visible surface (mirrors _purecore) -----------------------

def i0e(double x):
    """e^-x I_0(x) for x > 0."""
    return _i0e(x)


def i1e(double x):
    """e^-x I_1(x) for x > 0."""
    return _i1e(x)


def k0e(double x):
    """e^x K_0(x) for x > 0."""
    return _k0e(x)


def k1e(double x):
    """e^x K_1(x) for x > 0."""
    return _k1e(x)


def kv_seq(int n, double x):
    """Tuple (e^x K_0(x), ..., e^x K_n(x)) by upward recurrence."""
    cdef double buf[MAXN]
    cdef int m
    if n + 2 > MAXN:
        raise ValueError(f"order {n} exceeds the compiled buffer")
    _kv_fill(n, x, buf)
    return tuple(buf[m] for m in range(n + 1))


def iv_seq(int n, double x):
    """Tuple (e^-x I_0(x), ..., e^-x I_n(x)); CF seed + downward recurrence."""
    cdef double kv[MAXN]
    cdef double buf[MAXN]
    cdef int m
    if n + 2 > MAXN:
        raise ValueError(f"order {n} exceeds the compiled buffer")
    _kv_fill(n + 1, x, kv)
    _iv_fill(n, x, kv, buf)
    return tuple(buf[m] for m in range(n + 1))


def open_brackets(int mmax, double eta, double kz, double y):
    """(f1, f2) kernel bracket tuples for the open gear; see _purecore."""
    cdef double f1[MAXN]
    cdef double f2[MAXN]
    cdef int m
    if mmax + 2 > MAXN:
        raise ValueError(f"order {mmax} exceeds the compiled buffer")
    _open_brackets_c(mmax, eta, kz, y, f1, f2)
    return (tuple(f1[m] for m in range(mmax + 1)),
            tuple(f2[m] for m in range(mmax + 1)))


def conc_brackets(int mmax, double eta, double kz, double y):
    """Concentric surface-to-surface kernel tuple; see _purecore."""
    cdef double buf[MAXN]
    cdef int m
    if mmax + 3 > MAXN:
        raise ValueError(f"order {mmax} exceeds the compiled buffer")
    _conc_brackets_c(mmax, eta, kz, y, buf)
    return tuple(buf[m] for m in range(mmax + 1))


def gl12_open_panel(int mmax, double eta, double y, double a, double b):
    """12-point Gauss-Legendre sums of the open-gear brackets over [a, b]."""
    cdef double s1[MAXN]
    cdef double s2[MAXN]
    cdef double f1[MAXN]
    cdef double f2[MAXN]
    cdef double half, mid, kj, wj
    cdef int j, m
    if mmax + 2 > MAXN:
        raise ValueError(f"order {mmax} exceeds the compiled buffer")
    with nogil:
        half = 0.5 * (b - a)
        mid = 0.5 * (a + b)
        for m in range(mmax + 1):
            s1[m] = 0.0
            s2[m] = 0.0
        for j in range(12):
            kj = mid + half * GLX[j]
            wj = half * GLW[j]
            _open_brackets_c(mmax, eta, kj, y, f1, f2)
            for m in range(mmax + 1):
                s1[m] += wj * f1[m]
                s2[m] += wj * f2[m]
    return (tuple(s1[m] for m in range(mmax + 1)),
            tuple(s2[m] for m in range(mmax + 1)))


def gl12_conc_panel(int mmax, double eta, double y, double a, double b):
    """12-point Gauss-Legendre sums of the concentric kernel over [a, b]."""
    cdef double s[MAXN]
    cdef double c[MAXN]
    cdef double half, mid, kj, wj
    cdef int j, m
    if mmax + 3 > MAXN:
        raise ValueError(f"order {mmax} exceeds the compiled buffer")
    with nogil:
        half = 0.5 * (b - a)
        mid = 0.5 * (a + b)
        for m in range(mmax + 1):
            s[m] = 0.0
        for j in range(12):
            kj = mid + half * GLX[j]
            wj = half * GLW[j]
            _conc_brackets_c(mmax, eta, kj, y, c)
            for m in range(mmax + 1):
                s[m] += wj * c[m]
    return tuple(s[m] for m in range(mmax + 1))
