"""Pure-Python numerical core: scaled Bessel functions and mode kernels.

This is the fallback backend used when the compiled extension
(``casimir_gear._fastcore``) is unavailable.  The two implementations must
stay arithmetically identical, expression by expression, so that results do
not depend on which backend was selected (the extension is compiled with
FP contraction disabled for the same reason).

Conventions
-----------
All Bessel values are exponentially scaled:

    kv = e^x K_m(x),   iv = e^-x I_m(x)

and derivatives use the neighbor recurrences

    K'_m = -(K_{m-1} + K_{m+1})/2,   I'_m = (I_{m-1} + I_{m+1})/2.

Seeds for m = 0, 1 come from Chebyshev expansions (see ``_tables``); higher
orders follow by upward recurrence for K (stable, values grow) and by
downward recurrence for I from a continued-fraction ratio seed (stable,
values grow downward).  The mode-kernel brackets multiply scaled ratios by
an explicit exp(-lambda (y-1)) so the exponential decay never underflows
intermediate quantities.
"""

import math

from ._tables import (
    GL12_NODES,
    GL12_WEIGHTS,
    I0E_LARGE,
    I0E_SMALL,
    I1E_LARGE,
    I1E_SMALL_OVERX,
    K0E_LARGE,
    K0E_SMALL,
    K1E_LARGE,
    K1E_SMALL,
)

BACKEND = "pure"

_HUGE = 1e300


def _clenshaw(coeffs, t):
    """Evaluate sum_k c_k T_k(t) (c_0 not halved)."""
    b1 = 0.0
    b2 = 0.0
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = 2.0 * t * b1 - b2 + coeffs[k], b1
    return t * b1 - b2 + coeffs[0]


def i0e(x):
    """e^-x I_0(x) for x > 0."""
    if x <= 8.0:
        return _clenshaw(I0E_SMALL, x / 4.0 - 1.0)
    return _clenshaw(I0E_LARGE, 16.0 / x - 1.0) / math.sqrt(x)


def i1e(x):
    """e^-x I_1(x) for x > 0."""
    if x <= 8.0:
        return x * _clenshaw(I1E_SMALL_OVERX, x / 4.0 - 1.0)
    return _clenshaw(I1E_LARGE, 16.0 / x - 1.0) / math.sqrt(x)


def k0e(x):
    """e^x K_0(x) for x > 0."""
    if x <= 2.0:
        g = _clenshaw(K0E_SMALL, x * x / 2.0 - 1.0)
        ex = math.exp(x)
        return ex * (g - math.log(x / 2.0) * (ex * i0e(x)))
    return _clenshaw(K0E_LARGE, 4.0 / x - 1.0) / math.sqrt(x)


def k1e(x):
    """e^x K_1(x) for x > 0."""
    if x <= 2.0:
        h = _clenshaw(K1E_SMALL, x * x / 2.0 - 1.0)
        ex = math.exp(x)
        return ex * ((1.0 + h) / x + math.log(x / 2.0) * (ex * i1e(x)))
    return _clenshaw(K1E_LARGE, 4.0 / x - 1.0) / math.sqrt(x)


def kv_seq(n, x):
    """Tuple (e^x K_0(x), ..., e^x K_n(x)) by upward recurrence.

    Entries that overflow the double range come back as +inf; callers that
    need the adjacent order for a derivative should stay below order 64 at
    x >= 1e-3 where everything is finite.
    """
    k0 = k0e(x)
    if n == 0:
        return (k0,)
    k1 = k1e(x)
    out = [0.0] * (n + 1)
    out[0] = k0
    out[1] = k1
    tox = 2.0 / x
    for m in range(1, n):
        k0, k1 = k1, k0 + (m * tox) * k1
        out[m + 1] = k1
    return tuple(out)


def _iv_ratio(n, x):
    """Continued fraction for I_{n+1}(x) / I_n(x) (modified Lentz)."""
    tiny = 1e-300
    f = tiny
    c = f
    d = 0.0
    k = 1
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
        if abs(delta - 1.0) < 1e-16 or k > 10000:
            return f
        k += 1


def iv_seq(n, x):
    """Tuple (e^-x I_0(x), ..., e^-x I_n(x)).

    Seeds the top order from a continued-fraction ratio combined with the
    Wronskian  iv_m kv_{m+1} + iv_{m+1} kv_m = 1/x,  then fills downward.
    If kv_{n+1} overflows (extreme order at tiny x), the seed order is
    lowered and the entries above it are set to 0.0; their true values are
    below ~1e-300.
    """
    kv = kv_seq(n + 1, x)
    ns = n
    while ns > 0 and not (kv[ns + 1] < _HUGE):
        ns -= 1
    out = [0.0] * (n + 1)
    r = _iv_ratio(ns, x)
    here = 1.0 / (x * (kv[ns + 1] + r * kv[ns]))  # iv_{ns}
    above = r * here                              # iv_{ns+1}
    out[ns] = here
    if ns + 1 <= n:
        out[ns + 1] = above
    # entries above ns+1 stay 0.0; downward: iv_{m-1} = iv_{m+1} + (2m/x) iv_m
    for m in range(ns, 0, -1):
        below = above + (2.0 * m / x) * here
        out[m - 1] = below
        above = here
        here = below
    return tuple(out)


def open_brackets(mmax, eta, kz, y):
    """Kernel brackets for the open gear at one (eta, kz) node.

    Returns (f1, f2), tuples indexed by mode order m = 0..mmax:

      f1[m] = e^-lam(y-1) * m * [ kz^2/(lam^2 y) * kv_m(lam y)/kv_m(lam)
                                + eta^2/lam^2 * kv'_m(lam y)/kv'_m(lam) ]
      f2[m] = e^-lam(y-1) * [ kz^2/lam * kv'_m(lam y)/kv_m(lam)
                            + eta^2 m^2/(lam^3 y) * kv_m(lam y)/kv'_m(lam) ]

    f1 is the azimuthal (TE-like) channel, odd in m; f2 the radial
    (TM-like) channel, even in m.
    """
    # sqrt form (not math.hypot): CPython's hypot is correctly rounded and
    # differs from libm's by 1 ulp on some inputs; the compiled twin must match.
    lam = math.sqrt(eta * eta + kz * kz)
    x1 = lam
    x2 = lam * y
    n = mmax + 1
    kv1 = kv_seq(n, x1)
    kv2 = kv_seq(n, x2)
    expfac = math.exp(-lam * (y - 1.0))
    lam2 = lam * lam
    kz2 = kz * kz
    eta2 = eta * eta
    c1 = kz2 / (lam2 * y)
    c2 = eta2 / lam2
    d1 = kz2 / lam
    d2 = eta2 / (lam2 * lam * y)
    f1 = [0.0] * (mmax + 1)
    f2 = [0.0] * (mmax + 1)
    for m in range(mmax + 1):
        lo = 1 if m == 0 else m - 1
        kp1 = -0.5 * (kv1[lo] + kv1[m + 1])
        kp2 = -0.5 * (kv2[lo] + kv2[m + 1])
        if m > 0:
            f1[m] = expfac * m * (c1 * (kv2[m] / kv1[m]) + c2 * (kp2 / kp1))
        f2[m] = expfac * (d1 * (kp2 / kv1[m]) + (d2 * m * m) * (kv2[m] / kp1))
    return tuple(f1), tuple(f2)


def conc_brackets(mmax, eta, kz, y):
    """Surface-to-surface radial kernel for the concentric gear.

    Returns a tuple c[0..mmax], even in m:

      c[m] = e^-lam(y-1) * [ eta^2 m^2 / (lam^4 y^2 Dp_m)
                             - kz^2 / (lam^2 y D_m) ]

    with the scaled cross-Wronskian denominators

      D_m  = iv_m(lam) kv_m(lam y) e^-2lam(y-1) - iv_m(lam y) kv_m(lam)
      Dp_m = iv'_m(lam) kv'_m(lam y) e^-2lam(y-1) - iv'_m(lam y) kv'_m(lam)

    (D_m < 0 and Dp_m > 0 for all real lam > 0, y > 1, so both kernel
    terms are positive.)
    """
    lam = math.sqrt(eta * eta + kz * kz)
    x1 = lam
    x2 = lam * y
    n = mmax + 1
    kv1 = kv_seq(n, x1)
    kv2 = kv_seq(n, x2)
    iv1 = iv_seq(n, x1)
    iv2 = iv_seq(n, x2)
    e1 = math.exp(-lam * (y - 1.0))
    e2 = e1 * e1
    lam2 = lam * lam
    kz2 = kz * kz
    eta2 = eta * eta
    a1 = eta2 / (lam2 * lam2 * y * y)
    a2 = kz2 / (lam2 * y)
    out = [0.0] * (mmax + 1)
    for m in range(mmax + 1):
        lo = 1 if m == 0 else m - 1
        kp1 = -0.5 * (kv1[lo] + kv1[m + 1])
        kp2 = -0.5 * (kv2[lo] + kv2[m + 1])
        ip1 = 0.5 * (iv1[lo] + iv1[m + 1])
        ip2 = 0.5 * (iv2[lo] + iv2[m + 1])
        dd = iv1[m] * kv2[m] * e2 - iv2[m] * kv1[m]
        dp = ip1 * kp2 * e2 - ip2 * kp1
        t1 = (a1 * m * m) / dp if m > 0 else 0.0
        out[m] = e1 * (t1 - a2 / dd)
    return tuple(out)


def gl12_open_panel(mmax, eta, y, a, b):
    """12-point Gauss-Legendre sums of the open-gear brackets over kz in [a, b].

    Returns (s1, s2) with s_i[m] = sum_j w_j f_i(m, eta, k_j, y).
    """
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    s1 = [0.0] * (mmax + 1)
    s2 = [0.0] * (mmax + 1)
    for j in range(12):
        kj = mid + half * GL12_NODES[j]
        wj = half * GL12_WEIGHTS[j]
        f1, f2 = open_brackets(mmax, eta, kj, y)
        for m in range(mmax + 1):
            s1[m] += wj * f1[m]
            s2[m] += wj * f2[m]
    return tuple(s1), tuple(s2)


def gl12_conc_panel(mmax, eta, y, a, b):
    """12-point Gauss-Legendre sums of the concentric kernel over kz in [a, b]."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    s = [0.0] * (mmax + 1)
    for j in range(12):
        kj = mid + half * GL12_NODES[j]
        wj = half * GL12_WEIGHTS[j]
        c = conc_brackets(mmax, eta, kj, y)
        for m in range(mmax + 1):
            s[m] += wj * c[m]
    return tuple(s)
