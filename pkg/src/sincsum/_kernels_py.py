"""Pure-Python scalar kernels for the periodic sinc power sum.

This module is one of two interchangeable backends (the other is the Cython
twin ``sincsum._kernels_cy``); ``sincsum.backend`` picks one at import time.
Everything here is a plain function of floats with no package dependencies,
so the compiled twin can mirror it statement for statement.

Definitions
-----------
``sinc(x)``
    Normalized sinc, sin(pi*x)/(pi*x), continuously extended to 1 at x = 0.
``sinc_sq(x)``
    Its square; the nonnegative kernel whose integer translates are summed.
``power_sum_*`` family
    S_r(x) = sum over all integers m of |sinc(x+m)|^(2r), the periodic
    power sum; it converges for r > 1/2, has period 1, and is symmetric
    about x = 1/2.
``zeta_em(s, a)``
    Hurwitz zeta sum_{k>=0} (k+a)^(-s) for s > 1, a > 0.

Error control
-------------
``zeta_em`` uses Euler-Maclaurin: after N leading terms (w := N + a),

    zeta(s,a) = sum_{k<N} (k+a)^(-s) + w^(1-s)/(s-1) + w^(-s)/2
                + sum_{j=1..8} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^(-s-2j+1)
                + R,

where for real s > 1 the remainder R is bounded in absolute value by the
first omitted correction term (the integrand t -> (t+a)^(-s) is completely
monotone, so the correction series is enveloping).  N is doubled until that
gauge drops below 1e-14 (or below 1e-16 relative for very large values).

``power_sum_fixed`` sums the 2M+1 central terms directly, largest |m| first
with Kahan compensation, then adds the two analytic tails.  For m > M every
term factors as (|sin(pi*x)|/pi)^(2r) * (m +- x)^(-2r), so each tail equals
that prefactor times a Hurwitz zeta value at argument M+1+-x, which
``zeta_em`` evaluates with a proven remainder gauge.  The reported
``tail_bound`` is prefactor * (left gauge + right gauge) plus a fixed
1e-14 floating-point slack covering rounding of the compensated sum.
"""

import math

PI = math.pi
LOG_PI = math.log(math.pi)

# B_{2j}/(2j)! for j = 1..8, exact rationals rounded once to double.
_EM_COEF = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
)
# |B_18|/18!, the gauge coefficient for the first omitted correction.
_EM_NEXT = 43867.0 / 5109094217170944000.0

# Floating-point slack added to every reported tail bound: covers Kahan
# summation residue and the final few uncommitted roundings.
FLOAT_SLACK = 1e-14


def backend_name() -> str:
    return "python"


def sinc(x: float) -> float:
    """sin(pi*x)/(pi*x) with the removable singularity filled in.

    Below |x| = 1e-4 the quotient is replaced by the Taylor polynomial
    1 - (pi*x)^2/6 + (pi*x)^4/120; the first omitted term is below 2e-25
    there, so the switch keeps relative error at machine epsilon without
    the cancellation of evaluating sin at denormal-scale arguments.
    """
    if abs(x) < 1e-4:
        t = PI * x
        u = t * t
        return 1.0 - u / 6.0 + (u * u) / 120.0
    if x == math.floor(x):
        return 0.0  # sin(pi*m) is exactly 0 at integers; libm's is not
    t = PI * x
    return math.sin(t) / t


def sinc_sq(x: float) -> float:
    """sinc(x)**2, the translate kernel of the power sum."""
    s = sinc(x)
    return s * s


# d/dx sinc(x) = (cos(pi*x) - sinc(x))/x; near zero that difference cancels,
# so use sinc'(x) = pi^2 * x * G((pi*x)^2) with the alternating series
# G(u) = -1/3 + u/30 - u^2/840 + ..., coefficients (-1)^k 2k/(2k+1)!.
_DSINC_COEF = (
    -1.0 / 3.0,
    1.0 / 30.0,
    -1.0 / 840.0,
    1.0 / 45360.0,
    -1.0 / 3991680.0,
    1.0 / 518918400.0,
    -7.0 / 653837184000.0,
    1.0 / 22230464256000.0,
)


def dsinc(x: float) -> float:
    """Derivative of the normalized sinc."""
    if abs(x) < 0.125:
        u = (PI * x) * (PI * x)
        g = _DSINC_COEF[7]
        for k in range(6, -1, -1):
            g = g * u + _DSINC_COEF[k]
        return PI * PI * x * g
    return (math.cos(PI * x) - sinc(x)) / x


def zeta_em(s: float, a: float) -> tuple[float, float]:
    """Hurwitz zeta sum_{k>=0}(k+a)^(-s) with a proven remainder gauge.

    Returns ``(value, gauge)`` where ``gauge`` is the magnitude of the first
    omitted Euler-Maclaurin correction, an upper bound on the truncation
    error for real s > 1.  N starts at 24 leading terms (0 when a is already
    >= 24) and doubles until the gauge is below 1e-14 absolute or 1e-16
    relative.
    """
    n = 0 if a >= 24.0 else 24
    while True:
        w = n + a
        acc = 0.0
        c = 0.0
        for k in range(n - 1, -1, -1):
            term = (k + a) ** (-s)
            y = term - c
            t = acc + y
            c = (t - acc) - y
            acc = t
        base = w ** (-s)
        total = acc + base * w / (s - 1.0) + 0.5 * base
        w2 = w * w
        g = base * s / w
        corr = 0.0
        j = 1
        for coef in _EM_COEF:
            corr += coef * g
            g *= (s + 2.0 * j - 1.0) * (s + 2.0 * j) / w2
            j += 1
        total += corr
        gauge = _EM_NEXT * g
        if gauge <= 1e-14 or gauge <= 1e-16 * abs(total) or n >= 1 << 16:
            return total, gauge
        n = n * 2 if n else 24


def _abs_sinc_pow(x: float, s: float) -> float:
    """|sinc(x)|^s via exp(s*log|sinc|); exactly 0 when sinc vanishes."""
    u = sinc(x)
    if u == 0.0:
        return 0.0
    return math.exp(s * math.log(abs(u)))


def power_sum_fixed(r: float, x: float, m_terms: int) -> tuple[float, float]:
    """Central block of 2*m_terms+1 sinc powers plus analytic tails.

    Returns ``(value, tail_bound)`` with |S_r(x) - value| <= tail_bound.
    Terms are accumulated from the largest |m| inward with Kahan
    compensation so the small terms are added first.
    """
    s = 2.0 * r
    acc = 0.0
    c = 0.0
    for k in range(m_terms, 0, -1):
        for xm in (x + k, x - k):
            term = _abs_sinc_pow(xm, s)
            if term != 0.0:
                y = term - c
                t = acc + y
                c = (t - acc) - y
                acc = t
    term = _abs_sinc_pow(x, s)
    y = term - c
    acc = acc + y

    sp = abs(math.sin(PI * x))
    if sp == 0.0:
        return acc, FLOAT_SLACK
    pref = math.exp(s * (math.log(sp) - LOG_PI))
    if pref == 0.0:
        return acc, FLOAT_SLACK
    z_right, g_right = zeta_em(s, m_terms + 1.0 + x)
    z_left, g_left = zeta_em(s, m_terms + 1.0 - x)
    value = acc + pref * (z_right + z_left)
    tail_bound = pref * (g_right + g_left) + FLOAT_SLACK
    return value, tail_bound


def power_sum_zeta(r: float, x: float) -> float:
    """Closed-form route: prefactor times a pair of Hurwitz zeta values.

    S_r(x) = (|sin(pi x)|/pi)^(2r) * (zeta(2r,x) + zeta(2r,1-x)) on (0,1);
    the m = 0 and m = -1 terms are peeled off as |sinc(x)|^(2r) and
    |sinc(x-1)|^(2r) so no intermediate overflows for large r, leaving
    zeta arguments in (1,2).  Endpoints return the continuous value 1.
    """
    if x <= 0.0 or x >= 1.0:
        return 1.0
    s = 2.0 * r
    head = _abs_sinc_pow(x, s) + _abs_sinc_pow(x - 1.0, s)
    sp = math.sin(PI * x)
    pref = math.exp(s * (math.log(sp) - LOG_PI))
    if pref == 0.0:
        return head
    z0, _ = zeta_em(s, 1.0 + x)
    z1, _ = zeta_em(s, 2.0 - x)
    return head + pref * (z0 + z1)


def power_sum_deriv(r: float, x: float) -> float:
    """d/dx of the power sum via the closed form, for x in (0,1).

    Differentiates head + pref*(zeta(2r,1+x) + zeta(2r,2-x)) term by term:
    the head uses d/dx u^s = s u^(s-1) u' with u = sinc, the prefactor
    derivative is computed in log space so sin(pi x)^(2r-1) never overflows
    or turns into 0 * inf, and d/da zeta(s,a) = -s zeta(s+1,a).
    """
    s = 2.0 * r
    u = sinc(x)
    du = dsinc(x)
    v = sinc(x - 1.0)
    dv = dsinc(x - 1.0)
    d_head = s * math.exp((s - 1.0) * math.log(u)) * du
    d_head += s * math.exp((s - 1.0) * math.log(v)) * dv

    sp = math.sin(PI * x)
    lsp = math.log(sp)
    pref = math.exp(s * (lsp - LOG_PI))
    d_pref = s * PI * math.cos(PI * x) * math.exp((s - 1.0) * lsp - s * LOG_PI)

    z0, _ = zeta_em(s, 1.0 + x)
    z1, _ = zeta_em(s, 2.0 - x)
    dz0, _ = zeta_em(s + 1.0, 1.0 + x)
    dz1, _ = zeta_em(s + 1.0, 2.0 - x)
    return d_head + d_pref * (z0 + z1) + pref * s * (dz1 - dz0)
