"""Independent oracles used across the test suite.

Everything here deliberately avoids the package's own evaluation paths:
plain partial sums with elementary integral sandwiches for tails, and
mpmath (a wholly separate implementation) for high-precision references.
"""

import math

import mpmath as mp

mp.mp.dps = 40


def tail_sandwich(s: float, w: float) -> tuple[float, float]:
    """Enclosure of sum_{j>=0} (w+j)^(-s) by elementary integral comparison.

    For the decreasing convex integrand t -> t^(-s): the midpoint rule
    overestimates cell integrals, so the sum is at most the integral from
    w - 1/2; the trapezoid rule underestimates, so the sum is at least the
    integral from w plus half the first term.  Returns (value, half_width).
    """
    upper = (w - 0.5) ** (1.0 - s) / (s - 1.0)
    lower = w ** (1.0 - s) / (s - 1.0) + 0.5 * w ** (-s)
    return 0.5 * (upper + lower), 0.5 * (upper - lower)


def zeta_brute(s: float, a: float, terms: int = 100_000) -> tuple[float, float]:
    """Hurwitz zeta by direct summation plus a sandwiched tail.

    Returns (value, error_bound); the bound is the sandwich half-width
    plus a rounding allowance for the long float sum.
    """
    acc = math.fsum((k + a) ** (-s) for k in range(terms))
    tail, half = tail_sandwich(s, terms + a)
    return acc + tail, half + 1e-15 * abs(acc)


def power_sum_brute(r: float, x: float, terms: int = 20_000) -> tuple[float, float]:
    """The sinc power sum by direct summation plus sandwiched tails."""
    s = 2.0 * r

    def h_pow(t: float) -> float:
        if t == 0.0:
            return 1.0
        u = math.sin(math.pi * t) / (math.pi * t)
        if u == 0.0:
            return 0.0
        return abs(u) ** s

    acc = math.fsum(h_pow(x + m) for m in range(-terms, terms + 1))
    sp = abs(math.sin(math.pi * x))
    if sp == 0.0:
        return acc, 1e-15
    pref = (sp / math.pi) ** s
    t_right, e_right = tail_sandwich(s, terms + 1.0 + x)
    t_left, e_left = tail_sandwich(s, terms + 1.0 - x)
    value = acc + pref * (t_right + t_left)
    return value, pref * (e_right + e_left) + 1e-14


def power_sum_mp(r, x, dps: int = 40) -> mp.mpf:
    """High-precision reference via mpmath's own Hurwitz zeta."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        if xm == 0 or xm == 1:
            return mp.mpf(1)
        s = 2 * mp.mpf(r)
        pref = (mp.sin(mp.pi * xm) / mp.pi) ** s
        return pref * (mp.zeta(s, xm) + mp.zeta(s, 1 - xm))


def power_sum_deriv_mp(r, x, dps: int = 40) -> mp.mpf:
    """High-precision derivative via mpmath differentiation."""
    with mp.workdps(dps):
        return mp.diff(lambda t: power_sum_mp(r, t, dps=dps + 10), mp.mpf(x))


def uniform_grid(n: int) -> list[float]:
    return [i / (n - 1) for i in range(n)]
