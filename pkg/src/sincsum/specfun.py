"""Special functions backing the closed-form power sum routes.

Exact pieces (Bernoulli numbers, rational even-argument zeta values) use
``fractions.Fraction``; floating pieces delegate to the backend's
Euler-Maclaurin Hurwitz zeta kernel.

Conventions: Bernoulli numbers with B_1 = -1/2, generated from the defining
recurrence sum_{k<=n} C(n+1,k) B_k = 0.  Even-argument zeta values come from
zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!).
"""

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .core import EvalPoint
from .errors import DomainError, PrecisionError, SizeLimitError

#: Exact integer factorials are used for scalings up to argument 201
#: (polynomial order cap 100); larger requests are refused.
FACTORIAL_CAP = 201

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n_max: int) -> list[Fraction]:
    """Exact Bernoulli numbers B_0..B_{n_max} (convention B_1 = -1/2).

    Computed from the defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0,
    solved for B_n.  The cache grows under a lock and entries are never
    mutated, so concurrent callers observe an immutable table.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    if len(_bernoulli_cache) <= n_max:
        with _bernoulli_lock:
            while len(_bernoulli_cache) <= n_max:
                n = len(_bernoulli_cache)
                acc = Fraction(0)
                for k in range(n):
                    acc += math.comb(n + 1, k) * _bernoulli_cache[k]
                _bernoulli_cache.append(-acc / (n + 1))
    return _bernoulli_cache[: n_max + 1]


@dataclass(frozen=True)
class ZetaEvenValue:
    """zeta(2n) as an exact rational multiple of pi^(2n) plus its float."""

    n: int
    rational_part: Fraction
    float_value: float


def zeta_even(n: int) -> ZetaEvenValue:
    """zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!), exactly."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if 2 * n > FACTORIAL_CAP:
        raise SizeLimitError(f"2n = {2*n} exceeds exact factorial cap {FACTORIAL_CAP}")
    b2n = bernoulli(2 * n)[2 * n]
    rational = (-1) ** (n + 1) * b2n * Fraction(2 ** (2 * n), 2 * math.factorial(2 * n))
    value = float(rational) * math.pi ** (2 * n)
    return ZetaEvenValue(n=n, rational_part=rational, float_value=value)


def hurwitz_zeta(s: float, a: float) -> float:
    """sum_{k>=0} (k+a)^(-s) for s > 1 + 1e-9 and a in (0, 2]."""
    if not math.isfinite(s) or s <= 1.0 + 1e-9:
        raise DomainError(f"s must exceed 1 + 1e-9 (pole at 1), got {s}")
    if not (0.0 < a <= 2.0) or not math.isfinite(a):
        raise DomainError(f"a must lie in (0, 2], got {a}")
    value, gauge = backend.zeta_em(s, a)
    if not math.isfinite(value):
        raise PrecisionError(
            f"hurwitz_zeta({s}, {a}) exceeds floating-point range",
            achieved_bound=math.inf,
        )
    if gauge > 1e-12 * max(1.0, abs(value)):
        raise PrecisionError(
            f"hurwitz_zeta({s}, {a}) could not certify 1e-13 accuracy",
            achieved_bound=gauge,
        )
    return value


def hurwitz_zeta_da(s: float, a: float) -> float:
    """d/da of the Hurwitz zeta: -s * zeta(s+1, a)."""
    if not math.isfinite(s) or s <= 1.0 + 1e-9:
        raise DomainError(f"s must exceed 1 + 1e-9 (pole at 1), got {s}")
    return -s * hurwitz_zeta(s + 1.0, a)


def power_sum_zeta(p: EvalPoint) -> float:
    """Closed-form power sum value via the Hurwitz zeta pair.

    S_r(x) = (|sin(pi x)|/pi)^(2r) * (zeta(2r,x) + zeta(2r,1-x)); valid for
    real r > 1/2 because the sum is over |sinc|^(2r).  Endpoints return the
    continuous value 1.
    """
    return backend.power_sum_zeta(p.r, p.x)


def power_sum_deriv(p: EvalPoint) -> float:
    """Analytic derivative of S_r at x in (0,1); antisymmetric about 1/2."""
    if not (0.0 < p.x < 1.0):
        raise DomainError(f"derivative route requires x in (0,1), got {p.x}")
    return backend.power_sum_deriv(p.r, p.x)


def polygamma_even_series(n: int, x: float) -> float:
    """Even-order polygamma psi^(2n)(x) = -(2n)! * zeta(2n+1, x).

    Only the series form is used; n is capped both by the exact-factorial
    limit and by the double range ((2n)! overflows past 170!).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if 2 * n + 1 > FACTORIAL_CAP:
        raise SizeLimitError(
            f"2n+1 = {2*n+1} exceeds exact factorial cap {FACTORIAL_CAP}"
        )
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0,1), got {x}")
    fact = math.factorial(2 * n)
    if fact > 1.7e308:
        raise PrecisionError(
            f"(2n)! with n={n} exceeds floating-point range", achieved_bound=math.inf
        )
    value, _ = backend.zeta_em(2.0 * n + 1.0, x)
    return -float(fact) * value


def power_sum_half_integer(n: int, x: float) -> float:
    """Power sum at half-integer exponent r = n + 1/2 via polygamma values.

    S_{n+1/2}(x) = pi^-(2n+1) |sin(pi x)|^(2n+1) * (-1/(2n)!) *
    (psi^(2n)(x) + psi^(2n)(1-x)); an independent route used to cross-check
    the zeta evaluation at odd powers.  Endpoints return 1 by continuity.
    """
    if x <= 0.0 or x >= 1.0:
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"x must lie in [0,1], got {x}")
        return 1.0
    pg = polygamma_even_series(n, x) + polygamma_even_series(n, 1.0 - x)
    s = 2 * n + 1
    sp = math.sin(math.pi * x)
    pref = math.exp(s * (math.log(sp) - math.log(math.pi)))
    return pref * (-pg / float(math.factorial(2 * n)))
