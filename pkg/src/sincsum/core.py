"""Direct evaluation of the periodic sinc power sum.

The central object is S_r(x) = sum_{m in Z} |sinc(x+m)|^(2r) for r > 1/2,
where sinc is the normalized sin(pi t)/(pi t).  This module owns the typed
surface (EvalPoint, EvalConfig), input validation, and the truncation-order
selection for the direct route; the per-term arithmetic lives in the
backend kernels.

Truncation policy
-----------------
``power_sum`` picks the smallest half-width M such that the a-priori tail
gauge

    P(M) = 4 * |B_8|/8! * s(s+1)...(s+6) * pi^(-s) * (M+1)^(-s-7) + 1e-14

falls below the requested tolerance (s = 2r).  P(M) dominates the actual
post-correction tail bound produced by the kernel: the kernel evaluates the
two analytic tails with eight Euler-Maclaurin corrections at arguments
>= M+1, whose remainder gauge is at most the three-correction gauge P
estimates, while the fixed 1e-14 term covers floating-point accumulation.
A tolerance below that floor is therefore refused as unreachable rather
than promised dishonestly.
"""

import math
from dataclasses import dataclass

from . import backend
from .errors import DomainError, PrecisionError

#: Smallest admissible exponent parameter.  The sum diverges at r = 1/2;
#: the hard floor keeps callers away from the silent precision loss just
#: above it.
R_MIN = 0.501

#: Minimum half-width of the directly summed block.
M_FLOOR = 8

#: Absolute floor of any reported tail bound (floating-point slack).
TOL_FLOOR = backend.FLOAT_SLACK

_B8_OVER_8FACT = 1.0 / 1209600.0

EVAL_MODES = ("direct", "hurwitz", "polynomial", "consensus")


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation budget: tolerance, term cap, and method choice."""

    target_tol: float = 1e-12
    max_terms: int = 1_000_000
    mode: str = "consensus"

    def __post_init__(self):
        if not (self.target_tol > 0.0) or not math.isfinite(self.target_tol):
            raise DomainError(f"target_tol must be positive, got {self.target_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.mode not in EVAL_MODES:
            raise DomainError(f"mode must be one of {EVAL_MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class EvalPoint:
    """Exponent parameter r and evaluation point x in [0,1]."""

    r: float
    x: float

    def __post_init__(self):
        if not math.isfinite(self.r) or not math.isfinite(self.x):
            raise DomainError(f"non-finite evaluation point ({self.r}, {self.x})")
        if self.r <= R_MIN:
            raise DomainError(f"r must exceed {R_MIN} (sum diverges at 1/2), got {self.r}")
        if not 0.0 <= self.x <= 1.0:
            raise DomainError(f"x must lie in [0,1], got {self.x}")


DEFAULT_CONFIG = EvalConfig()


def sinc(x: float) -> float:
    """Normalized sinc sin(pi*x)/(pi*x); 1 at x = 0; even; |sinc| <= 1."""
    if not math.isfinite(x):
        raise DomainError(f"sinc requires finite input, got {x}")
    return backend.sinc(x)


def sinc_sq(x: float) -> float:
    """Square of the normalized sinc; vanishes exactly at nonzero integers."""
    if not math.isfinite(x):
        raise DomainError(f"sinc_sq requires finite input, got {x}")
    return backend.sinc_sq(x)


def _tail_gauge(s: float, m: int) -> float:
    """A-priori bound on the corrected tail error for half-width m."""
    poch = 1.0
    for i in range(7):
        poch *= s + i
    return 4.0 * _B8_OVER_8FACT * poch * math.exp(-s * math.log(math.pi)) * (
        (m + 1.0) ** (-s - 7.0)
    ) + TOL_FLOOR


def select_m_terms(r: float, target_tol: float, max_terms: int) -> int:
    """Smallest block half-width whose tail gauge meets ``target_tol``.

    Raises PrecisionError (carrying the achieved bound) when no admissible
    M can reach the tolerance, including tolerances below the
    floating-point floor.
    """
    s = 2.0 * r
    if target_tol <= TOL_FLOOR:
        raise PrecisionError(
            f"target_tol {target_tol:g} is below the floating-point floor "
            f"{TOL_FLOOR:g}",
            achieved_bound=_tail_gauge(s, max(max_terms, M_FLOOR)),
        )
    if _tail_gauge(s, M_FLOOR) <= target_tol:
        return M_FLOOR
    # Invert the power law for a starting guess, then fix up linearly.
    poch = 1.0
    for i in range(7):
        poch *= s + i
    coeff = 4.0 * _B8_OVER_8FACT * poch * math.exp(-s * math.log(math.pi))
    guess = int(math.exp(math.log(coeff / (target_tol - TOL_FLOOR)) / (s + 7.0))) + 1
    m = max(M_FLOOR, guess - 2)
    while _tail_gauge(s, m) > target_tol:
        m += 1
        if m > max_terms:
            raise PrecisionError(
                f"tail bound cannot reach {target_tol:g} within max_terms="
                f"{max_terms}",
                achieved_bound=_tail_gauge(s, max_terms),
            )
    while m > M_FLOOR and _tail_gauge(s, m - 1) <= target_tol:
        m -= 1
    if m > max_terms:
        raise PrecisionError(
            f"tail bound cannot reach {target_tol:g} within max_terms={max_terms}",
            achieved_bound=_tail_gauge(s, max_terms),
        )
    return m


def power_sum(p: EvalPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Direct evaluation of S_r(x); returns ``(value, tail_bound)``.

    The true sum differs from ``value`` by at most ``tail_bound``, which is
    itself at most ``cfg.target_tol``.
    """
    m = select_m_terms(p.r, cfg.target_tol, cfg.max_terms)
    return backend.power_sum_fixed(p.r, p.x, m)


def power_sum_fd_deriv(p: EvalPoint, step: float) -> float:
    """Central finite difference of S_r at x, endpoint tolerance step**3."""
    if not (step > 0.0) or not math.isfinite(step):
        raise DomainError(f"step must be positive and finite, got {step}")
    if not (0.0 < p.x - step and p.x + step < 1.0):
        raise DomainError(
            f"x +- step must stay inside (0,1); x={p.x}, step={step}"
        )
    tol = max(step * step * step, 4.0 * TOL_FLOOR)
    cfg = EvalConfig(target_tol=tol, mode="direct")
    hi, _ = power_sum(EvalPoint(p.r, p.x + step), cfg)
    lo, _ = power_sum(EvalPoint(p.r, p.x - step), cfg)
    return (hi - lo) / (2.0 * step)
