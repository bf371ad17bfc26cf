"""Exact rational polynomials representing the power sum at integer order.

For integer r >= 1 the periodic sum S_r(x) equals P_r(y) with y = cos^2(pi x),
where P_r is a polynomial of degree r-1 with nonnegative rational
coefficients summing to 1.  P_{r+1} is produced from P_r by the differential
operator recursion

    P_{r+1} = [4y(r - yD)^2 + 8(r - yD)yD + 2yD + 2r + 4yD^2 + 2D] P_r
              / (2r (2r + 1)),

with D = d/dy, applied in exactly that grouping using elementary polynomial
operations (differentiate, multiply by y, scalar combine).  The scaling
1/(2r(2r+1)) equals (2r-1)!/(2r+1)!.

Nonnegativity of the coefficients is an exact certificate that the minimum
of P_r over y in [0,1] sits at y = 0, i.e. the power sum minimum over x is
at x = 1/2, with minimum value P_r(0) = coeffs[0].
"""

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateError, SizeLimitError

#: Largest supported polynomial order; keeps the exact factorial scaling
#: and coefficient bit-growth desk-scale.
R_CAP = 100

_MIN_STATEMENT = (
    "all coefficients are nonnegative, so the minimum of P_r over y in [0,1] "
    "is at y = 0; hence the power sum attains its minimum at x = 1/2"
)


@dataclass(frozen=True)
class SincPolynomial:
    """P_r as a dense ascending-power coefficient list in y = cos^2(pi x)."""

    r: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.r < 1:
            raise CertificateError(f"polynomial order must be >= 1, got {self.r}")
        if len(self.coeffs) != self.r:
            raise CertificateError(
                f"P_{self.r} needs exactly {self.r} coefficients, got {len(self.coeffs)}"
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _deriv(c: list[Fraction]) -> list[Fraction]:
    return [k * c[k] for k in range(1, len(c))]


def _times_y(c: list[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + c if c else []


def _add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return out


def _scale(c: list[Fraction], f: Fraction) -> list[Fraction]:
    return [f * v for v in c]


def _r_minus_yd(c: list[Fraction], r: int) -> list[Fraction]:
    # y*D acts diagonally on monomials: (r - yD) y^k = (r - k) y^k.
    return [(r - k) * v for k, v in enumerate(c)]


def poly_step(p: SincPolynomial) -> SincPolynomial:
    """One application of the operator recursion: P_r -> P_{r+1}."""
    r = p.r
    if r + 1 > R_CAP:
        raise SizeLimitError(f"polynomial order {r + 1} exceeds cap {R_CAP}")
    c = list(p.coeffs)
    dc = _deriv(c)

    term1 = _scale(_times_y(_r_minus_yd(_r_minus_yd(c, r), r)), Fraction(4))
    term2 = _scale(_r_minus_yd(_times_y(dc), r), Fraction(8))
    term3 = _scale(_times_y(dc), Fraction(2))
    term4 = _scale(c, Fraction(2 * r))
    term5 = _scale(_times_y(_deriv(dc)), Fraction(4))
    term6 = _scale(dc, Fraction(2))

    total = term1
    for t in (term2, term3, term4, term5, term6):
        total = _add(total, t)
    total = _scale(total, Fraction(1, 2 * r * (2 * r + 1)))

    while len(total) < r + 1:
        total.append(Fraction(0))
    return SincPolynomial(r=r + 1, coeffs=tuple(total[: r + 1]))


_poly_cache: dict[int, SincPolynomial] = {1: SincPolynomial(1, (Fraction(1),))}
_poly_lock = threading.Lock()


def poly_f(r: int) -> SincPolynomial:
    """P_r by iterating the recursion from P_1 = 1, with all invariants checked."""
    if not isinstance(r, int) or r < 1 or r > R_CAP:
        raise SizeLimitError(f"r must be an integer in [1, {R_CAP}], got {r!r}")
    if r not in _poly_cache:
        with _poly_lock:
            top = max(_poly_cache)
            p = _poly_cache[top]
            for k in range(top, r):
                p = poly_step(p)
                _check_invariants(p)
                _poly_cache[k + 1] = p
    return _poly_cache[r]


def _check_invariants(p: SincPolynomial) -> None:
    if p.coeffs[-1] == 0:
        raise CertificateError(f"P_{p.r} has degree below {p.r - 1}")
    if any(c < 0 for c in p.coeffs):
        raise CertificateError(f"P_{p.r} has a negative coefficient")
    if sum(p.coeffs, Fraction(0)) != 1:
        raise CertificateError(f"P_{p.r} coefficients do not sum to 1")


def poly_eval(p: SincPolynomial, x: float) -> float:
    """Horner evaluation at y = cos^2(pi x), coefficients floated once."""
    if not 0.0 <= x <= 1.0:
        raise CertificateError(f"x must lie in [0,1], got {x}")
    cp = math.cos(math.pi * x)
    y = cp * cp
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * y + float(c)
    return acc


def poly_min_certificate(p: SincPolynomial) -> tuple[Fraction, str]:
    """Exact minimum certificate: verify nonnegativity, return (P_r(0), why).

    A negative coefficient would invalidate the argument entirely, so it
    raises rather than returning a wrong certificate.
    """
    for k, c in enumerate(p.coeffs):
        if c < 0:
            raise CertificateError(
                f"coefficient of y^{k} in P_{p.r} is negative ({c}); "
                "nonnegativity certificate fails"
            )
    return p.coeffs[0], _MIN_STATEMENT
