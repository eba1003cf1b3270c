"""Samskaram: fixed-depth recursive refinement.

Covers the reciprocal expansion of 1/(x - d), the two square-root schemes
and the cosine interpolation recursion with its sin(delta/2) ~ delta/2
shortcut.  Iteration depth is always explicit; nothing stops on a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError, FixedDecimal, Polynomial, RationalLike, as_rational, to_fixed
from .series import eval_trig

__all__ = [
    "RefinementTrace",
    "refine_reciprocal",
    "reciprocal_remainder",
    "sqrt_bakshali",
    "sqrt_heron",
    "compare_sqrt_methods",
    "InterpolationCoefficients",
    "cosine_interpolation_coefficients",
    "cosine_interpolate",
    "TAYLOR_DELTA3_SINE",
]

MAX_INTERPOLATION_ORDER = 3
TAYLOR_DELTA3_SINE = Fraction(1, 6)


@dataclass(frozen=True)
class RefinementTrace:
    iterates: tuple[Fraction, ...]
    method: str

    def __post_init__(self) -> None:
        if not self.iterates:
            raise DomainError("a refinement trace needs at least one iterate")

    def __len__(self) -> int:
        return len(self.iterates)

    def __getitem__(self, i: int) -> Fraction:
        return self.iterates[i]

    @property
    def last(self) -> Fraction:
        return self.iterates[-1]


def refine_reciprocal(x: RationalLike, d: RationalLike, terms: int) -> Fraction:
    """1/x + (1/x) * sum_{n=1..terms} (d/x)**n, the truncated expansion of 1/(x - d).

    Raises DomainError for x == 0 and for |d| >= |x|, where the geometric
    series diverges.
    """
    x, d = as_rational(x), as_rational(d)
    if x == 0:
        raise DomainError("x must be non-zero")
    if abs(d) >= abs(x):
        raise DomainError(f"divergent regime: |d| = {abs(d)} is not below |x| = {abs(x)}")
    if terms < 0:
        raise DomainError("terms must be non-negative")
    ratio = d / x
    acc = Fraction(0)
    power = Fraction(1)
    for _ in range(terms):
        power *= ratio
        acc += power
    return (1 + acc) / x


def reciprocal_remainder(x: RationalLike, d: RationalLike, terms: int) -> Fraction:
    """Closed-form truncation error 1/(x - d) - refine_reciprocal(x, d, terms)."""
    x, d = as_rational(x), as_rational(d)
    return (d / x) ** (terms + 1) / (x - d)


def _check_sqrt_args(n: Fraction, m: Fraction, iterations: int) -> None:
    if n <= 0:
        raise DomainError("n must be positive")
    if m <= 0:
        raise DomainError("seed m must be positive")
    if iterations < 1:
        raise DomainError("at least one iteration is required")


def sqrt_bakshali(n: RationalLike, m: RationalLike, iterations: int) -> RefinementTrace:
    """Square root by the correction-term recursion.

    With n = m**2 + r the first iterate is m + c1, c1 = r/(2m).  Squaring an
    iterate a_j = a_{j-1} - c_j leaves exactly c_j**2 over n, so the next
    correction is c_{j+1} = c_j**2 / (2 a_j).  For j = 2 this gives
    m + r/2m - (r/2m)**2 / (2(m + r/2m)).
    """
    n, m = as_rational(n), as_rational(m)
    _check_sqrt_args(n, m, iterations)
    if m * m > n:
        raise DomainError("seed m must satisfy m**2 <= n")
    c = (n - m * m) / (2 * m)
    a = m + c
    out = [a]
    for _ in range(iterations - 1):
        c = c * c / (2 * a)
        a -= c
        out.append(a)
    return RefinementTrace(tuple(out), "bakshali")


def sqrt_heron(n: RationalLike, m: RationalLike, iterations: int) -> RefinementTrace:
    """Square root by repeated averaging a -> (a + n/a)/2, starting from the seed m."""
    n, m = as_rational(n), as_rational(m)
    _check_sqrt_args(n, m, iterations)
    a = m
    out = []
    for _ in range(iterations):
        a = (a + n / a) / 2
        out.append(a)
    return RefinementTrace(tuple(out), "heron")


def compare_sqrt_methods(n: RationalLike, m: RationalLike, iterations: int, reference: Fraction) -> dict:
    """Which scheme ends closer to ``reference`` after ``iterations`` steps.

    ``n`` is a parameter, so the same comparison serves sqrt(5) and sqrt(95).
    """
    b = sqrt_bakshali(n, m, iterations)
    h = sqrt_heron(n, m, iterations)
    eb, eh = abs(b.last - reference), abs(h.last - reference)
    closer = "tie" if eb == eh else ("bakshali" if eb < eh else "heron")
    return {"bakshali": b, "heron": h, "bakshali_error": eb, "heron_error": eh, "closer": closer}


@dataclass(frozen=True)
class InterpolationCoefficients:
    """cos(theta + delta) ~ cos_part(delta) * cos(theta) + sin_part(delta) * sin(theta)."""

    order: int
    cos_part: Polynomial
    sin_part: Polynomial

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        """(cos coefficient, sin coefficient) for delta**0 .. delta**order."""
        top = max(self.cos_part.degree, self.sin_part.degree, 0)
        return [(self.cos_part.coefficient(k), self.sin_part.coefficient(k)) for k in range(top + 1)]


def _shifted(order: int, want_cosine: bool) -> tuple[Polynomial, Polynomial]:
    # Approximations of cos(theta + h) / sin(theta + h) as (cos-part, sin-part)
    # polynomials in h, after `order` substitutions of
    #   cos(t + h) = cos t - h sin(t + h/2),  sin(t + h) = sin t + h cos(t + h/2)
    # and dropping the shift at depth zero.
    if order == 0:
        one = Polynomial.constant(1)
        return (one, Polynomial()) if want_cosine else (Polynomial(), one)
    inner_c, inner_s = _shifted(order - 1, not want_cosine)
    h = Polynomial.monomial(1)
    inner_c, inner_s = inner_c.scale_argument(Fraction(1, 2)), inner_s.scale_argument(Fraction(1, 2))
    if want_cosine:
        return Polynomial.constant(1) - h * inner_c, -(h * inner_s)
    return h * inner_c, Polynomial.constant(1) + h * inner_s


def cosine_interpolation_coefficients(order: int) -> InterpolationCoefficients:
    """Symbolic coefficients of the order-th refinement step.

    Order 3 gives cos - delta*sin - delta**2/2*cos + delta**3/8*sin: the
    delta**3 term is 1/8 where Taylor has 1/6.
    """
    if not 1 <= order <= MAX_INTERPOLATION_ORDER:
        raise DomainError(f"interpolation order must be in 1..{MAX_INTERPOLATION_ORDER}")
    c, s = _shifted(order, True)
    return InterpolationCoefficients(order, c, s)


def cosine_interpolate(
    theta: RationalLike, delta: RationalLike, order: int, precision: int
) -> FixedDecimal:
    """Numeric value of the order-th interpolant, truncated to ``precision`` digits."""
    if precision < 1:
        raise DomainError("precision must be at least 1")
    coeffs = cosine_interpolation_coefficients(order)
    theta, delta = as_rational(theta), as_rational(delta)
    work = precision + 6
    cos_t = eval_trig("cosine", theta, work).to_rational()
    sin_t = eval_trig("sine", theta, work).to_rational()
    value = coeffs.cos_part(delta) * cos_t + coeffs.sin_part(delta) * sin_t
    return to_fixed(value, precision)
