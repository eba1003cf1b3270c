"""Exact rational and truncated fixed-point arithmetic, plus sparse polynomials.

``Rational`` is the stdlib :class:`fractions.Fraction`: it already keeps
values in lowest terms with a positive denominator and zero as ``0/1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Union

__all__ = [
    "DomainError",
    "Rational",
    "RationalLike",
    "PI_50",
    "as_rational",
    "rational_add",
    "rational_mul",
    "rational_neg",
    "rational_div",
    "FixedDecimal",
    "to_fixed",
    "Polynomial",
    "poly_double_integrate",
    "poly_eval",
    "isqrt_rational",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """An argument violates the documented precondition of an operation."""


# pi truncated to 50 decimals; the true value exceeds it by ~5.8e-51
PI_50 = Fraction("3.14159265358979323846264338327950288419716939937510")


def as_rational(value: RationalLike | "FixedDecimal") -> Fraction:
    """Coerce ints, fraction strings ("22/7"), decimal strings and FixedDecimal to Fraction.

    Floats are rejected on purpose: they would smuggle binary rounding into
    exact computations.
    """
    if isinstance(value, FixedDecimal):
        return value.to_rational()
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string such as '0.122'")
    return Fraction(value)


def rational_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rational_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rational_neg(a: Fraction) -> Fraction:
    return -a


def rational_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError(f"division of {a} by zero")
    return a / b


def _trunc_div(num: int, den: int) -> int:
    # integer quotient rounded toward zero (Python's // floors)
    q = abs(num) // abs(den)
    return q if (num >= 0) == (den > 0) else -q


@dataclass(frozen=True, order=False)
class FixedDecimal:
    """``scaled * 10**-precision``; every inexact result is truncated toward zero.

    Binary operations on mixed precisions work at the larger of the two.
    """

    scaled: int
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 0:
            raise DomainError("precision must be non-negative")

    @classmethod
    def from_rational(cls, value: RationalLike, precision: int) -> "FixedDecimal":
        r = as_rational(value)
        return cls(_trunc_div(r.numerator * 10**precision, r.denominator), precision)

    @classmethod
    def parse(cls, text: str) -> "FixedDecimal":
        """Parse a plain decimal literal, keeping its digit count as the precision."""
        text = text.strip()
        _, _, frac = text.partition(".")
        return cls.from_rational(Fraction(text), len(frac))

    @property
    def ulp(self) -> Fraction:
        return Fraction(1, 10**self.precision)

    def to_rational(self) -> Fraction:
        return Fraction(self.scaled, 10**self.precision)

    def with_precision(self, precision: int) -> "FixedDecimal":
        """Re-express at another precision (exact when widening, truncating when narrowing)."""
        if precision >= self.precision:
            return FixedDecimal(self.scaled * 10 ** (precision - self.precision), precision)
        return FixedDecimal(_trunc_div(self.scaled, 10 ** (self.precision - precision)), precision)

    truncate = with_precision

    def round_half_even(self, precision: int) -> "FixedDecimal":
        """Nearest-value rendering; only for display next to the truncated value."""
        r = self.to_rational() * 10**precision
        return FixedDecimal(round(r), precision)

    def _align(self, other: object) -> tuple[int, int, int] | None:
        if isinstance(other, int):
            other = FixedDecimal(other, 0)
        if not isinstance(other, FixedDecimal):
            return None
        p = max(self.precision, other.precision)
        return self.with_precision(p).scaled, other.with_precision(p).scaled, p

    def __add__(self, other: object) -> "FixedDecimal":
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, p = aligned
        return FixedDecimal(a + b, p)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FixedDecimal":
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, p = aligned
        return FixedDecimal(a - b, p)

    def __rsub__(self, other: object) -> "FixedDecimal":
        return -(self - other)

    def __mul__(self, other: object) -> "FixedDecimal":
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, p = aligned
        return FixedDecimal(_trunc_div(a * b, 10**p), p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FixedDecimal":
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, p = aligned
        if b == 0:
            raise ZeroDivisionError("fixed-point division by zero")
        return FixedDecimal(_trunc_div(a * 10**p, b), p)

    def __neg__(self) -> "FixedDecimal":
        return FixedDecimal(-self.scaled, self.precision)

    def __abs__(self) -> "FixedDecimal":
        return FixedDecimal(abs(self.scaled), self.precision)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FixedDecimal):
            return self.to_rational() == other.to_rational()
        if isinstance(other, (int, Fraction)):
            return self.to_rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_rational())

    def __lt__(self, other: object) -> bool:
        return self.to_rational() < as_rational(other)

    def __le__(self, other: object) -> bool:
        return self.to_rational() <= as_rational(other)

    def __gt__(self, other: object) -> bool:
        return self.to_rational() > as_rational(other)

    def __ge__(self, other: object) -> bool:
        return self.to_rational() >= as_rational(other)

    def __float__(self) -> float:
        return float(self.to_rational())

    def __str__(self) -> str:
        sign = "-" if self.scaled < 0 else ""
        digits = str(abs(self.scaled))
        if self.precision == 0:
            return sign + digits
        digits = digits.rjust(self.precision + 1, "0")
        return f"{sign}{digits[:-self.precision]}.{digits[-self.precision:]}"

    def __repr__(self) -> str:
        return f"FixedDecimal('{self}')"


def to_fixed(r: RationalLike, precision: int) -> FixedDecimal:
    """Truncate ``r`` toward zero to ``precision`` decimals, so ``|result - r| < 10**-precision``."""
    return FixedDecimal.from_rational(r, precision)


def isqrt_rational(r: Fraction, digits: int) -> Fraction:
    """Lower bound on sqrt(r), short by less than 2 * 10**-digits."""
    if r < 0:
        raise DomainError("square root of a negative number")
    scale = 10**digits
    return Fraction(isqrt(r.numerator * scale * scale // r.denominator), scale)


class Polynomial:
    """Sparse univariate polynomial with exact Fraction coefficients.

    Immutable: every operation returns a new polynomial. Zero coefficients are
    never stored, so the zero polynomial has no terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for degree, coeff in items:
            if degree < 0:
                raise DomainError("degrees must be non-negative")
            acc[degree] = acc.get(degree, Fraction(0)) + as_rational(coeff)
        self._terms = {d: c for d, c in sorted(acc.items()) if c != 0}

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Polynomial":
        return cls({degree: coeff})

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls({0: value})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def degrees(self) -> list[int]:
        return list(self._terms)

    @property
    def degree(self) -> int:
        """Highest stored degree; -1 for the zero polynomial."""
        return max(self._terms, default=-1)

    def coefficient(self, degree: int) -> Fraction:
        return self._terms.get(degree, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        if isinstance(other, Polynomial):
            return Polynomial(
                (d1 + d2, c1 * c2)
                for d1, c1 in self._terms.items()
                for d2, c2 in other._terms.items()
            )
        scalar = as_rational(other)
        return Polynomial({d: c * scalar for d, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def derivative(self) -> "Polynomial":
        return Polynomial({d - 1: c * d for d, c in self._terms.items() if d > 0})

    def integrate(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        return Polynomial({d + 1: c / (d + 1) for d, c in self._terms.items()})

    def double_integrate(self) -> "Polynomial":
        return poly_double_integrate(self)

    def scale_argument(self, factor: RationalLike) -> "Polynomial":
        """p(factor * x)."""
        f = as_rational(factor)
        return Polynomial({d: c * f**d for d, c in self._terms.items()})

    def truncate(self, max_degree: int) -> "Polynomial":
        return Polynomial({d: c for d, c in self._terms.items() if d <= max_degree})

    def __repr__(self) -> str:
        return f"Polynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, c in self._terms.items():
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if d == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_double_integrate(p: Polynomial) -> Polynomial:
    """Integral from 0 to x of the integral from 0 to y of p: c*x^k -> c*x^(k+2)/((k+1)(k+2))."""
    return Polynomial({d + 2: c / ((d + 1) * (d + 2)) for d, c in p.terms.items()})


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Horner evaluation over the sparse degree list, exact."""
    x = as_rational(x)
    terms = p.terms
    if not terms:
        return Fraction(0)
    degrees = sorted(terms, reverse=True)
    acc = Fraction(0)
    prev = degrees[0]
    for d in degrees:
        acc = acc * x ** (prev - d) + terms[d]
        prev = d
    return acc * x**prev
