"""Sine and cosine expansions by repeated double integration, and the trig oracle.

Starting from ``sin(x)_1 = x`` each refinement substitutes the previous
partial expansion into

    sin(x) = x - int_0^x dphi int_0^phi sin(xi) dxi

and the cosine analogue with 1 in place of x.  Every coefficient is an exact
Fraction, so the factorial pattern can be checked with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .arith import (
    PI_50,
    DomainError,
    FixedDecimal,
    Polynomial,
    RationalLike,
    as_rational,
    poly_double_integrate,
    to_fixed,
)

__all__ = [
    "Expansion",
    "HALF_PI_BOUND",
    "refine_sine",
    "refine_cosine",
    "expansion",
    "eval_trig",
    "sin_fixed",
    "cos_fixed",
    "sin_pi_multiple",
    "cos_pi_multiple",
]

Kind = Literal["sine", "cosine"]

THETA = Polynomial.monomial(1)
ONE = Polynomial.constant(1)

# a shade above pi/2 so that PI_50/2 (and callers' rational pi/2) pass the range check
HALF_PI_BOUND = (PI_50 + Fraction(1, 10**50)) / 2


@dataclass(frozen=True)
class Expansion:
    kind: Kind
    order: int
    polynomial: Polynomial

    def coefficients(self) -> dict[int, Fraction]:
        return self.polynomial.terms


def refine_sine(previous: Polynomial) -> Polynomial:
    return THETA - poly_double_integrate(previous)


def refine_cosine(previous: Polynomial) -> Polynomial:
    return ONE - poly_double_integrate(previous)


def expansion(kind: Kind, order: int) -> Expansion:
    """Apply the matching refinement ``order`` times, starting from the zero polynomial."""
    if order < 1:
        raise DomainError("expansion order must be at least 1")
    refine = {"sine": refine_sine, "cosine": refine_cosine}.get(kind)
    if refine is None:
        raise DomainError(f"unknown expansion kind {kind!r}")
    p = Polynomial()
    for _ in range(order):
        p = refine(p)
    return Expansion(kind, order, p)


def eval_trig(kind: Kind, x: RationalLike, precision: int) -> FixedDecimal:
    """sin(x) or cos(x) for ``|x| <= pi/2``, truncated toward zero to ``precision`` digits.

    Terms of the Maclaurin series are summed exactly until the first omitted
    term is below ``10**-(precision + 2)`` and, beyond that, until the
    alternating-series bracket around the true value truncates to a single
    ``precision``-digit value.  The result is then the exact truncation of the
    true value, so its error is strictly below ``10**-precision``.
    """
    x = as_rational(x)
    if kind not in ("sine", "cosine"):
        raise DomainError(f"unknown trig kind {kind!r}")
    if abs(x) > HALF_PI_BOUND:
        raise DomainError(f"argument {x} outside the reduced range [-pi/2, pi/2]")
    if precision < 0:
        raise DomainError("precision must be non-negative")

    x2 = x * x
    degree = 1 if kind == "sine" else 0
    term = x if kind == "sine" else Fraction(1)
    total = Fraction(0)
    threshold = Fraction(1, 10 ** (precision + 2))
    while True:
        total += term
        nxt = -term * x2 / ((degree + 1) * (degree + 2))
        degree += 2
        # the omitted tail is bounded by |nxt| only once terms decrease from here on
        if x2 < (degree + 1) * (degree + 2):
            if nxt == 0:
                return to_fixed(total, precision)
            if abs(nxt) < threshold:
                lo, hi = sorted((total, total + nxt))
                a, b = to_fixed(lo, precision), to_fixed(hi, precision)
                # a zero-straddling bracket truncates to 0 from both sides
                if a == b and (lo >= 0 or hi <= 0):
                    return a
        term = nxt


def sin_fixed(x: RationalLike, precision: int) -> FixedDecimal:
    return eval_trig("sine", x, precision)


def cos_fixed(x: RationalLike, precision: int) -> FixedDecimal:
    return eval_trig("cosine", x, precision)


def _reduce_pi_multiple(q: Fraction) -> tuple[Fraction, int]:
    """(r, sign) with r in [0, 1/2] and sin(q*pi) = sign * sin(r*pi)."""
    sign = 1
    if q < 0:
        q, sign = -q, -sign
    q -= 2 * (q.numerator // (2 * q.denominator))  # now 0 <= q < 2
    if q >= 1:
        q, sign = q - 1, -sign
    if q > Fraction(1, 2):
        q = 1 - q
    return q, sign


# Niven: the only rational values of sin(r*pi), r rational, in the first quadrant.
# Evaluated through PI_50 they would truncate to 0.4999... and 0.9999...
_RATIONAL_SINES = {Fraction(0): Fraction(0), Fraction(1, 6): Fraction(1, 2), Fraction(1, 2): Fraction(1)}


def sin_pi_multiple(q: RationalLike, precision: int) -> FixedDecimal:
    """sin(q*pi) for any rational q, reduced exactly to the first quadrant.

    The reduced angle is converted to radians with the 50-digit pi constant,
    so precision beyond ~48 digits is not meaningful.
    """
    r, sign = _reduce_pi_multiple(as_rational(q))
    exact = _RATIONAL_SINES.get(r)
    if exact is not None:
        value = to_fixed(exact, precision)
    else:
        value = eval_trig("sine", r * PI_50, precision)
    return value if sign > 0 else -value


def cos_pi_multiple(q: RationalLike, precision: int) -> FixedDecimal:
    """cos(q*pi) = sin((1/2 - q)*pi)."""
    return sin_pi_multiple(Fraction(1, 2) - as_rational(q), precision)
