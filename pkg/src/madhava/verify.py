"""Named invariant suites, runnable from the CLI (``madhava verify``)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from .arith import PI_50, isqrt_rational
from .aryabhata import generate_sine_table, second_difference_ratio, table_errors
from .samkalitam import abel_identity_check, madhava_pi, power_sum, power_sum_table
from .samskaram import cosine_interpolation_coefficients, sqrt_bakshali, sqrt_heron
from .series import expansion

__all__ = ["Check", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool


def _appendix() -> Iterator[tuple[str, bool]]:
    for N in range(1, 51):
        table = power_sum_table(N, 8)
        for k in range(0, 9):
            yield f"recursion N={N} k={k}", table[k][N] == power_sum(N, k).exact_sum
            if k >= 1:
                lhs, rhs = abel_identity_check(N, k)
                yield f"abel N={N} k={k}", lhs == rhs


def _expansions() -> Iterator[tuple[str, bool]]:
    for m in range(1, 13):
        sine = expansion("sine", m).polynomial
        cosine = expansion("cosine", m).polynomial
        yield f"sine order {m} coefficients", all(
            sine.coefficient(2 * j + 1) == Fraction((-1) ** j, factorial(2 * j + 1)) for j in range(m)
        )
        yield f"cosine order {m} coefficients", all(
            cosine.coefficient(2 * j) == Fraction((-1) ** j, factorial(2 * j)) for j in range(m)
        )
        yield f"d/dx sine = cosine at order {m}", sine.derivative() == cosine
        if m >= 2:
            yield f"d2/dx2 sine = -sine at order {m}", sine.derivative().derivative() == -expansion("sine", m - 1).polynomial


def _pi() -> Iterator[tuple[str, bool]]:
    quarter = PI_50 / 4
    for M in (1, 2, 3, 10, 11, 100, 101, 1000):
        r = madhava_pi(M)
        above = r.partial_sum > quarter
        yield f"bracketing M={M}", above == (M % 2 == 1)
        yield f"bound M={M}", abs(r.partial_sum - quarter) <= r.error_bound


def _tables() -> Iterator[tuple[str, bool]]:
    for eps, count in ((Fraction(1, 48), 24), (Fraction(1, 80), 40)):
        seeded = generate_sine_table(eps, count, 12)
        errors = table_errors(seeded)
        yield f"eps=pi/{eps.denominator} error grows with n", all(a <= b for a, b in zip(errors, errors[1:]))
        reseeded = generate_sine_table(eps, count, 12, "oracle")
        yield f"eps=pi/{eps.denominator} reseeded error < 1e-9", max(table_errors(reseeded)) < Fraction(1, 10**9)
        ratios = [second_difference_ratio(seeded, n).to_rational() for n in range(2, count)]
        yield f"eps=pi/{eps.denominator} constant second-difference ratio", max(ratios) - min(ratios) <= Fraction(10, 10**12)


def _sqrt() -> Iterator[tuple[str, bool]]:
    for n, m in ((95, 9), (2, 1), (10, 3), (50, 7), (1000, 31)):
        b, h = sqrt_bakshali(n, m, 4), sqrt_heron(n, m, 4)
        yield f"n={n} traces coincide", b.iterates == h.iterates
        yield f"n={n} iterates overshoot", all(a * a > n for a in h.iterates)
        yield f"n={n} decreasing", all(x > y for x, y in zip(h.iterates, h.iterates[1:]))
    root = isqrt_rational(Fraction(95), 30)
    yield "n=95 second iterate within 5e-5", abs(sqrt_heron(95, 9, 2)[1] - root) < Fraction(5, 10**5)


def _interpolation() -> Iterator[tuple[str, bool]]:
    c3 = cosine_interpolation_coefficients(3)
    yield "order-3 delta^3 sine coefficient is 1/8", c3.sin_part.coefficient(3) == Fraction(1, 8)
    yield "deviation from Taylor is -1/24", c3.sin_part.coefficient(3) - Fraction(1, 6) == Fraction(-1, 24)
    yield "order-1 form", cosine_interpolation_coefficients(1).pairs() == [(1, 0), (0, -1)]


SUITES: dict[str, Callable[[], Iterator[tuple[str, bool]]]] = {
    "appendix": _appendix,
    "expansions": _expansions,
    "pi": _pi,
    "tables": _tables,
    "sqrt": _sqrt,
    "interpolation": _interpolation,
}


def run_suite(name: str) -> list[Check]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        out.extend(Check(suite, label, bool(ok)) for label, ok in SUITES[suite]())
    return out
