"""Samkalitam: sum first, take the large-N limit afterwards.

Exact power sums and their recursion, the normalized sums I_N(k) and their
limits 1/(k+1), the alternating series for pi/4 and arctan, and the
unit-square geometry that turns the angle increments into 1/(N(1 + (n/N)^2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, NamedTuple

from .arith import (
    DomainError,
    FixedDecimal,
    RationalLike,
    as_rational,
    isqrt_rational,
    to_fixed,
)
from .series import eval_trig

__all__ = [
    "PowerSumRecord",
    "SeriesResult",
    "QuadrantSample",
    "AbelCheck",
    "ARYABHATA_PI",
    "power_sum",
    "power_sum_recursive",
    "power_sum_table",
    "abel_identity_check",
    "j_limit_deviation",
    "madhava_pi",
    "madhava_pi_fixed",
    "arctan_series",
    "arctan_oracle",
    "quadrant_geometry",
    "quadrant_samples",
    "quadrant_sum",
]

ARYABHATA_PI = Fraction(62832, 20000)


@dataclass(frozen=True)
class PowerSumRecord:
    N: int
    k: int
    exact_sum: int
    normalized: Fraction
    limit: Fraction

    @classmethod
    def build(cls, N: int, k: int, exact_sum: int) -> "PowerSumRecord":
        return cls(N, k, exact_sum, Fraction(exact_sum, N ** (k + 1)), Fraction(1, k + 1))


@dataclass(frozen=True)
class SeriesResult:
    """A partial sum with a rigorous bound on ``|true value - partial_sum|``."""

    partial_sum: Fraction
    terms_used: int
    error_bound: Fraction
    decimal: FixedDecimal | None = None

    def __post_init__(self) -> None:
        if self.error_bound < 0:
            raise ValueError("error bound must be non-negative")

    def contains(self, value: RationalLike) -> bool:
        return abs(as_rational(value) - self.partial_sum) <= self.error_bound


class AbelCheck(NamedTuple):
    lhs: int
    rhs: int


def _check_nk(N: int, k: int) -> None:
    if N < 1:
        raise DomainError("N must be at least 1")
    if k < 0:
        raise DomainError("k must be non-negative")


def power_sum(N: int, k: int) -> PowerSumRecord:
    """S_N(k) = 1**k + ... + N**k by direct summation."""
    _check_nk(N, k)
    return PowerSumRecord.build(N, k, sum(n**k for n in range(1, N + 1)))


def power_sum_table(N: int, k: int) -> list[list[int]]:
    """Rows 0..k of S_n(j) for n = 0..N, built only from the recursion

        S_N(j) = N * S_N(j-1) - sum_{n=1}^{N-1} S_n(j-1),   S_N(0) = N.
    """
    _check_nk(N, k)
    row = list(range(N + 1))
    rows = [row]
    for _ in range(k):
        nxt = [0] * (N + 1)
        prefix = 0  # sum_{m=1}^{n-1} S_m(j-1)
        for n in range(1, N + 1):
            nxt[n] = n * row[n] - prefix
            prefix += row[n]
        row = nxt
        rows.append(row)
    return rows


def power_sum_recursive(N: int, k: int) -> PowerSumRecord:
    return PowerSumRecord.build(N, k, power_sum_table(N, k)[k][N])


def abel_identity_check(N: int, k: int) -> AbelCheck:
    """Both sides of N*S_N(k-1) - S_N(k) = sum_{n=1}^{N-1} sum_{j=1}^{n} j**(k-1).

    Each side is computed by brute force, independently of the recursion.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    _check_nk(N, k)
    lhs = N * power_sum(N, k - 1).exact_sum - power_sum(N, k).exact_sum
    rhs = sum(j ** (k - 1) for n in range(1, N) for j in range(1, n + 1))
    return AbelCheck(lhs, rhs)


def j_limit_deviation(N: int, k: int) -> Fraction:
    """I_N(k) - 1/(k+1), exact.  Zero for k = 0, about 1/(2N) otherwise."""
    rec = power_sum(N, k)
    return rec.normalized - rec.limit


def _alternating_reciprocal_odd_sum(lo: int, hi: int) -> tuple[int, int]:
    # sum_{j=lo}^{hi-1} (-1)^j / (2j+1) as an unreduced p/q, by binary splitting
    if hi - lo == 1:
        return (-1 if lo & 1 else 1), 2 * lo + 1
    mid = (lo + hi) // 2
    p1, q1 = _alternating_reciprocal_odd_sum(lo, mid)
    p2, q2 = _alternating_reciprocal_odd_sum(mid, hi)
    return p1 * q2 + p2 * q1, q1 * q2


def madhava_pi(terms: int, precision: int = 12) -> SeriesResult:
    """Exact partial sum 1 - 1/3 + ... +- 1/(2M-1) of the series for pi/4.

    ``error_bound`` is the first omitted term 1/(2M+1); ``decimal`` renders
    four times the partial sum.  Summation is by binary splitting with a single
    gcd at the end, which keeps M = 10**5 to a couple of seconds.
    """
    if terms < 1:
        raise DomainError("at least one term is required")
    p, q = _alternating_reciprocal_odd_sum(0, terms)
    s = Fraction(p, q)
    return SeriesResult(s, terms, Fraction(1, 2 * terms + 1), to_fixed(4 * s, precision))


def madhava_pi_fixed(terms: int, precision: int = 30) -> SeriesResult:
    """The same partial sum accumulated in truncated fixed point.

    Each term is truncated toward zero, so the accumulated sum differs from the
    exact partial sum by less than ``terms`` units in the last place; that is
    added to the series bound.
    """
    if terms < 1:
        raise DomainError("at least one term is required")
    one = 10**precision
    acc = 0
    for j in range(terms):
        t = one // (2 * j + 1)
        acc += -t if j & 1 else t
    s = Fraction(acc, one)
    bound = Fraction(1, 2 * terms + 1) + Fraction(terms, one)
    return SeriesResult(s, terms, bound, to_fixed(4 * s, precision))


def arctan_series(t: RationalLike, terms: int) -> SeriesResult:
    """t - t**3/3 + t**5/5 - ... (``terms`` terms) for 0 <= t <= 1.

    The bound t**(2M+1)/(2M+1) is the first omitted term; it is valid because
    the term magnitudes decrease on this domain, which is checked as we go.
    """
    t = as_rational(t)
    if not 0 <= t <= 1:
        raise DomainError(f"t = {t} outside derived domain [0, 1]")
    if terms < 1:
        raise DomainError("at least one term is required")
    if t == 1:
        p, q = _alternating_reciprocal_odd_sum(0, terms)
        return SeriesResult(Fraction(p, q), terms, Fraction(1, 2 * terms + 1))
    t2 = t * t
    power = t
    total = Fraction(0)
    prev = None
    for j in range(terms):
        term = power / (2 * j + 1)
        if prev is not None and term > prev:
            raise AssertionError("arctan terms stopped decreasing")
        total += -term if j & 1 else term
        prev = term
        power *= t2
    return SeriesResult(total, terms, power / (2 * terms + 1))


def arctan_oracle(t: RationalLike, digits: int) -> Fraction:
    """arctan(t) for 0 <= t <= 1 within ``10**-digits``.

    The argument is halved twice with arctan(t) = 2 arctan(t / (1 + sqrt(1 + t^2)))
    so the Madhava series converges like 0.04**M, then summed in scaled
    integers.  Independent of platform trig.
    """
    t = as_rational(t)
    if not 0 <= t <= 1:
        raise DomainError(f"t = {t} outside [0, 1]")
    guard = digits + 10
    one = 10**guard
    # scaled-integer t; every step below is off by at most a few units
    x = t.numerator * one // t.denominator
    halvings = 2
    for _ in range(halvings):
        root = isqrt(one * one + x * x)
        x = x * one // (one + root)
    x2 = x * x // one
    term = x
    acc = 0
    j = 0
    while term:
        acc += term // (2 * j + 1) if j % 2 == 0 else -(term // (2 * j + 1))
        term = term * x2 // one
        j += 1
    return Fraction(acc * 2**halvings, one)


@dataclass(frozen=True)
class QuadrantSample:
    """Segment n of N along the tangent line x = 1, from A_{n-1} to A_n.

    Squared lengths and the first prediction are exact.  ``refined_prediction``
    (divides by OA_n * OA_{n-1}) and ``true_sin_delta`` involve square roots
    and arctangents, and are rational approximations good to ``digits``.
    """

    N: int
    n: int
    oa_prev_sq: Fraction
    oa_n_sq: Fraction
    predicted_sin_delta: Fraction
    refined_prediction: Fraction
    true_sin_delta: Fraction
    digits: int


def _check_segment(N: int, n: int) -> None:
    if N < 1:
        raise DomainError("N must be at least 1")
    if not 1 <= n <= N:
        raise DomainError(f"segment index {n} outside 1..{N}")


def _sample(N: int, n: int, theta_prev: Fraction, theta_n: Fraction, digits: int) -> QuadrantSample:
    dt = Fraction(1, N)
    oa_prev_sq = 1 + Fraction(n - 1, N) ** 2
    oa_n_sq = 1 + Fraction(n, N) ** 2
    refined = dt / isqrt_rational(oa_prev_sq * oa_n_sq, digits + 4)
    true_sin = eval_trig("sine", theta_n - theta_prev, digits + 4).to_rational()
    return QuadrantSample(
        N=N,
        n=n,
        oa_prev_sq=oa_prev_sq,
        oa_n_sq=oa_n_sq,
        predicted_sin_delta=dt / oa_n_sq,
        refined_prediction=refined,
        true_sin_delta=true_sin,
        digits=digits,
    )


def quadrant_geometry(N: int, n: int, digits: int = 30) -> QuadrantSample:
    _check_segment(N, n)
    work = digits + 6
    return _sample(
        N, n, arctan_oracle(Fraction(n - 1, N), work), arctan_oracle(Fraction(n, N), work), digits
    )


def quadrant_samples(N: int, digits: int = 30) -> Iterator[QuadrantSample]:
    """All N segments, sharing each arctangent between neighbouring segments."""
    _check_segment(N, 1)
    work = digits + 6
    prev = arctan_oracle(Fraction(0), work)
    for n in range(1, N + 1):
        cur = arctan_oracle(Fraction(n, N), work)
        yield _sample(N, n, prev, cur, digits)
        prev = cur


def quadrant_sum(N: int, digits: int = 40) -> SeriesResult:
    """sum_{n=1}^{N} 1/(N (1 + (n/N)^2)), which tends to pi/4 from below.

    Accumulated in truncated fixed point (the exact sum has an enormous
    denominator); each term N/(N^2 + n^2) is truncated toward zero, so the
    true sum lies in [partial, partial + N ulp].
    """
    if N < 1:
        raise DomainError("N must be at least 1")
    one = 10**digits
    acc = sum(N * one // (N * N + n * n) for n in range(1, N + 1))
    return SeriesResult(Fraction(acc, one), N, Fraction(N, one), FixedDecimal(acc, digits))
