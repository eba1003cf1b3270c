from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from conftest import mp
from madhava.arith import DomainError
from madhava.samskaram import (
    compare_sqrt_methods,
    cosine_interpolate,
    cosine_interpolation_coefficients,
    reciprocal_remainder,
    refine_reciprocal,
    sqrt_bakshali,
    sqrt_heron,
)


def geometric_partial_sum(x, d, M):
    # oracle: sum_{n=0}^{M} d^n / x^(n+1), term by term
    return sum(Fraction(d) ** n / Fraction(x) ** (n + 1) for n in range(M + 1))


def test_reciprocal_examples():
    assert refine_reciprocal(4, 1, 0) == Fraction(1, 4)
    assert refine_reciprocal(4, 1, 3) == Fraction(85, 256) == geometric_partial_sum(4, 1, 3)
    for M in (5, 20, 60):
        assert Fraction(1, 3) - refine_reciprocal(4, 1, M) == Fraction(1, 3) * Fraction(1, 4) ** (M + 1)


def test_reciprocal_errors():
    with pytest.raises(DomainError):
        refine_reciprocal(0, 0, 3)
    with pytest.raises(DomainError, match="divergent"):
        refine_reciprocal(4, 4, 3)
    with pytest.raises(DomainError, match="divergent"):
        refine_reciprocal(2, -3, 3)


positive = st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50)


@given(positive, st.fractions(min_value=0, max_value=Fraction(49, 50), max_denominator=50), st.integers(0, 25))
def test_reciprocal_error_ratio(x, frac, M):
    d = x * frac
    assume(d > 0)
    target = 1 / (x - d)
    e0 = target - refine_reciprocal(x, d, M)
    e1 = target - refine_reciprocal(x, d, M + 1)
    assert e1 / e0 == d / x
    assert e0 == reciprocal_remainder(x, d, M)
    assert refine_reciprocal(x, d, M) == geometric_partial_sum(x, d, M)


def test_bakshali_n95_values():
    trace = sqrt_bakshali(95, 9, 2)
    assert trace[0] == Fraction(88, 9)
    m, r = Fraction(9), Fraction(95 - 81)
    c = r / (2 * m)
    assert trace[1] == m + c - c**2 / (2 * (m + c))
    assert abs(mp(trace[1]) - mpmath.sqrt(95)) < 5e-5
    assert float(trace[1]) == pytest.approx(9.7468434, abs=1e-7)


def test_heron_n95_values():
    trace = sqrt_heron(95, 9, 2)
    assert trace[0] == (9 + Fraction(95, 9)) / 2 == Fraction(88, 9)
    e1 = abs(mp(trace[0]) - mpmath.sqrt(95))
    e2 = abs(mp(trace[1]) - mpmath.sqrt(95))
    assert e2 < e1**2


@pytest.mark.parametrize("n, m", [(9, 3), (4, 2), (Fraction(9, 4), Fraction(3, 2))])
def test_fixed_points(n, m):
    assert set(sqrt_bakshali(n, m, 4).iterates) == {Fraction(m)}
    assert set(sqrt_heron(n, m, 4).iterates) == {Fraction(m)}


def test_sqrt_errors():
    with pytest.raises(DomainError):
        sqrt_heron(0, 1, 1)
    with pytest.raises(DomainError):
        sqrt_heron(5, -1, 1)
    with pytest.raises(DomainError):
        sqrt_bakshali(5, 3, 1)  # 3^2 > 5
    with pytest.raises(DomainError):
        sqrt_bakshali(5, 2, 0)


@st.composite
def sqrt_inputs(draw):
    n = draw(st.fractions(min_value=1, max_value=10**4, max_denominator=20))
    m = draw(st.fractions(min_value=Fraction(1, 2), max_value=100, max_denominator=20))
    assume(m * m < n)
    return n, m


@given(sqrt_inputs(), st.integers(1, 5))
def test_sqrt_traces_overshoot_then_descend(args, iters):
    n, m = args
    for trace in (sqrt_bakshali(n, m, iters), sqrt_heron(n, m, iters)):
        assert len(trace) == iters
        assert all(a * a > n for a in trace.iterates)
        assert all(a > b for a, b in zip(trace.iterates, trace.iterates[1:]))


@given(sqrt_inputs(), st.integers(1, 5))
def test_both_schemes_coincide(args, iters):
    n, m = args
    assert sqrt_bakshali(n, m, iters).iterates == sqrt_heron(n, m, iters).iterates


@given(sqrt_inputs())
def test_heron_quadratic(args):
    n, m = args
    with mpmath.workdps(400):
        root = mpmath.sqrt(mpmath.mpf(n.numerator) / n.denominator)
        errs = [mpmath.mpf(a.numerator) / a.denominator - root for a in sqrt_heron(n, m, 5).iterates]
        for e, e_next in zip(errs, errs[1:]):
            assert e_next <= e**2 / (2 * root) * (1 + mpmath.mpf(10) ** -300)
            if 0 < e < 1:
                assert e_next < e**2


def test_compare_reports_tie_for_identical_schemes():
    report = compare_sqrt_methods(95, 9, 2, Fraction(mpmath.nstr(mpmath.sqrt(95), 40)))
    assert report["closer"] == "tie"
    report5 = compare_sqrt_methods(5, 2, 2, Fraction(mpmath.nstr(mpmath.sqrt(5), 40)))
    assert report5["closer"] == "tie"


def test_interpolation_coefficients():
    c1 = cosine_interpolation_coefficients(1)
    assert c1.pairs() == [(1, 0), (0, -1)]
    c2 = cosine_interpolation_coefficients(2)
    assert c2.pairs() == [(1, 0), (0, -1), (Fraction(-1, 2), 0)]
    c3 = cosine_interpolation_coefficients(3)
    assert c3.pairs() == [(1, 0), (0, -1), (Fraction(-1, 2), 0), (0, Fraction(1, 8))]
    assert c3.sin_part.coefficient(3) - Fraction(1, 6) == Fraction(-1, 24)


@pytest.mark.parametrize("order", [0, 4, -1])
def test_interpolation_order_range(order):
    with pytest.raises(DomainError):
        cosine_interpolation_coefficients(order)


def test_interpolate_trivial_cases():
    theta = Fraction(5236, 10000)
    exact = cosine_interpolate(theta, 0, 3, 15)
    assert abs(mp(exact.to_rational()) - mpmath.cos(mp(theta))) < 1e-15
    assert str(cosine_interpolate(0, Fraction(1, 1000), 1, 10)) == "1.0000000000"


def test_interpolate_error_is_the_missing_cubic():
    theta, delta = Fraction(5236, 10000), Fraction(1, 100)
    value = mp(cosine_interpolate(theta, delta, 3, 20).to_rational())
    truth = mpmath.cos(mp(theta + delta))
    predicted = mp(delta) ** 3 / 24 * mpmath.sin(mp(theta))
    assert abs(truth - value) <= abs(predicted) + mp(delta) ** 4
    assert truth - value == pytest.approx(float(predicted), rel=0.05)
