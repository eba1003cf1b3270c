from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import mp
from madhava.arith import PI_50, DomainError, FixedDecimal
from madhava.aryabhata import (
    GUARD_DIGITS,
    central_first_derivative,
    central_second_derivative,
    cosine_difference,
    generate_cosine_table,
    generate_sine_table,
    sample_sine_derivative,
    second_difference_ratio,
    sine_difference,
    table_errors,
)
from madhava.series import eval_trig


def test_sine_difference_examples():
    d = Fraction(1, 10)
    two_sin = 2 * mpmath.sin(mp(d))
    assert abs(mp(sine_difference(0, d, 15).to_rational()) - two_sin) < 1e-15
    assert sine_difference(Fraction(3, 4), 0, 10) == 0


@pytest.mark.parametrize("p", [6, 12, 20])
def test_sine_difference_consistency(p):
    phi, delta = Fraction("0.5855"), Fraction("0.0611")
    lhs = eval_trig("sine", phi + delta, p + 2).to_rational() - eval_trig("sine", phi - delta, p + 2).to_rational()
    rhs = sine_difference(phi, delta, p).to_rational()
    assert abs(lhs - rhs) < Fraction(1, 10 ** (p - 2))


@given(st.fractions(min_value=Fraction(1, 10), max_value=Fraction(14, 10), max_denominator=1000),
       st.fractions(min_value=0, max_value=Fraction(1, 10), max_denominator=1000))
def test_difference_identities_against_mpmath(phi, delta):
    s = mp(sine_difference(phi, delta, 20).to_rational())
    c = mp(cosine_difference(phi, delta, 20).to_rational())
    x, h = mp(phi), mp(delta)
    assert abs(s - (mpmath.sin(x + h) - mpmath.sin(x - h))) < 1e-19
    assert abs(c - (mpmath.cos(x + h) - mpmath.cos(x - h))) < 1e-19


def seeding_error(eps_pi, n):
    # seeded with s1 = eps the recursion yields eps * sin(n eps) / sin(eps) exactly
    e = mpmath.pi * mp(Fraction(eps_pi))
    return mpmath.sin(n * e) * (e / mpmath.sin(e) - 1)


def test_pi_over_80_table():
    table = generate_sine_table(Fraction(1, 80), 40, 12)
    assert len(table) == 40
    assert [e.index for e in table.entries] == list(range(1, 41))
    assert table.entries[0].degrees == Fraction(9, 4) and table.entries[-1].degrees == 90
    assert abs(table.value(40).to_rational() - 1) < Fraction(5, 1000)


def test_classical_table():
    table = generate_sine_table(Fraction(1, 48), 24, 12)
    assert [e.degrees for e in table.entries][:2] == [Fraction(15, 4), Fraction(15, 2)]
    assert table.entries[-1].degrees == 90
    assert table.entries[0].arcminutes == 225
    err30 = abs(mp(table.value(8).to_rational()) - mpmath.mpf(1) / 2)
    assert abs(err30 - seeding_error(Fraction(1, 48), 8)) < 1e-10


@pytest.mark.parametrize("eps, count", [(Fraction(1, 48), 24), (Fraction(1, 80), 40), (Fraction(1, 12), 6)])
def test_table_matches_seeded_closed_form(eps, count):
    table = generate_sine_table(eps, count, 14)
    e = mpmath.pi * mp(eps)
    s1 = mp(FixedDecimal.from_rational(eps * PI_50, 14 + GUARD_DIGITS).to_rational())
    for entry in table.entries:
        expected = s1 * mpmath.sin(entry.index * e) / mpmath.sin(e)
        assert abs(mp(entry.value.to_rational()) - expected) < 1e-13


def test_single_entry_and_errors():
    t = generate_sine_table(Fraction(1, 7), 1, 8)
    assert len(t) == 1
    assert t.value(1) == FixedDecimal.from_rational(PI_50 / 7, 8 + GUARD_DIGITS)
    with pytest.raises(DomainError, match="past pi/2"):
        generate_sine_table(Fraction(1, 48), 25, 8)
    with pytest.raises(DomainError):
        generate_sine_table(Fraction(1, 48), 24, 3)
    with pytest.raises(DomainError):
        generate_sine_table(Fraction(1, 48), 24, 8, "bogus")


@pytest.mark.parametrize("eps, count", [(Fraction(1, 48), 24), (Fraction(1, 80), 40)])
def test_seeded_error_grows_with_n(eps, count):
    errors = table_errors(generate_sine_table(eps, count, 12))
    assert all(a < b for a, b in zip(errors, errors[1:]))


@pytest.mark.parametrize("eps, count", [(Fraction(1, 48), 24), (Fraction(1, 80), 40)])
def test_oracle_seed_isolates_recursion_error(eps, count):
    p = 12
    errors = table_errors(generate_sine_table(eps, count, p, "oracle"))
    assert max(errors) < Fraction(1, 10 ** (p - 3))


def test_two_term_seed_is_available():
    t = generate_sine_table(Fraction(1, 80), 40, 12, "two-term")
    assert t.seed_policy == "two-term"
    assert t.value(2) == FixedDecimal.from_rational(2 * PI_50 / 80, 12 + GUARD_DIGITS)


def test_central_first_derivative_examples():
    est = central_first_derivative("0.6", "0.5", "0.122", 12)
    assert est.to_rational() == pytest.approx(Fraction(1, 10) / Fraction(122, 1000), abs=1e-12)
    assert str(est.truncate(4)) == "0.8196"
    assert central_first_derivative("0.3", "0.3", "0.01") == 0
    h = Fraction(1, 1000)
    plus = eval_trig("sine", Fraction(1, 2) + h, 30)
    minus = eval_trig("sine", Fraction(1, 2) - h, 30)
    d = central_first_derivative(plus, minus, 2 * h, 20)
    assert abs(mp(d.to_rational()) - mpmath.cos(0.5)) < 1e-6
    with pytest.raises(DomainError):
        central_first_derivative(1, 0, 0)


@given(st.fractions(min_value=Fraction(1, 20), max_value=Fraction(3, 2), max_denominator=1000))
def test_central_difference_second_order(phi):
    h = Fraction(1, 100)
    e1 = mp(sample_sine_derivative(phi, h, 30).estimate.to_rational()) - mpmath.cos(mp(phi))
    e2 = mp(sample_sine_derivative(phi, h / 2, 30).estimate.to_rational()) - mpmath.cos(mp(phi))
    assert 3.9 < e1 / e2 < 4.1


def test_central_second_derivative():
    s = sample_sine_derivative(Fraction(1, 2), Fraction(1, 1000), 15)
    assert abs(mp(s.second_estimate.to_rational()) + mpmath.sin(0.5)) < 1e-6
    assert central_second_derivative(1, 1, 1, Fraction(1, 10)) == 0
    with pytest.raises(DomainError):
        sample_sine_derivative(1, 0)


def test_second_difference_ratio():
    table = generate_sine_table(Fraction(1, 48), 24, 12)
    const = -4 * mpmath.sin(mpmath.pi / 96) ** 2
    r5 = mp(second_difference_ratio(table, 5).to_rational())
    r12 = mp(second_difference_ratio(table, 12).to_rational())
    assert abs(r5 - const) < 1e-6
    assert abs(r12 - r5) < 1e-6
    for bad in (1, 24):
        with pytest.raises(DomainError):
            second_difference_ratio(table, bad)


@pytest.mark.parametrize("eps, count", [(Fraction(1, 48), 24), (Fraction(1, 80), 40)])
@pytest.mark.parametrize("builder", [generate_sine_table, generate_cosine_table])
def test_second_difference_ratio_constant(builder, eps, count):
    p = 12
    table = builder(eps, count, p)
    ratios = [second_difference_ratio(table, n).to_rational() for n in range(2, count)]
    assert max(ratios) - min(ratios) <= Fraction(10, 10**p)


def test_cosine_table():
    table = generate_cosine_table(Fraction(1, 48), 24, 12)
    assert max(table_errors(table)) < Fraction(1, 10**9)
    assert abs(table.value(24).to_rational()) < Fraction(1, 10**9)
