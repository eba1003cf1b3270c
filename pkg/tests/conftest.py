from fractions import Fraction

import mpmath
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

mpmath.mp.dps = 60


def rationals(min_value=-10, max_value=10, max_denominator=1000):
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_denominator)


def first_quadrant(max_denominator=10**4):
    # strictly inside (0, pi/2) with a margin for the 50-digit pi constant
    return st.fractions(min_value=0, max_value=Fraction(157, 100), max_denominator=max_denominator)


def mp(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator
