from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from conftest import fractions
from zeta3cf.intervals import Interval, decimal_string, truncate_decimal
from zeta3cf.oracle import bernoulli_numbers, zeta3_interval, zeta_interval


def _contains_mp(iv: Interval, value, dps: int) -> bool:
    with mpmath.workdps(dps + 20):
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        return lo <= value() <= hi


@pytest.mark.parametrize("digits", [10, 30, 120])
def test_zeta3_interval_contains_reference(digits):
    iv = zeta3_interval(Fraction(1, 10**digits))
    assert iv.width <= Fraction(1, 10**digits)
    assert _contains_mp(iv, lambda: mpmath.zeta(3), digits)


@pytest.mark.parametrize("s", [2, 4, 5])
def test_zeta_interval_other_arguments(s):
    iv = zeta_interval(s, Fraction(1, 10**40))
    assert _contains_mp(iv, lambda: mpmath.zeta(s), 40)


def test_bernoulli_numbers():
    b = bernoulli_numbers(8)
    assert b[2] == Fraction(1, 6)
    assert b[4] == Fraction(-1, 30)
    assert b[8] == Fraction(-1, 30)


def test_decimal_strings():
    x = Fraction(12020569031595942, 10**16)
    assert decimal_string(x, 10) == "1.2020569032"
    assert truncate_decimal(x, 10) == "1.2020569031"
    assert decimal_string(Fraction(-1, 3), 2) == "-0.33"


@given(fractions, fractions, fractions, fractions)
def test_interval_arithmetic_encloses_point_results(a, b, c, d):
    x = Interval(min(a, b), max(a, b))
    y = Interval(min(c, d), max(c, d))
    for u in (x.lo, x.hi, x.mid):
        for v in (y.lo, y.hi, y.mid):
            assert (x + y).contains(u + v)
            assert (x - y).contains(u - v)
            assert (x * y).contains(u * v)


@given(fractions, fractions)
def test_outward_rounding_only_widens(a, b):
    x = Interval(min(a, b), max(a, b))
    w = x.outward(1000)
    assert w.lo <= x.lo and w.hi >= x.hi
    assert w.lo.denominator <= 1000 and w.hi.denominator <= 1000
