from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from zeta3cf import beta_functions as bf
from zeta3cf.errors import Divergence
from zeta3cf.exact_core import UniPoly
from zeta3cf.oracle import zeta3_interval

F = Fraction
Z = UniPoly.x("z")


def test_harmonic_sums():
    assert bf.harmonic_S(1, 0, 0, 1) == -2
    assert bf.harmonic_S(1, 1, 0, 1) == F(1, 2)
    assert bf.harmonic_S(1, 0, 0, 0) == 0
    assert bf.harmonic_S(1, 1, 1, 1) == F(-1, 2)
    assert bf.harmonic_S(1, 3, 1, 2) == F(83, 60)
    assert bf.harmonic_S(1, 0, 1, 2) == F(-10, 3)


def test_base_tables():
    assert bf.beta_base(1, 1).b2 == (1, 16, 9)
    assert bf.beta_base(1, 2).b1 == (F(-20, 3), -216, -54, F(830, 3))
    assert bf.beta_base(1, 2).b2 == (1, 81, 324, 100)
    assert bf.beta_base(0, 1).b1 == (-4, 4)
    assert bf.beta_base(0, 0).b1 == (0,)


def test_lift():
    assert UniPoly(bf.beta_table(1, 1, 1).b1) == (Z - 1) * (33 * Z + 1)
    assert UniPoly(bf.beta_table(1, 1, 2).b1) == 48 * Z * (Z - 1)
    assert sum(bf.beta_table(1, 1, 3).b1) == -4
    with pytest.raises(ValueError):
        bf.beta_lift(bf.beta_table(1, 1, 3))


@pytest.mark.parametrize("alpha,nu,r", [(1, 0, 0), (1, 3, 2), (2, 4, 3), (3, 5, 1), (0, 3, 0)])
def test_residue_oracle(alpha, nu, r):
    assert bf.beta_table(alpha, nu, r) == bf.beta_limit_oracle(alpha, nu, r)


@given(st.integers(1, 3), st.integers(0, 8), st.integers(0, 3),
       st.fractions(min_value=F(1, 7), max_value=50, max_denominator=40))
def test_reconstruction_property(alpha, nu, r, t):
    tab = bf.beta_table(alpha, nu, r)
    assert tab.reconstruct(t) == bf.target_function(alpha, nu, r, t)


# Tabulated generating polynomials (alpha = 1): (r, nu) -> (beta*_1 .. beta*_4)
TABLE = {
    (0, 0): (-2 + 2 * Z, 1 + Z, UniPoly([3]), UniPoly([4])),
    (0, 1): ((Z - 1) * (21 * Z + 5), UniPoly([1, 16, 9]), UniPoly([F(51, 4), 30]), UniPoly([F(47, 2), 39])),
    (0, 2): ((Z - 1) * UniPoly([20, 668, 830]) * F(1, 3), UniPoly([1, 81, 324, 100]),
             UniPoly([F(67, 3), F(1300, 3), F(1130, 3)]), UniPoly([F(2789, 54), F(4129, 6), F(1430, 3)])),
    (1, 0): (Z - 1, Z, UniPoly([2]), UniPoly([3])),
    (1, 1): ((Z - 1) * (33 * Z + 1), UniPoly([0, 16, 18]), UniPoly([5, 51]), UniPoly([F(51, 4), 69])),
    (1, 2): ((Z - 1) * UniPoly([1, 298, 730]), UniPoly([0, 81, 648, 300]), UniPoly([F(20, 3), 656, 1030]),
             UniPoly([F(67, 3), F(6729, 6), 1330])),
    (2, 0): (UniPoly(()), Z, UniPoly([1]), UniPoly([2])),
    (2, 1): (48 * Z * (Z - 1), UniPoly([0, 16, 36]), UniPoly([1, 84]), UniPoly([5, 120])),
    (2, 2): (378 * (Z - 1) * Z * (5 * Z + 1), UniPoly([0, 81, 1296, 900]), UniPoly([1, 954, 2790]),
             UniPoly([F(20, 3), F(3555, 2), 3690])),
}


@pytest.mark.parametrize("key", sorted(TABLE))
def test_tabulated_generating_polynomials(key):
    r, nu = key
    bs = bf.beta_star(1, nu, r)
    assert (bs.b1, bs.b2, bs.b3, bs.b4) == TABLE[key]


def test_alpha0_generating_polynomials():
    bs = bf.beta_star(0, 1, 0)
    assert (bs.b1, bs.b2, bs.b3, bs.b4) == (4 * Z - 4, 1 + 4 * Z, UniPoly([8]), UniPoly([12]))


@pytest.mark.parametrize("nu", [0, 5, 20])
def test_structure_and_sum_rules(nu):
    for alpha in (1, 2, 3):
        bf.verify_sum_rules(alpha, nu)
        bf.verify_beta_star_structure(alpha, nu)


def test_r3_shifted_divisibility():
    for nu in range(6):
        _, rem = (bf.beta_star(1, nu, 3).b1 + (nu + 1) ** 2).divmod_linear(1)
        assert rem == 0


def test_polylog_tails():
    assert bf.polylog_tail(0, 2) == bf.Interval.point(F(1))
    assert bf.polylog_tail(-2, 2) == bf.Interval.point(F(6))
    L3 = bf.polylog_tail(3, 2, F(1, 10**9))
    assert L3.width <= F(1, 10**9)
    assert abs(L3.lo - F(5372131936, 10**10)) <= F(1, 10**9)
    assert abs(L3.hi - F(5372131936, 10**10)) <= F(1, 10**9)
    with pytest.raises(Divergence):
        bf.polylog_tail(2, 1)


@pytest.mark.parametrize("s", [-3, -1, 1, 2, 3, 4])
def test_polylog_against_mpmath(s):
    iv = bf.polylog_tail(s, 3, F(1, 10**25))
    with mpmath.workdps(40):
        ref = mpmath.polylog(s, mpmath.mpf(1) / 3)
        assert mpmath.mpf(iv.lo.numerator) / iv.lo.denominator - mpmath.mpf(10) ** -30 <= ref
        assert ref <= mpmath.mpf(iv.hi.numerator) / iv.hi.denominator + mpmath.mpf(10) ** -30


def test_log_interval():
    iv = bf.log_interval(2, F(1, 10**30))
    with mpmath.workdps(40):
        assert mpmath.mpf(iv.lo.numerator) / iv.lo.denominator <= mpmath.log(2)
        assert mpmath.log(2) <= mpmath.mpf(iv.hi.numerator) / iv.hi.denominator


def test_series_first_term():
    assert bf.R_value(1, 1, 0) ** 2 == F(1, 4)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
@pytest.mark.parametrize("nu", [0, 1, 2])
def test_series_matches_closed_form(k, r, nu):
    tol = F(1, 10**10)
    s = bf.series_f(1, nu, r, k, 2, tol)
    c = bf.closed_form_f(1, nu, r, k, 2, tol)
    assert s.width <= 2 * tol and c.width <= 2 * tol
    assert s.overlaps(c)


def test_series_f3_with_log_term():
    # the full delta^r f*_3 = (log-corrected series) + log(z) * delta^r f*_2
    tol = F(1, 10**12)
    full = bf.series_f(1, 1, 0, 3, 3, tol) + bf.log_interval(3, tol) * bf.series_f(1, 1, 0, 2, 3, tol)
    assert full.width < F(1, 10**10)


def test_series_rejects_z_le_1():
    with pytest.raises(Divergence):
        bf.series_f(1, 1, 0, 2, 1)


def test_linear_forms_at_one():
    assert bf.linear_form_at_1(1, 1, 1, 1) == (68, F(327, 4))
    assert bf.linear_form_at_1(1, 2, 2, 1) == (4554, F(32845, 6))
    assert bf.linear_form_at_1(1, 1, 0, 0)[0] == 26
    with pytest.raises(ValueError):
        bf.linear_form_at_1(1, 1, 3, 1)


def test_linear_form_value_is_small():
    c, d = bf.linear_form_at_1(1, 1, 1, 1)
    val = c * zeta3_interval(F(1, 10**30)) - d
    assert abs(val.mid) < F(11, 1000)
    c, d = bf.linear_form_at_1(1, 10, 1, 1)
    assert abs((c * zeta3_interval(F(1, 10**60)) - d).mid) < F(1, 10**10)


@pytest.mark.xfail(strict=True, reason="literal example value 0.00091; the exact form gives -0.0101")
def test_linear_form_literal_example_value():
    c, d = bf.linear_form_at_1(1, 1, 1, 1)
    val = (c * zeta3_interval(F(1, 10**30)) - d).mid
    assert abs(val - F(91, 100000)) < F(1, 100000)


def test_zero_sums():
    assert 486 * 1029 - 14716 * 34 + 250 == 0
    assert bf.run_suite(nu_max=2).ok
