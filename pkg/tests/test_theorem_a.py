import math
from fractions import Fraction

import pytest

from zeta3cf import theorem_a as ta
from zeta3cf.beta_functions import beta_star
from zeta3cf.cf_engine import convergents

F = Fraction


def test_recurrence_solutions():
    assert ta.recurrence_solution(1, "Q", 2) == [1, 34, 1029]
    assert ta.recurrence_solution(1, "P", 2) == [3, F(327, 4), F(14843, 6)]
    assert ta.recurrence_solution(2, "Q", 2) == [1, 52, 2277]
    assert ta.recurrence_solution(2, "P", 2) == [2, 125, F(32845, 6)]
    with pytest.raises(ValueError):
        ta.recurrence_solution(1, "R", 2)


@pytest.mark.parametrize("label", [1, 2])
def test_characteristic_polynomial(label):
    assert ta.characteristic_polynomial(label) == (1, -34, 1)


@pytest.mark.parametrize("label", [1, 2])
def test_agrees_with_generating_polynomials(label):
    ta.verify_beta_identification(label, 40)


def test_seeds():
    r1, r2 = ta.RECURRENCES[1], ta.RECURRENCES[2]
    assert r1.b1 * r1.b0 + r1.a1 == F(327, 4) == beta_star(1, 1, 1).at(4, 1)
    assert r2.b1 * r2.b0 + r2.a1 == 125 == beta_star(1, 1, 2).at(4, 1)


def test_integer_expansions():
    s1, s2 = ta.theorem_a_spec(1), ta.theorem_a_spec(2)
    assert (s1.b0, s1.coeffs(1), s1.coeffs(2)) == (3, (-81, 136), (-1000, 14716))
    assert (s2.b0, s2.coeffs(1), s2.coeffs(2)) == (2, (42, 104), (-760, 11042))
    assert convergents(s1, 2)[-1] == (4809132, 2000376)
    assert convergents(s2, 2)[-1] == (2758980, 1147608)
    assert (2758980, 1147608) == (504 * F(32845, 6), 504 * 2277)


@pytest.mark.parametrize("which", [1, 2])
def test_closed_form_matches_transform(which):
    ta.verify_constructions(which, 100)


def test_d_scaling_ratios():
    assert ta.d_scaling(1, 1) == 4 and ta.d_scaling(2, 1) == 2
    for nu in range(0, 10):
        t = nu + 1
        assert ta.d_scaling(1, nu + 1) == ta.d_scaling(1, nu) * t * (t + 1) ** 2 * (2 * t - 1) ** 3


@pytest.mark.parametrize("k", [1, 3])
def test_delta_recurrences(k):
    ta.verify_delta_recurrences(k, 40)


def test_zeta_form_arithmetic():
    x = ta.ZetaForm(F(2), F(3))
    assert (x.scale(2) - x - x).is_zero()


def test_early_errors():
    e1 = ta.error_at(1, 2)
    assert e1.abs_upper() < F(1, 10**5)
    e2 = ta.error_at(2, 1)
    assert F(25, 10**5) < e2.abs_lower() and e2.abs_upper() < F(28, 10**5)


@pytest.mark.parametrize("which", [1, 2])
def test_convergence_slope(which):
    res = ta.converge_2zeta3(which, 40)
    assert abs(res.slope / ta.TARGET_SLOPE - 1) < 0.02
    assert res.error.abs_upper() < F(1, 10**120)


def test_expansions_approach_each_other():
    r1 = [p / q for p, q in convergents(ta.theorem_a_spec(1), 40)]
    r2 = [p / q for p, q in convergents(ta.theorem_a_spec(2), 40)]
    gaps = [abs(a - b) for a, b in zip(r1, r2)]
    assert all(g2 < g1 for g1, g2 in zip(gaps[1:], gaps[2:]))
    assert gaps[40] < F(1, 10**120)


@pytest.mark.parametrize("label", [1, 2])
def test_growth_and_decay_rates(label):
    assert ta.q_growth_slope(label) == pytest.approx(ta.GROWTH_RATE, rel=0.02)
    assert ta.form_decay_slope(label) == pytest.approx(-ta.GROWTH_RATE, rel=0.02)


@pytest.mark.xfail(strict=True, reason="denominators grow like (1+sqrt2)^(4 nu), not (1+sqrt2)^(8 nu)")
def test_growth_rate_literal_eight_log():
    assert ta.q_growth_slope(1) == pytest.approx(8 * math.log(1 + math.sqrt(2)), rel=0.02)


def test_suite():
    rep = ta.run_suite(20)
    assert rep.ok and len(rep.waivers) == 2
