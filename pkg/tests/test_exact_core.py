from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import coeff_lists, fractions
from zeta3cf.exact_core import BiPoly, UniPoly, binom, delta, delta_pow, det2, identity, mat_mul

Z = UniPoly.x("z")


def test_trim_and_equality_ignore_label():
    assert UniPoly([1, 2, 0, 0], "z") == UniPoly([1, 2], "nu")
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([0, 0]).degree == -1


def test_binom_edges():
    assert binom(5, 2) == 10
    assert binom(5, -1) == binom(5, 6) == 0
    assert binom(0, 0) == 1


def test_divmod_linear():
    p = (Z - 1) * (Z + 3) * (Z - Fraction(1, 2)) + 7
    q, r = p.divmod_linear(1)
    assert r == 7
    assert q * (Z - 1) + 7 == p


def test_delta_scales_monomials():
    assert delta(UniPoly([5, 3, 2])) == UniPoly([0, 3, 4])
    assert delta_pow(UniPoly([1, 1, 1]), 3) == UniPoly([0, 1, 8])


@given(coeff_lists, coeff_lists)
def test_delta_is_a_derivation(a, b):
    p, q = UniPoly(a), UniPoly(b)
    assert delta(p * q) == delta(p) * q + p * delta(q)


@given(coeff_lists, coeff_lists, fractions)
def test_evaluation_is_a_ring_map(a, b, x):
    p, q = UniPoly(a), UniPoly(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(coeff_lists, coeff_lists, fractions)
def test_compose_matches_nested_evaluation(a, b, x):
    p, q = UniPoly(a), UniPoly(b)
    assert p.compose(q)(x) == p(q(x))


@given(coeff_lists, fractions)
def test_synthetic_division_roundtrip(a, root):
    p = UniPoly(a)
    q, r = p.divmod_linear(root)
    assert q * (Z - root) + r == p
    assert r == p(root)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_fraction_string_roundtrip(n, d):
    x = Fraction(n, d)
    assert Fraction(str(x)) == x


@given(coeff_lists)
def test_derivative_leibniz(a):
    p = UniPoly(a)
    assert (p * p).derivative() == 2 * p * p.derivative()


@given(st.lists(coeff_lists, max_size=4), st.lists(coeff_lists, max_size=4), fractions, fractions)
def test_bipoly_specializations_commute(a, b, z, nu):
    p = BiPoly([UniPoly(c, "nu") for c in a])
    q = BiPoly([UniPoly(c, "nu") for c in b])
    assert (p * q)(z, nu) == p(z, nu) * q(z, nu)
    assert p.at_z(z)(nu) == p.at_nu(nu)(z)


def test_matrix_helpers():
    a = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert mat_mul(a, identity(2)) == a
    assert det2(a) == -2
    with pytest.raises(ValueError):
        UniPoly([1]) ** -1
