from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zeta3cf.cf_engine import (
    CFSpec,
    convergent_ratios,
    convergents,
    equivalence_transform,
    partial_numerator_product,
    ratio,
    u_matrix,
)
from zeta3cf.errors import DividedByZeroConvergent, ZeroPartialNumerator, ZeroScale

nonzero = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda x: x != 0)


def _table_spec(b0, pairs):
    return CFSpec(b0, lambda n: pairs[n - 1], "table")


def test_golden_ratio_convergents():
    fib = CFSpec(Fraction(1), lambda n: (1, 1), "golden")
    assert [p for p, _ in convergents(fib, 6)] == [1, 2, 3, 5, 8, 13, 21]
    assert convergent_ratios(fib, 3)[-1] == Fraction(5, 3)


def test_zero_partial_numerator_rejected():
    with pytest.raises(ZeroPartialNumerator):
        convergents(CFSpec(Fraction(0), lambda n: (0, 1)), 2)


def test_zero_denominator_convergent():
    with pytest.raises(DividedByZeroConvergent):
        ratio(Fraction(1), Fraction(0), 3)


def test_zero_scale_rejected():
    spec = CFSpec(Fraction(1), lambda n: (1, 1))
    with pytest.raises(ZeroScale):
        equivalence_transform(spec, lambda n: 0).coeffs(2)


@given(st.lists(st.tuples(nonzero, nonzero), min_size=1, max_size=8), nonzero,
       st.lists(nonzero, min_size=8, max_size=8))
def test_equivalence_transform_preserves_ratios(pairs, b0, ds):
    spec = _table_spec(b0, pairs)
    scaled = equivalence_transform(spec, lambda n: ds[n - 1])
    n = len(pairs)
    for (p, q), (ps, qs), k in zip(convergents(spec, n), convergents(scaled, n), range(n + 1)):
        d = Fraction(1) if k == 0 else ds[k - 1]
        assert (ps, qs) == (p * d, q * d)


@given(st.lists(st.tuples(nonzero, nonzero), min_size=1, max_size=8), nonzero)
def test_determinant_identity(pairs, b0):
    spec = _table_spec(b0, pairs)
    for nu in range(len(pairs) + 1):
        U = u_matrix(spec, nu)
        sign = (-1) ** nu
        assert U.det == sign * partial_numerator_product(spec, nu)
        assert U.rows[1] == tuple(convergents(spec, nu)[-1])
