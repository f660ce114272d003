"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

The lines are also collected and repeated in the pytest terminal summary.
Run directly with ``python tests/test_acceptance.py`` for the lines alone.
"""
import time
from contextlib import contextmanager
from fractions import Fraction

from zeta3cf import apery_nesterenko as an
from zeta3cf import beta_functions as bf
from zeta3cf import matrix_system as ms
from zeta3cf import theorem_a as ta
from zeta3cf.cf_engine import convergents
from zeta3cf.exact_core import UniPoly
from zeta3cf.oracle import zeta3_interval
from zeta3cf.report import Report

F = Fraction
Z = UniPoly.x("z")
LINES: list[str] = []


@contextmanager
def criterion(n: int, title: str, budget: float | None = None):
    start = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed > budget:
            note = f" over budget {budget:.0f}s"
            raise AssertionError(f"criterion {n} took {elapsed:.1f}s > {budget}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {n}: {status} {title} ({elapsed:.2f}s){note}"
        LINES.append(line)
        print(line)


def test_criterion_1_nesterenko_machinery():
    with criterion(1, "intertwining, U-identity, subsequence and v_k formula exact for 2 <= k <= 40", 5):
        an.verify_intertwining(40)
        an.verify_u_identity(40)
        an.verify_subsequence(40)
        an.verify_block_B(40)


def test_criterion_2_reproduced_constants():
    with criterion(2, "tabulated convergents, beta tables and beta* polynomials exact"):
        pq = convergents(an.nesterenko_cf_spec(), 6)
        assert [pq[i] for i in (3, 4, 5, 6)] == [(77, 64), (250, 208), (1154, 960), (8424, 7008)]
        assert convergents(an.zeta3_cf_spec(), 2)[2] == (702, 584)
        assert bf.beta_table(1, 1, 0).b2 == (1, 16, 9)
        assert bf.beta_table(1, 2, 0).b2 == (1, 81, 324, 100)
        assert bf.beta_table(1, 2, 0).b1 == (F(-20, 3), -216, -54, F(830, 3))
        assert bf.beta_table(0, 1, 0).b1 == (-4, 4)
        assert bf.beta_star(1, 1, 0).b1 == (Z - 1) * (21 * Z + 5)
        assert bf.beta_star(1, 1, 2).b1 == 48 * Z * (Z - 1)
        assert bf.beta_star(1, 2, 2).b4 == 3690 * Z**2 + F(3555, 2) * Z + F(20, 3)
        assert bf.beta_star(1, 1, 0).b3 == F(51, 4) + 30 * Z
        assert bf.beta_star(1, 2, 1).b4 == F(67, 3) + F(6729, 6) * Z + 1330 * Z**2
        bs = bf.beta_star(1, 0, 2)
        assert (bs.b1, bs.b2, bs.b3, bs.b4) == (UniPoly(()), Z, UniPoly([1]), UniPoly([2]))


def test_criterion_3_matrix_identities():
    with criterion(3, "inversion, eigenrow, conjugation identities and displayed closed forms", 30):
        rep = Report("criterion-3")
        for a in (1, 2, 3):
            rep.run(f"inversion alpha={a}", "", lambda a=a: ms.verify_inversion(a))
        for a in (0, 1, 2, 3):
            rep.run(f"eigenrow alpha={a}", "", lambda a=a: ms.verify_eigenrow(a))
        rep.run("conjugators", "", ms.verify_conjugators)
        for k in (0, 1):
            rep.run(f"conjugated inversion kappa={k}", "", lambda k=k: ms.verify_transformed_inversion(k))
        ms.check_displayed_forms(rep)
        failed = [c.name for c in rep.checks if c.status == "fail"]
        waived = [c.name for c in rep.checks if c.status == "waived"]
        print(f"  {len(rep.checks)} checks, waived individually: {waived}")
        assert not failed, failed
        assert len(rep.waivers) >= len(waived)


def test_criterion_4_column_check():
    with criterion(4, "column recurrence for the terminating solution, alpha in {1,2}, 1 <= nu <= 10"):
        for a in (1, 2):
            ms.column_recurrence_check_k1(a, range(1, 11))


def test_criterion_5_beta_identities():
    with criterion(5, "sum rules, reconstruction oracle, beta*_2 = delta^r f*_1, two-route beta*", 10):
        for a in (1, 2, 3):
            for nu in range(21):
                bf.verify_sum_rules(a, nu)
                bf.verify_beta_star_structure(a, nu)
                for r in range(4):
                    bf.verify_reconstruction(a, nu, r, bf.random_points(50, 1000 * a + 10 * nu + r))


def test_criterion_6_sanity_zeros_and_delta_recurrences():
    with criterion(6, "zero sums and delta-recurrences exact for 1 <= nu <= 40"):
        q1 = [bf.beta_star(1, nu, 1).at(2, 1) for nu in range(3)]
        p1 = [bf.beta_star(1, nu, 1).at(4, 1) for nu in range(3)]
        q2 = [bf.beta_star(1, nu, 2).at(2, 1) for nu in range(3)]
        p2 = [bf.beta_star(1, nu, 2).at(4, 1) for nu in range(3)]
        assert (q1, q2) == ([1, 34, 1029], [1, 52, 2277])
        assert 486 * q1[2] - 14716 * q1[1] + 250 * q1[0] == 0
        assert 252 * q2[2] - 11042 * q2[1] + 380 * q2[0] == 0
        assert 486 * p1[2] - 14716 * p1[1] + 250 * p1[0] == 0
        assert 252 * p2[2] - 11042 * p2[1] + 380 * p2[0] == 0
        ta.verify_delta_recurrences(1, 40)
        ta.verify_delta_recurrences(3, 40)


def test_criterion_7_theorem_a():
    with criterion(7, "both expansions approach 2 zeta(3); certified early errors; slope within 2%", 20):
        assert convergents(ta.theorem_a_spec(1), 2)[2] == (4809132, 2000376)
        assert convergents(ta.theorem_a_spec(2), 2)[2] == (2758980, 1147608)
        assert ta.error_at(1, 2).abs_upper() < F(1, 10**5)
        assert ta.error_at(2, 2).abs_upper() < F(1, 10**4)
        for which in (1, 2):
            res = ta.converge_2zeta3(which, 40)
            print(f"  expansion {which}: slope {res.slope:.5f} vs {ta.TARGET_SLOPE:.5f}")
            assert abs(res.slope / ta.TARGET_SLOPE - 1) < 0.02


def test_criterion_8_asymptotics_replaced_by_slopes():
    with criterion(8, "existential constants not reproduced; Apery slope test stands in"):
        ref = zeta3_interval(F(1, 10**200))
        ks = range(5, 41)
        s = an.error_slope([an.apery_pair(k).v / an.apery_pair(k).u for k in ks], ref, ks)
        print(f"  Apery slope {s:.5f} vs {an.TARGET_SLOPE:.5f}")
        assert abs(s / an.TARGET_SLOPE - 1) < 0.02


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
