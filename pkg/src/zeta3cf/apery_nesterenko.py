"""Apery's sequences, the zeta(3) continued fraction and Nesterenko's expansion.

Also the machinery tying them together: the four-step blocks ``B_k`` of the
Nesterenko fraction, the intertwiners ``H_k`` with
``U_apery[k] = H_k U_nest[4k-2]``, closed-form partial-numerator products
and empirical convergence slopes.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cf_engine import CFSpec, convergents, step_matrix
from .errors import NonPositiveError
from .exact_core import factorial, mat_mul
from .intervals import Interval
from .report import Report, require

F = Fraction


# -- Apery numbers ------------------------------------------------------------

@dataclass(frozen=True)
class AperyPair:
    nu: int
    u: Fraction
    v: Fraction


def apery_coeffs(nu: int) -> tuple[int, int, int]:
    """Coefficients of ``c1 x[nu+1] - c0 x[nu] + c_1 x[nu-1] = 0``."""
    return (nu + 1) ** 3, 34 * nu**3 + 51 * nu**2 + 27 * nu + 5, nu**3


@lru_cache(maxsize=None)
def _apery_table(n: int) -> tuple:
    # initial values u0=1, u1=5, v0=0, v1=6
    u, v = [F(1), F(5)], [F(0), F(6)]
    for nu in range(1, n):
        c1, c0, cm = apery_coeffs(nu)
        u.append((c0 * u[nu] - cm * u[nu - 1]) / c1)
        v.append((c0 * v[nu] - cm * v[nu - 1]) / c1)
    return tuple(zip(u[: n + 1], v[: n + 1]))


def apery_sequence(n: int) -> list[AperyPair]:
    """``AperyPair`` for nu = 0..n."""
    return [AperyPair(i, u, v) for i, (u, v) in enumerate(_apery_table(max(n, 1))[: n + 1])]


def apery_pair(nu: int) -> AperyPair:
    if nu < 0:
        raise ValueError("nu must be >= 0")
    return apery_sequence(nu)[nu]


# -- continued fractions -----------------------------------------------------

def zeta3_cf_spec() -> CFSpec:
    """``0 + 6/(5 - 1/(117 - 64/(535 - ...)))`` with convergents ``(nu!)^3 (v, u)``."""

    def coeff(n: int):
        if n == 1:
            return 6, 5
        nu = n - 1
        return -(nu**6), 34 * nu**3 + 51 * nu**2 + 27 * nu + 5

    return CFSpec(F(0), coeff, "zeta3")


def _nesterenko_coeff(n: int):
    k, m = divmod(n, 4)
    if n <= 2:
        return {1: (1, 4), 2: (4, 4)}[n]
    if m == 1:
        return k * (k + 1), 2 * k + 2
    if m == 2:
        return (k + 1) * (k + 2), 2 * k + 4
    if m == 3:
        return (k + 1) ** 2, 2 * k + 3
    k -= 1  # n = 4k + 4
    return (k + 2) ** 2, 2 * k + 2


def nesterenko_cf_spec() -> CFSpec:
    """Nesterenko's fraction normalized to converge to zeta(3)."""
    return CFSpec(F(1), _nesterenko_coeff, "nesterenko")


def nesterenko_2zeta3_spec() -> CFSpec:
    """The same tail with the prefix ``2 + 1/(2 + 2/(4 + ...))``; value 2 zeta(3)."""

    def coeff(n: int):
        if n == 1:
            return 1, 2
        if n == 2:
            return 2, 4
        return _nesterenko_coeff(n)

    return CFSpec(F(2), coeff, "nesterenko-2zeta3")


# -- intertwining ------------------------------------------------------------

def block_B(k: int) -> list[list[Fraction]]:
    """Closed form of ``A[4k-3] A[4k-4] A[4k-5] A[4k-6]`` (Nesterenko steps)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return [
        [F(5 * k * (k - 1) ** 3), F(k * (12 * k * k - 15 * k + 5))],
        [F(12 * k * (k + 1) * (k - 1) ** 3), F(k * (k + 1) * (29 * k * k - 36 * k + 12))],
    ]


def block_B_product(k: int) -> list[list[Fraction]]:
    spec = nesterenko_cf_spec()
    M = step_matrix(spec, 4 * k - 6)
    for j in (4 * k - 5, 4 * k - 4, 4 * k - 3):
        M = mat_mul(step_matrix(spec, j), M)
    return M


def _c(k: int) -> Fraction:
    return F(1, -2 * (k - 1) ** 3 * factorial(k + 1))


def intertwiner_H(k: int) -> list[list[Fraction]]:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return [[F(-24, 4), F(5, 4)], [F(0), F(1, 4)]]
    c1 = _c(k + 1)
    return [
        [12 * (k + 2) * (k + 1) * c1, -5 * (k + 2) * c1],
        [F(0), -((k - 1) ** 3) * _c(k)],
    ]


def apery_step(k: int) -> list[list[Fraction]]:
    """``A_apery[k]`` with ``U_apery[k+1] = A_apery[k] U_apery[k]``."""
    return step_matrix(zeta3_cf_spec(), k)


def _u_seq(spec: CFSpec, n: int) -> list[list[list[Fraction]]]:
    """``U_0 .. U_n`` from one pass over the convergents."""
    pq = convergents(spec, n)
    out = [[[F(1), F(0)], list(pq[0])]]
    for i in range(1, n + 1):
        out.append([list(pq[i - 1]), list(pq[i])])
    return out


def verify_block_B(k_max: int = 40) -> None:
    for k in range(2, k_max + 1):
        require(block_B(k) == block_B_product(k), "B_k closed form = product of steps", k=k)


def verify_intertwining(k_max: int = 40) -> None:
    """``A_apery[k-1] H[k-1] = H[k] B[k]`` for 2 <= k <= k_max."""
    for k in range(2, k_max + 1):
        lhs = mat_mul(apery_step(k - 1), intertwiner_H(k - 1))
        rhs = mat_mul(intertwiner_H(k), block_B(k))
        require(lhs == rhs, "A[k-1] H[k-1] = H[k] B[k]", k=k)


def verify_u_identity(k_max: int = 40) -> None:
    """``U_apery[k] = H[k] U_nest[4k-2]`` for 1 <= k <= k_max."""
    ua = _u_seq(zeta3_cf_spec(), k_max)
    un = _u_seq(nesterenko_cf_spec(), 4 * k_max - 2)
    for k in range(1, k_max + 1):
        require(ua[k] == mat_mul(intertwiner_H(k), un[4 * k - 2]),
                "U_apery[k] = H[k] U_nest[4k-2]", k=k)


def verify_subsequence(k_max: int = 40) -> None:
    """``P_apery[k] = P_nest[4k-2] / (2 (k+1)!)`` and ``P_nest[4k-2] = 2(k+1)(k!)^4 v_k``."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    pa = convergents(zeta3_cf_spec(), k_max)
    pn = convergents(nesterenko_cf_spec(), 4 * k_max - 2)
    ap = apery_sequence(k_max)
    for k in range(2, k_max + 1):
        P_n, Q_n = pn[4 * k - 2]
        require(pa[k][0] == P_n / (2 * factorial(k + 1)), "P_apery[k] = P_nest[4k-2]/(2(k+1)!)", k=k)
        require(pa[k][1] == Q_n / (2 * factorial(k + 1)), "Q_apery[k] = Q_nest[4k-2]/(2(k+1)!)", k=k)
        require(P_n == 2 * (k + 1) * factorial(k) ** 4 * ap[k].v, "P_nest[4k-2] = 2(k+1)(k!)^4 v_k", k=k)


def verify_apery_integrality(n_max: int = 60) -> None:
    pq = convergents(zeta3_cf_spec(), n_max)
    for p in apery_sequence(n_max):
        f3 = factorial(p.nu) ** 3
        require(p.u.denominator == 1, "u_nu integral", nu=p.nu)
        require((f3 * p.v).denominator == 1, "(nu!)^3 v_nu integral", nu=p.nu)
        require(pq[p.nu] == (f3 * p.v, f3 * p.u), "(P, Q)_apery = (nu!)^3 (v, u)", nu=p.nu)


# -- products and growth -----------------------------------------------------

def partial_products(k: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed forms of ``prod a_kappa`` up to 4k-2, 4k-1, 4k, 4k+1."""
    if k < 2:
        raise ValueError("k must be >= 2")
    base = 2 * F(factorial(k)) ** 8 * (k + 1)
    return base / k**3, base / k, base * (k + 1) ** 2 / k, base * (k + 1) ** 3


def literal_partial_products(k: int) -> tuple[Fraction, ...]:
    spec = nesterenko_cf_spec()
    acc, out = F(1), {}
    for n in range(1, 4 * k + 2):
        acc *= spec.a(n)
        out[n] = acc
    return tuple(out[4 * k + j] for j in (-2, -1, 0, 1))


def verify_partial_products(k_max: int = 40) -> None:
    for k in range(2, k_max + 1):
        require(partial_products(k) == literal_partial_products(k), "partial-numerator products", k=k)


def verify_interlacing(k_max: int = 40) -> None:
    """Monotone interlacing of Nesterenko denominators with polynomial upper factors."""
    q = [Q for _, Q in convergents(nesterenko_cf_spec(), 4 * k_max + 1)]
    for k in range(2, k_max + 1):
        q2, q1, q0, qp = q[4 * k - 2], q[4 * k - 1], q[4 * k], q[4 * k + 1]
        require(q2 < q1 < q2 * (k * k + 2 * k + 1), "Q[4k-2] < Q[4k-1] < (k+1)^2 Q[4k-2]", k=k)
        require(q1 < q0 < q1 * (k * k + 4 * k + 1), "Q[4k-1] < Q[4k] < (k^2+4k+1) Q[4k-1]", k=k)
        require(q0 < qp < q0 * (k * k + 3 * k + 2), "Q[4k] < Q[4k+1] < (k+1)(k+2) Q[4k]", k=k)


def _log_abs(x: Fraction) -> float:
    x = abs(x)
    return math.log(x.numerator) - math.log(x.denominator)


def log_errors(ratios, reference) -> list[float]:
    """``log |r - reference|`` for each ratio.

    ``reference`` may be an exact rational or an ``Interval``; for an interval
    the error must be resolved well beyond the interval width.
    """
    out = []
    for i, r in enumerate(ratios):
        if isinstance(reference, Interval):
            err = reference - r
            if err.abs_lower() == 0 or err.width * 10**6 > err.abs_lower():
                raise ValueError(f"reference interval too wide to resolve error at position {i}")
            e = err.mid
        else:
            e = F(r) - F(reference)
        if e == 0:
            raise NonPositiveError(f"exact hit at position {i}")
        out.append(_log_abs(e))
    return out


def error_slope(ratios, reference, indices=None) -> float:
    """Least-squares slope of ``log|error|`` against the index."""
    if len(ratios) < 10:
        raise ValueError("need at least 10 ratios")
    ys = log_errors(ratios, reference)
    xs = list(indices) if indices is not None else list(range(len(ratios)))
    return statistics.linear_regression(xs, ys).slope


def growth_slope(values, indices) -> float:
    """Least-squares slope of ``log|value|`` against the index."""
    return statistics.linear_regression(list(indices), [_log_abs(F(v)) for v in values]).slope


TARGET_SLOPE = -8 * math.log(1 + math.sqrt(2))


def run_suite(k_max: int = 40) -> Report:
    rep = Report("nesterenko")
    rep.run("four-step blocks", "B_k closed form = A[4k-3] A[4k-4] A[4k-5] A[4k-6]", lambda: verify_block_B(k_max))
    rep.run("intertwining", "A_apery[k-1] H[k-1] = H[k] B[k]", lambda: verify_intertwining(k_max))
    rep.run("convergent matrices", "U_apery[k] = H[k] U_nest[4k-2]", lambda: verify_u_identity(k_max))
    rep.run("subsequence", "P_apery[k] = P_nest[4k-2]/(2(k+1)!), P_nest[4k-2] = 2(k+1)(k!)^4 v_k",
            lambda: verify_subsequence(k_max))
    rep.run("Apery integrality", "u_nu, (nu!)^3 v_nu integral", lambda: verify_apery_integrality(k_max))
    rep.run("partial-numerator products", "prod a up to 4k-2 .. 4k+1", lambda: verify_partial_products(k_max))
    rep.run("denominator interlacing", "Q[4k-2] < Q[4k-1] < Q[4k] < Q[4k+1]", lambda: verify_interlacing(k_max))
    return rep
