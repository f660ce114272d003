"""Partial-fraction coefficients of ``c (-t)^r R(t)^2`` and their generating polynomials.

Here ``R(t) = prod_{j=1..nu}(t-j) / prod_{j=0..nu+alpha}(t+j)`` and
``c = ((nu+alpha)!/nu!)^2``.  Writing

    c (-t)^r R(t)^2 = sum_{i=1,2} sum_k beta[i][k] (t+k)^-i

the generating polynomials ``beta*_i(z) = sum_k beta[i][k] z^k`` (i = 1, 2) and
the auxiliary ``beta*_3``, ``beta*_4`` give closed forms for the series
``sum_t z^-t c (-t)^r R(t)^2`` in terms of polylogarithm tails ``L_s(1/z)``,
and at ``z = 1`` rational linear forms in zeta(2) and zeta(3).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import Divergence, IdentityViolation
from .exact_core import UniPoly, binom, delta, delta_pow, factorial
from .intervals import Interval
from .report import Report, require

F = Fraction
Z = UniPoly.x("z")


def harmonic_S(i: int, k: int, alpha: int, nu: int) -> Fraction:
    """``-H_i(k+1 .. nu+k) - H_i(1 .. nu+alpha-k) + H_i(1 .. k)`` with ``H_i`` sums of ``1/m^i``."""

    def H(lo, hi):
        return sum((F(1, m**i) for m in range(lo, hi + 1)), F(0))

    return -H(k + 1, nu + k) - H(1, nu + alpha - k) + H(1, k)


def prefactor(alpha: int, nu: int) -> Fraction:
    return F(factorial(nu + alpha) ** 2, factorial(nu) ** 2)


def R_value(alpha: int, t, nu: int) -> Fraction:
    t = F(t)
    num = math.prod((t - j for j in range(1, nu + 1)), start=F(1))
    den = math.prod((t + j for j in range(0, nu + alpha + 1)), start=F(1))
    return num / den


@dataclass(frozen=True)
class BetaTable:
    alpha: int
    nu: int
    r: int
    b1: tuple  # beta[1][k], k = 0..nu+alpha (simple poles)
    b2: tuple  # beta[2][k] (double poles)

    def row(self, i: int) -> tuple:
        return self.b1 if i == 1 else self.b2

    def reconstruct(self, t) -> Fraction:
        """``sum_{i,k} beta[i][k] (t+k)^-i``."""
        t = F(t)
        return sum((self.b1[k] / (t + k) + self.b2[k] / (t + k) ** 2 for k in range(len(self.b1))), F(0))


def beta_base(alpha: int, nu: int) -> BetaTable:
    """Closed-form table at r = 0."""
    if alpha < 0 or nu < 0:
        raise ValueError("alpha and nu must be >= 0")
    n = nu + alpha
    b2 = tuple(binom(n, k) ** 2 * binom(nu + k, k) ** 2 for k in range(n + 1))
    b1 = tuple(2 * b2[k] * harmonic_S(1, k, alpha, nu) for k in range(n + 1))
    return BetaTable(alpha, nu, 0, b1, b2)


def beta_lift(table: BetaTable) -> BetaTable:
    """Table for ``r+1`` from the table for ``r`` (multiply the function by ``-t = -(t+k) + k``)."""
    if table.r >= 3:
        raise ValueError("lift defined for r <= 2")
    n = len(table.b1)
    b2 = tuple(k * table.b2[k] for k in range(n))
    b1 = tuple(k * table.b1[k] - table.b2[k] for k in range(n))
    return BetaTable(table.alpha, table.nu, table.r + 1, b1, b2)


@lru_cache(maxsize=None)
def beta_table(alpha: int, nu: int, r: int) -> BetaTable:
    t = beta_base(alpha, nu)
    for _ in range(r):
        t = beta_lift(t)
    return t


# -- independent oracles -----------------------------------------------------

def beta_limit_oracle(alpha: int, nu: int, r: int) -> BetaTable:
    """Coefficients from the residue definition, via exact quotient-rule differentiation.

    With ``G_k(t) = c (-t)^r (R(t)(t+k))^2 = N(t)/D(t)``, the double-pole
    coefficient is ``G_k(-k)`` and the simple-pole coefficient ``G_k'(-k)``.
    """
    T = UniPoly.x("t")
    c = prefactor(alpha, nu)
    top = (-T) ** r
    for j in range(1, nu + 1):
        top = top * (T - j) ** 2
    b1, b2 = [], []
    for k in range(nu + alpha + 1):
        den = UniPoly.const(1, "t")
        for j in range(nu + alpha + 1):
            if j != k:
                den = den * (T + j) ** 2
        x = F(-k)
        Nv, Dv = top(x), den(x)
        dN, dD = top.derivative()(x), den.derivative()(x)
        b2.append(c * Nv / Dv)
        b1.append(c * (dN * Dv - Nv * dD) / Dv**2)
    return BetaTable(alpha, nu, r, tuple(b1), tuple(b2))


def target_function(alpha: int, nu: int, r: int, t) -> Fraction:
    t = F(t)
    return prefactor(alpha, nu) * (-t) ** r * R_value(alpha, t, nu) ** 2


def verify_reconstruction(alpha: int, nu: int, r: int, points) -> None:
    tab = beta_table(alpha, nu, r)
    for t in points:
        require(tab.reconstruct(t) == target_function(alpha, nu, r, t),
                "partial-fraction reconstruction", alpha=alpha, nu=nu, r=r, t=t)


def verify_against_oracle(alpha: int, nu: int, r: int) -> None:
    require(beta_table(alpha, nu, r) == beta_limit_oracle(alpha, nu, r),
            "closed-form table = residue definition", alpha=alpha, nu=nu, r=r)


def verify_sum_rules(alpha: int, nu: int) -> None:
    """Sum of simple-pole coefficients: 0 for r <= 2, and -(nu+1)^2 for r = 3 when alpha = 1."""
    for r in range(3):
        require(sum(beta_table(alpha, nu, r).b1) == 0, "sum beta1 = 0", alpha=alpha, nu=nu, r=r)
    if alpha == 1:
        require(sum(beta_table(1, nu, 3).b1) == -((nu + 1) ** 2), "sum beta1 = -(nu+1)^2", nu=nu)


# -- generating polynomials --------------------------------------------------

@dataclass(frozen=True)
class BetaStarPolys:
    alpha: int
    nu: int
    r: int
    b1: UniPoly
    b2: UniPoly
    b3: UniPoly
    b4: UniPoly

    def get(self, i: int) -> UniPoly:
        return (self.b1, self.b2, self.b3, self.b4)[i - 1]

    def at(self, i: int, z) -> Fraction:
        return self.get(i)(F(z))


def _weight(i: int, j: int) -> int:
    return 1 - j + i * j


def beta_star_direct(alpha: int, nu: int, r: int) -> BetaStarPolys:
    """``beta*_1..4`` straight from the coefficient table."""
    tab = beta_table(alpha, nu, r)
    n = nu + alpha
    b1 = UniPoly(tab.b1, "z")
    b2 = UniPoly(tab.b2, "z")
    extra = []
    for j in (0, 1):
        coeffs = [F(0)] * max(n, 1)
        for i in (1, 2):
            w = _weight(i, j)
            row = tab.row(i)
            for k in range(1, n + 1):
                for tau in range(1, k + 1):
                    coeffs[k - tau] += w * row[k] * F(1, tau ** (i + j))
        extra.append(UniPoly(coeffs, "z"))
    return BetaStarPolys(alpha, nu, r, b1, b2, extra[0], extra[1])


def _drop_root_at_one(p: UniPoly, **ctx) -> UniPoly:
    q, rem = p.divmod_linear(1)
    if rem != 0:
        raise IdentityViolation("beta*_1 divisible by (z-1)", ctx)
    return q


def beta_star_recursive(alpha: int, nu: int, r: int) -> BetaStarPolys:
    """``beta*`` at level r obtained from level 0 by the Euler-operator recurrences."""
    cur = beta_star_direct(alpha, nu, 0)
    for s in range(1, r + 1):
        b1 = delta(cur.b1) - cur.b2
        b2 = delta(cur.b2)
        b3 = delta(cur.b3) + _drop_root_at_one(cur.b1, alpha=alpha, nu=nu, r=s - 1)
        b4 = delta(cur.b4) + cur.b3
        cur = BetaStarPolys(alpha, nu, s, b1, b2, b3, b4)
    return cur


@lru_cache(maxsize=None)
def beta_star(alpha: int, nu: int, r: int) -> BetaStarPolys:
    """Generating polynomials, checked by both routes."""
    if not 0 <= r <= 3:
        raise ValueError("r must be in 0..3")
    d = beta_star_direct(alpha, nu, r)
    rec = beta_star_recursive(alpha, nu, r)
    for i in (1, 2, 3, 4):
        if d.get(i) != rec.get(i):
            raise IdentityViolation("direct and recursive beta* agree", {"alpha": alpha, "nu": nu, "r": r, "i": i})
    return d


def f_star_1(alpha: int, nu: int) -> UniPoly:
    """``sum_k z^k C(nu+alpha, k)^2 C(nu+k, nu)^2`` (terminating solution)."""
    return UniPoly([binom(nu + alpha, k) ** 2 * binom(nu + k, nu) ** 2 for k in range(nu + alpha + 1)], "z")


def verify_beta_star_structure(alpha: int, nu: int) -> None:
    for r in range(4):
        bs = beta_star(alpha, nu, r)
        require(bs.b2 == delta_pow(f_star_1(alpha, nu), r), "beta*_2 = delta^r f*_1", alpha=alpha, nu=nu, r=r)
        require(all(c >= 0 and c.denominator == 1 for c in bs.b2.coeffs), "beta*_2 in N[z]",
                alpha=alpha, nu=nu, r=r)
        if r <= 2:
            require(bs.b1(1) == 0, "beta*_1(1) = 0", alpha=alpha, nu=nu, r=r)
        elif alpha == 1:
            require(bs.b1(1) == -((nu + 1) ** 2), "beta*_1(1) = -(nu+1)^2", nu=nu)


# -- polylogarithm tails and logarithms -------------------------------------

@lru_cache(maxsize=None)
def polylog_nonpositive(s: int) -> UniPoly:
    """``L_s(1/z)`` for ``s <= 0`` as a polynomial in ``u = 1/(z-1)``."""
    if s > 0:
        raise ValueError("closed form only for s <= 0")
    if s == 0:
        return UniPoly((0, 1), "u")
    prev = polylog_nonpositive(s + 1)
    # -delta(u^m) = m (u^m + u^(m+1))
    out = [F(0)] * (len(prev.coeffs) + 1)
    for m, c in enumerate(prev.coeffs):
        out[m] += m * c
        out[m + 1] += m * c
    return UniPoly(out, "u")


def polylog_tail(s: int, z, tol=F(1, 10**20)) -> Interval:
    """Enclosure of ``L_s(1/z) = sum_{n>=1} z^-n n^-s`` of width <= tol."""
    z, tol = F(z), F(tol)
    if z <= 1:
        raise Divergence("L_s(1/z) needs z > 1")
    if s <= 0:
        return Interval.point(polylog_nonpositive(s)(1 / (z - 1)))
    x = 1 / z
    acc, n, xn = F(0), 0, F(1)
    while True:
        n += 1
        xn *= x
        acc += xn / n**s
        tail = xn * x / ((n + 1) ** s * (1 - x))
        if tail <= tol:
            return Interval(acc, acc + tail)


def log_interval(z, tol=F(1, 10**20)) -> Interval:
    """Enclosure of ``log z`` for rational ``z > 0`` via ``2 atanh((z-1)/(z+1))``."""
    z, tol = F(z), F(tol)
    if z <= 0:
        raise ValueError("log needs z > 0")
    x = (z - 1) / (z + 1)
    sign = 1 if x >= 0 else -1
    x = abs(x)
    acc, k, p = F(0), 0, x
    while True:
        acc += p / (2 * k + 1)
        p *= x * x
        tail = 2 * p / ((2 * k + 3) * (1 - x * x))
        k += 1
        if tail <= tol:
            iv = Interval(2 * acc, 2 * acc + tail)
            return iv if sign > 0 else -iv


# -- the series and its closed form ------------------------------------------

def _series_term(alpha: int, nu: int, r: int, k: int, t: int) -> Fraction:
    """t-th coefficient of the series for k = 2 (the function) or k = 3 (minus its t-derivative)."""
    if t <= nu:
        return F(0)  # double zero of R^2
    val = target_function(alpha, nu, r, t)
    if k == 2:
        return val
    tt = F(t)
    logder = F(r) / tt + 2 * (sum(F(1) / (tt - j) for j in range(1, nu + 1))
                              - sum(F(1) / (tt + j) for j in range(0, nu + alpha + 1)))
    return -val * logder


def series_f(alpha: int, nu: int, r: int, k: int, z, tol=F(1, 10**12)) -> Interval:
    """Direct summation of ``delta^r f*_k(z)``; for k = 3 the ``log z`` part is removed.

    k = 2: ``sum_t z^-t c (-t)^r R(t)^2``.
    k = 3: ``sum_t z^-t (-c d/dt[(-t)^r R(t)^2])`` which equals
    ``delta^r f*_3 - log(z) delta^r f*_2``.
    For ``t > nu`` every term is bounded by ``c * K * z^-t`` with ``K = 1`` (k = 2)
    or ``K = r + 4 nu + 2 alpha + 2`` (k = 3), which gives the geometric tail bound.
    """
    z, tol = F(z), F(tol)
    if z <= 1:
        raise Divergence("series needs z > 1")
    if k not in (2, 3) or alpha < 1 or not 0 <= r <= 3:
        raise ValueError("need k in {2,3}, alpha >= 1, r in 0..3")
    K = 1 if k == 2 else r + 4 * nu + 2 * alpha + 2
    c = prefactor(alpha, nu)
    x = 1 / z
    acc, t, xt = F(0), 0, F(1)
    while True:
        t += 1
        xt *= x
        acc += xt * _series_term(alpha, nu, r, k, t)
        if t > nu:
            tail = c * K * xt * x / (1 - x)
            if tail <= tol:
                return Interval(acc - tail, acc + tail)


def closed_form_f(alpha: int, nu: int, r: int, k: int, z, tol=F(1, 10**12)) -> Interval:
    """``sum_i (1-j+ij) beta*_i(z) L_{i+j}(1/z) - beta*_{3+j}(z)`` with ``j = k - 2``."""
    z = F(z)
    j = k - 2
    bs = beta_star(alpha, nu, r)
    b1, b2 = bs.at(1, z), bs.at(2, z)
    scale = 1 + abs(b1) + 2 * abs(b2)
    each = F(tol) / (2 * scale)
    L1 = polylog_tail(1 + j, z, each)
    L2 = polylog_tail(2 + j, z, each)
    return _weight(1, j) * b1 * L1 + _weight(2, j) * b2 * L2 - bs.at(3 + j, z)


def linear_form_at_1(alpha: int, nu: int, r: int, j: int) -> tuple[Fraction, Fraction]:
    """``(coefficient of zeta(2+j), constant)`` so the value is ``coeff*zeta(2+j) - constant``."""
    if r > 2:
        raise ValueError("the z -> 1 limit exists only for r <= 2")
    if j not in (0, 1):
        raise ValueError("j must be 0 or 1")
    bs = beta_star(alpha, nu, r)
    return (1 + j) * bs.at(2, 1), bs.at(3 + j, 1)


# -- suite -------------------------------------------------------------------

def random_points(n: int, seed: int) -> list[Fraction]:
    import random

    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        t = F(rng.randint(-400, 400), rng.randint(1, 37))
        if t.denominator == 1 and t <= 0:
            continue  # poles at non-positive integers
        pts.append(t)
    return pts


def run_suite(nu_max: int = 20, alphas=(1, 2, 3)) -> Report:
    rep = Report("beta")
    for a in alphas:
        for nu in range(nu_max + 1):
            rep.run(f"sum rules alpha={a} nu={nu}", "sum_k beta1 = 0 (r<=2), -(nu+1)^2 (r=3, alpha=1)",
                    lambda a=a, nu=nu: verify_sum_rules(a, nu))
            for r in range(4):
                rep.run(f"reconstruction alpha={a} nu={nu} r={r}",
                        "sum beta_ik (t+k)^-i = c (-t)^r R^2 at 50 random t",
                        lambda a=a, nu=nu, r=r: verify_reconstruction(a, nu, r,
                                                                       random_points(50, 1000 * a + 10 * nu + r)))
            rep.run(f"beta* structure alpha={a} nu={nu}", "beta*_2 = delta^r f*_1 in N[z]; beta*_1(1)",
                    lambda a=a, nu=nu: verify_beta_star_structure(a, nu))
            rep.run(f"beta* two routes alpha={a} nu={nu}", "direct beta*_3,4 = Euler-operator recurrence",
                    lambda a=a, nu=nu: [beta_star(a, nu, r) for r in range(4)])
    for a in alphas:
        for nu in range(min(nu_max, 8) + 1):
            for r in range(4):
                rep.run(f"residue oracle alpha={a} nu={nu} r={r}", "beta from derivative at the pole",
                        lambda a=a, nu=nu, r=r: verify_against_oracle(a, nu, r))
    rep.run("recurrence zero r=1", "486*1029 - 14716*34 + 250*1 = 0",
            lambda: require(486 * beta_star(1, 2, 1).at(2, 1) - 14716 * beta_star(1, 1, 1).at(2, 1)
                            + 250 * beta_star(1, 0, 1).at(2, 1) == 0, "first zero-sum"))
    rep.run("recurrence zero r=2", "252*2277 - 11042*52 + 380*1 = 0",
            lambda: require(252 * beta_star(1, 2, 2).at(2, 1) - 11042 * beta_star(1, 1, 2).at(2, 1)
                            + 380 * beta_star(1, 0, 2).at(2, 1) == 0, "second zero-sum"))
    rep.run("recurrence zero r=1, beta*_4", "486*(14843/6) - 14716*(327/4) + 250*3 = 0",
            lambda: require(486 * beta_star(1, 2, 1).at(4, 1) - 14716 * beta_star(1, 1, 1).at(4, 1)
                            + 250 * beta_star(1, 0, 1).at(4, 1) == 0, "first zero-sum, rational part"))
    rep.run("recurrence zero r=2, beta*_4", "252*(32845/6) - 11042*125 + 380*2 = 0",
            lambda: require(252 * beta_star(1, 2, 2).at(4, 1) - 11042 * beta_star(1, 1, 2).at(4, 1)
                            + 380 * beta_star(1, 0, 2).at(4, 1) == 0, "second zero-sum, rational part"))
    return rep
