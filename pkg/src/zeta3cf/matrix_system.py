"""The 4x4 polynomial matrix system for zeta(3) and its conjugated forms.

``A*(z; nu) = A_vee(z; nu) + tau * A_wedge(z; nu)`` where every entry of the
two parts is a polynomial in ``alpha``, ``mu = (nu+alpha)(nu+1)`` and ``z``
(degree one in ``z``), and ``tau = nu + (1+alpha)/2``.  Everything here is
exact: identities are compared coefficient by coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IdentityViolation
from .exact_core import BiPoly, UniPoly, binom, delta, factorial, mat_mul
from .report import Report, Waiver, require

F = Fraction
NU = UniPoly.x("nu")
TAU = UniPoly.x("tau")
ZERO_BI = BiPoly(())


def mu_poly(alpha: int) -> UniPoly:
    return (NU + alpha) * (NU + 1)


def tau_poly(alpha: int) -> UniPoly:
    return NU + F(1 + alpha, 2)


def _entries(a, m, z):
    """The 32 entry polynomials (vee part ``V``, wedge part ``W``)."""
    h = F(1, 2)
    V, W = {}, {}
    V[1, 1] = h*(-1+2*a-a**2-5*m+3*a*m-5*m**2-a*m**2)+z*h*(-4+12*a-13*a**2+6*a**3-a**4)+z*h*m*(-32+54*a-29*a**2+5*a**3-56*m+20*a*m)
    V[1, 2] = -2+3*a-a**2-8*m+a*m-a**2*m-4*m**2+z*(2-11*a+17*a**2-10*a**3+2*a**4-4*m-11*a*m+3*a**2*m-20*m**2)
    V[1, 3] = -4+5*a-F(3,2)*a**2-h*a**3-12*m-2*a*m+z*(10-24*a+F(37,2)*a**2-F(11,2)*a**3+24*m-22*a*m)
    V[1, 4] = (z-1)*(6-7*a+3*a**2+12*m)
    W[1, 1] = 1-a+3*m+m**2+z*(4-8*a+5*a**2-a**3+24*m-22*a*m+5*a**2*m+16*m**2)
    W[1, 2] = 4-2*a+8*m+2*a*m+z*(-4+18*a-16*a**2+4*a**3+16*m+10*a*m)
    W[1, 3] = 8-2*a+a**2+8*m+z*(-20+28*a-5*a**2-8*m)
    W[1, 4] = -(z-1)*(12-2*a)
    V[2, 1] = z*h*(-4+12*a-13*a**2+6*a**3-a**4)+z*h*m*(-32+54*a-29*a**2+5*a**3)+z*h*m**2*(-68+34*a-6*a**2-24*m)
    V[2, 2] = h*(-1+2*a-a**2-5*m+3*a*m-5*m**2-a*m**2)+z*h*(-10*a+21*a**2-14*a**3+3*a**4)+z*h*m*(-16-20*a+17*a**2-7*a**3-48*m-28*a*m)
    V[2, 3] = -2+3*a-a**2-8*m+a*m-a**2*m-4*m**2+z*h*(12-32*a+25*a**2-5*a**3-2*a**4)+z*m*(20-23*a-3*a**2+4*m)
    V[2, 4] = h*(-8+10*a-3*a**2-a**3-24*m-4*a*m)+z*h*(8-10*a+3*a**2+a**3+24*m+4*a*m)
    V[3, 1] = z*h*(-4+12*a-13*a**2+6*a**3-a**4)+z*h*m*(-32+54*a-29*a**2+5*a**3)+z*h*m**2*(-76+44*a-9*a**2-a**3-48*m-4*a*m)
    V[3, 2] = z*(-2+a+4*a**2-4*a**3+a**4)+z*m*(-16-a+7*a**2-3*a**3-a**4-34*m-17*a*m-7*a**2*m-12*m**2)
    V[3, 3] = h*(-1+2*a-a**2-5*m+3*a*m-5*m**2-a*m**2)+z*h*(4-16*a+15*a**2-4*a**3-a**5)+z*h*m*(16-42*a+a**2-9*a**3+8*m-20*a*m)
    V[3, 4] = -2+3*a-a**2-8*m+a*m-a**2*m-4*m**2+z*(2-3*a+a**2+8*m-a*m+a**2*m+4*m**2)
    V[4, 1] = z*h*(-4+12*a-13*a**2+6*a**3-a**4)+z*h*m*(-32+54*a-29*a**2+5*a**3-80*m+50*a*m-11*a**2*m-a**3*m)+z*m**3*(-32-a-a**2-4*m)
    V[4, 2] = z*h*(-8+14*a-5*a**2-2*a**3+a**4)+z*h*m*(-56+32*a+a**2-5*a**3-2*a**4)+z*h*m**2*(-112-26*a-15*a**2-5*a**3)+z*m**3*(-28-10*a)
    V[4, 3] = z*h*(-4+5*a**2-2*a**3-a**5)+z*h*m*(-24-22*a-3*a**2-9*a**3-4*a**4-36*m-42*a*m-18*a**2*m-8*m**2)
    V[4, 4] = h*(-1+2*a-a**2-5*m+3*a*m-5*m**2-a*m**2)+z*h*(-2*a+a**2-a**5)+z*h*m*(-8*a-5*a**2-5*a**3-4*a*m)
    W[2, 1] = z*(4-8*a+5*a**2-a**3)+z*m*(24-22*a+5*a**2+28*m-2*a*m)
    W[2, 2] = 1-a+3*m+m**2+z*(10*a-11*a**2+3*a**3)+z*m*(16+16*a+a**2)+16*z*m**2
    W[2, 3] = 4-2*a+8*m+2*a*m+z*(-12+20*a-5*a**2+2*a**3)+z*m*(-16+14*a)
    W[2, 4] = (8-2*a+a**2+8*m)*(1-z)
    W[3, 1] = z*(4-8*a+5*a**2-a**3)+z*m*(24-22*a+5*a**2+36*m-4*a*m+a**2*m+8*m**2)
    W[3, 2] = z*(4+2*a-6*a**2+2*a**3)+z*m*(24+14*a+2*a**3)+z*m**2*(28+14*a)
    W[3, 3] = 1-a+3*m+m**2+z*(-4+12*a-3*a**2+a**3+a**4-8*m+18*m*a+7*m*a**2)
    W[3, 4] = (4-2*a+8*m+2*a*m)*(1-z)
    W[4, 1] = z*(4-8*a+5*a**2-a**3)+z*m*(24-22*a+5*a**2+40*m-6*a*m+a**2*m)+z*m**3*(16+2*a)
    W[4, 2] = z*(8-6*a-a**2+a**3)+z*m*(40+4*a+a**2+2*a**3)+z*m**2*(48+22*a+5*a**2)+8*z*m**3
    W[4, 3] = z*(4+4*a-a**2+a**3+a**4)+z*m*(16+22*a+11*a**2+4*a**3)+z*m**2*(12+10*a)
    W[4, 4] = 1-a+3*m+m**2+2*z*a+z*a**2+z*a**3+z*a**4+4*z*m*a+3*z*m*a**2
    return V, W


def _bi(p) -> BiPoly:
    if isinstance(p, BiPoly):
        return p
    if isinstance(p, UniPoly):
        return BiPoly((p.rename("nu"),))
    return BiPoly((UniPoly((p,), "nu"),))


@lru_cache(maxsize=None)
def build_parts(alpha: int) -> tuple:
    """``(A_vee, A_wedge)`` as 4x4 tuples of ``BiPoly`` in (z, nu)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    m = _bi(mu_poly(alpha))
    z = BiPoly((UniPoly((), "nu"), UniPoly((1,), "nu")))
    V, W = _entries(alpha, m, z)
    vee = tuple(tuple(_bi(V[i, j]) for j in range(1, 5)) for i in range(1, 5))
    wedge = tuple(tuple(_bi(W[i, j]) for j in range(1, 5)) for i in range(1, 5))
    return vee, wedge


@lru_cache(maxsize=None)
def build_A(alpha: int) -> tuple:
    """``A*(z; nu)`` for the given alpha, entries ``BiPoly`` in (z, nu)."""
    vee, wedge = build_parts(alpha)
    t = _bi(tau_poly(alpha))
    return tuple(tuple(vee[i][j] + t * wedge[i][j] for j in range(4)) for i in range(4))


def subs_nu(M, inner: UniPoly) -> list:
    return [[e.subs_nu(inner) for e in row] for row in M]


def at_z(M, z) -> list:
    """Specialize ``z``; entries become ``UniPoly`` in nu."""
    return [[e.at_z(z) for e in row] for row in M]


def at_nu(M, nu) -> list:
    """Specialize ``nu``; entries become ``UniPoly`` in z."""
    return [[e.at_nu(nu) for e in row] for row in M]


def scalar_E4(p) -> list:
    zero = ZERO_BI if isinstance(p, BiPoly) else UniPoly((), "nu")
    return [[p if i == j else zero for j in range(4)] for i in range(4)]


def _bimul(A, B) -> list:
    return mat_mul([[_bi(x) for x in r] for r in A], [[_bi(x) for x in r] for r in B], zero=ZERO_BI)


def _compare_bi(lhs, rhs, name: str, **ctx) -> None:
    for i in range(4):
        for j in range(4):
            diff = _bi(lhs[i][j]) - _bi(rhs[i][j])
            if not diff.is_zero():
                zk = next(k for k, c in enumerate(diff.z_coeffs) if not c.is_zero())
                nk = next(k for k, c in enumerate(diff.z_coeffs[zk].coeffs) if c)
                raise IdentityViolation(name, dict(ctx, row=i + 1, col=j + 1, monomial=f"z^{zk} nu^{nk}"))


def verify_inversion(alpha: int) -> None:
    """``A*(z; -nu-alpha) A*(z; nu) = -nu^5 (nu+alpha)^5 E4``."""
    A = build_A(alpha)
    refl = subs_nu(A, -NU - alpha)
    rhs = scalar_E4(_bi(-(NU**5) * (NU + alpha) ** 5))
    _compare_bi(_bimul(refl, A), rhs, "A*(z;-nu-alpha) A*(z;nu) = -nu^5(nu+alpha)^5 E4", alpha=alpha)


def eigenrow(alpha: int) -> list[UniPoly]:
    """``R(nu) = (mu^2, -2(1-alpha)mu, (1-alpha)^2 - 2mu, 2(1-alpha))``."""
    m = mu_poly(alpha)
    return [m * m, m * (-2 * (1 - alpha)), UniPoly.const((1 - alpha) ** 2, "nu") - 2 * m,
            UniPoly.const(2 * (1 - alpha), "nu")]


def verify_eigenrow(alpha: int) -> None:
    """``R(nu-1) A*(1; nu) = nu^5 R(nu)``."""
    A1 = at_z(build_A(alpha), 1)
    R = eigenrow(alpha)
    Rm = [r.compose(NU - 1) for r in R]
    for j in range(4):
        lhs = sum((Rm[i] * A1[i][j] for i in range(4)), UniPoly((), "nu"))
        require(lhs == NU**5 * R[j], "R(nu-1) A*(1;nu) = nu^5 R(nu)", alpha=alpha, col=j + 1)


def verify_z_linear(alpha: int) -> None:
    """Every entry has degree <= 1 in z, so ``A*(z) - A*(1) = (z-1) V`` with V free of z."""
    for i, row in enumerate(build_A(alpha)):
        for j, e in enumerate(row):
            require(e.z_degree <= 1, "entries affine in z", alpha=alpha, row=i + 1, col=j + 1)


def verify_p5_q5() -> None:
    """At alpha = 1: ``nu^5 = (-5mu^2-10mu-1) + tau (mu^2+10mu+5)``."""
    m, t = mu_poly(1), tau_poly(1)
    require(NU**5 == (-5 * m * m - 10 * m - 1) + t * (m * m + 10 * m + 5), "nu^5 = p5(mu) + tau q5(mu)")


# -- conjugation at alpha = 1 ------------------------------------------------

def conjugators(kappa: int) -> tuple[list, list]:
    """``(C, D)`` with ``C D = (-2)^kappa mu^(2-kappa) E4`` (alpha = 1)."""
    if kappa not in (0, 1):
        raise ValueError("kappa must be 0 or 1")
    r1, r2, r3, r4 = eigenrow(1)
    one, zero = UniPoly.const(1, "nu"), UniPoly((), "nu")
    C = [[one if i == j else zero for j in range(4)] for i in range(4)]
    C[2 * kappa] = [r1, r2, r3, r4]
    if kappa == 0:
        D = [[one, -r2, -r3, -r4], [zero, r1, zero, zero], [zero, zero, r1, zero], [zero, zero, zero, r1]]
    else:
        D = [[r3, zero, zero, zero], [zero, r3, zero, zero], [-r1, -r2, one, -r4], [zero, zero, zero, r3]]
    return C, D


def verify_conjugators() -> None:
    m = mu_poly(1)
    for kappa in (0, 1):
        C, D = conjugators(kappa)
        CD = mat_mul(C, D, zero=UniPoly((), "nu"))
        target = m ** (2 - kappa) * (-2) ** kappa
        for i in range(4):
            for j in range(4):
                want = target if i == j else UniPoly((), "nu")
                require(CD[i][j] == want, "C D = (-2)^kappa mu^(2-kappa) E4", kappa=kappa, row=i + 1, col=j + 1)
        for M, label in ((C, "C"), (D, "D")):
            for i in range(4):
                for j in range(4):
                    require(M[i][j].compose(-NU - 2) == M[i][j], f"{label}(-nu-2) = {label}(nu)",
                            kappa=kappa, row=i + 1, col=j + 1)


@lru_cache(maxsize=None)
def transformed_A(kappa: int) -> tuple:
    """``C(nu-1) A*(z; nu) D(nu)`` at alpha = 1."""
    C, D = conjugators(kappa)
    Cm = [[c.compose(NU - 1) for c in row] for row in C]
    M = _bimul(_bimul(Cm, build_A(1)), D)
    return tuple(tuple(r) for r in M)


def verify_transformed_inversion(kappa: int) -> None:
    """``T(z, -nu-1) T(z, nu) = -4^kappa (mu(nu) mu(nu-1))^(2-kappa) (nu(nu+1))^5 E4``."""
    T = transformed_A(kappa)
    m = mu_poly(1)
    rhs = -(4**kappa) * (m * m.compose(NU - 1)) ** (2 - kappa) * (NU * (NU + 1)) ** 5
    _compare_bi(_bimul(subs_nu(T, -NU - 1), T), scalar_E4(_bi(rhs)),
                "transformed inversion identity", kappa=kappa)


def in_tau(p: UniPoly, alpha: int = 1) -> UniPoly:
    """Rewrite a polynomial in nu as a polynomial in ``tau = nu + (1+alpha)/2``."""
    return p.compose(TAU - F(1 + alpha, 2)).rename("tau")


def star_at_one_tau(kappa: int | None) -> list:
    """Entries at z = 1 as polynomials in tau (``kappa=None``: untransformed A*)."""
    M = build_A(1) if kappa is None else transformed_A(kappa)
    return [[in_tau(e.at_z(1)) for e in row] for row in M]


def parts_at_one_tau() -> tuple[list, list]:
    vee, wedge = build_parts(1)
    return ([[in_tau(e.at_z(1)) for e in r] for r in vee], [[in_tau(e.at_z(1)) for e in r] for r in wedge])


# -- displayed closed forms at z = 1, alpha = 1 ------------------------------
#
# Each display lists the successive equal forms exactly as printed, as
# functions of t = tau (and mu = t^2 since alpha = 1).  Targets name the
# matrix entries the display claims to describe: ("vee"|"wedge"|"star", i, j)
# for the untransformed parts at z = 1 and ("k0"|"k1", i, j) for the
# conjugated matrices.

def _m(t):
    return t * t


def _sgn(kappa):
    return (-2) ** kappa


@dataclass(frozen=True)
class Display:
    name: str
    targets: tuple
    forms: tuple  # ((label, t -> UniPoly), ...)


def _displays() -> list[Display]:
    D = []

    def add(name, targets, *forms):
        D.append(Display(name, tuple(targets), tuple(forms)))

    def s3(t):  # tau^3 - (tau-1)^3
        return t**3 - (t - 1) ** 3

    # untransformed vee / wedge parts, written in mu
    mu_tab = {
        ("vee", 1, 1): lambda m: -2 * m - 21 * m**2,
        ("wedge", 1, 1): lambda m: 10 * m + 17 * m**2,
        ("vee", 2, 1): lambda m: -m - 20 * m**2 - 12 * m**3,
        ("wedge", 2, 1): lambda m: 7 * m + 26 * m**2,
        ("vee", 3, 1): lambda m: -m - 21 * m**2 - 26 * m**3,
        ("wedge", 3, 1): lambda m: 7 * m + 33 * m**2 + 8 * m**3,
        ("vee", 4, 1): lambda m: -m - 21 * m**2 - 34 * m**3 - 4 * m**4,
        ("wedge", 4, 1): lambda m: 7 * m + 35 * m**2 + 18 * m**3,
        ("vee", 1, 3): lambda m: -2 - 12 * m,
        ("wedge", 1, 3): lambda m: m * 0 + 10,
        ("vee", 2, 3): lambda m: -1 - 14 * m,
        ("wedge", 2, 3): lambda m: 7 + 8 * m,
        ("vee", 3, 3): lambda m: -1 - 18 * m - 9 * m**2,
        ("wedge", 3, 3): lambda m: 7 + 20 * m + m**2,
        ("vee", 4, 3): lambda m: -1 - 31 * m - 48 * m**2 - 4 * m**3,
        ("wedge", 4, 3): lambda m: 9 + 53 * m + 22 * m**2,
        ("vee", 1, 2): lambda m: -20 * m - 24 * m**2,
        ("wedge", 1, 2): lambda m: 4 + 36 * m,
        ("vee", 2, 2): lambda m: -14 * m - 41 * m**2,
        ("wedge", 2, 2): lambda m: 2 + 36 * m + 17 * m**2,
        ("vee", 3, 2): lambda m: -14 * m - 58 * m**2 - 12 * m**3,
        ("wedge", 3, 2): lambda m: 2 + 40 * m + 42 * m**2,
        ("vee", 4, 2): lambda m: -15 * m - 79 * m**2 - 38 * m**3,
        ("wedge", 4, 2): lambda m: 2 + 47 * m + 75 * m**2 + 8 * m**3,
        ("vee", 4, 4): lambda m: -1 - 10 * m - 5 * m**2,
        ("wedge", 4, 4): lambda m: 5 + 10 * m + m**2,
    }
    for (part, i, j), fn in mu_tab.items():
        add(f"{part}[{i},{j}](1) in mu", [(part, i, j)], ("mu form", lambda t, fn=fn: fn(_m(t))))
    for k in (1, 2, 3):
        add(f"vee/wedge[{k},4](1) = 0", [("vee", k, 4), ("wedge", k, 4)], ("zero", lambda t: t * 0))

    add("A*[1,1](1)", [("star", 1, 1)],
        ("expanded", lambda t: 17 * t**5 - 21 * t**4 + 10 * t**3 - 2 * t**2),
        ("factored", lambda t: t**2 * (17 * t**3 - 21 * t**2 + 10 * t - 2)))
    add("A*[2,1](1)", [("star", 2, 1), ("k0", 2, 1)],
        ("expanded", lambda t: -(12 * t**6 - 26 * t**5 + 20 * t**4 - 7 * t**3 + t**2)),
        ("one root", lambda t: -t**2 * (t - 1) * (12 * t**3 - 14 * t**2 + 6 * t - 1)),
        ("factored", lambda t: -t**2 * (t - 1) * (2 * t - 1) * (6 * t**2 - 4 * t + 1)))
    add("A*[3,1](1)", [("star", 3, 1), ("k0", 3, 1)],
        ("expanded", lambda t: 8 * t**7 - 26 * t**6 + 33 * t**5 - 21 * t**4 + t**3 - t**2),
        ("one root", lambda t: t**2 * (t - 1) * (8 * t**4 - 18 * t**3 + 15 * t**2 - 6 * t + 1)),
        ("double root", lambda t: t**2 * (t - 1) ** 2 * (8 * t**3 - 10 * t**2 + 5 * t - 1)),
        ("factored", lambda t: t**2 * (t - 1) ** 2 * (2 * t - 1) * (4 * t**2 - 3 * t + 1)))
    add("A*[4,1](1)", [("star", 4, 1), ("k0", 4, 1)],
        ("expanded", lambda t: -4 * t**8 + 18 * t**7 - 34 * t**6 + 35 * t**5 - 21 * t**4 + 7 * t**3 - t**2),
        ("one root", lambda t: -t**2 * (t - 1) * (4 * t**5 - 14 * t**4 + 20 * t**3 - 15 * t**2 + 6 * t - 1)),
        ("double root", lambda t: -t**2 * (t - 1) ** 2 * (4 * t**4 - 10 * t**3 + 10 * t**2 - 5 * t + 1)),
        ("triple root", lambda t: -t**2 * (t - 1) ** 3 * (4 * t**3 - 6 * t**2 + 4 * t - 1)),
        ("factored", lambda t: -t**2 * (t - 1) ** 3 * (2 * t - 1) * (2 * t**2 - 2 * t + 1)))
    add("A*[1,3](1)", [("star", 1, 3), ("k1", 1, 3)],
        ("expanded", lambda t: -12 * t**2 + 10 * t - 2),
        ("factored", lambda t: -2 * (2 * t - 1) * (3 * t - 1)))
    add("A*[2,3](1)", [("star", 2, 3), ("k1", 2, 3)],
        ("expanded", lambda t: 8 * t**3 - 14 * t**2 + 7 * t - 1),
        ("one root", lambda t: (t - 1) * (8 * t**2 - 6 * t + 1)),
        ("factored", lambda t: (t - 1) * (2 * t - 1) * (4 * t - 1)))
    add("A*[3,3](1)", [("star", 3, 3)],
        ("expanded", lambda t: t**5 - 9 * t**4 + 20 * t**3 - 18 * t**2 + 7 * t - 1),
        ("one root", lambda t: (t - 1) * (t**4 - 8 * t**3 + 12 * t**2 - 6 * t + 1)),
        ("factored", lambda t: (t - 1) ** 2 * (t**3 - 7 * t**2 + 5 * t - 1)))
    add("A*[4,3](1)", [("star", 4, 3), ("k1", 4, 3)],
        ("expanded", lambda t: -4 * t**6 + 22 * t**5 - 48 * t**4 + 53 * t**3 - 31 * t**2 + 9 * t - 1),
        ("one root", lambda t: -(t - 1) * (4 * t**5 - 18 * t**4 + 30 * t**3 - 23 * t**2 + 8 * t - 1)),
        ("double root", lambda t: -(t - 1) ** 2 * (4 * t**4 - 14 * t**3 + 16 * t**2 - 7 * t + 1)),
        ("triple root", lambda t: -(t - 1) ** 3 * (4 * t**3 - 10 * t**2 + 6 * t - 1)),
        ("factored", lambda t: -(t - 1) ** 3 * (2 * t - 1) * (2 * t**2 - 4 * t + 1)))

    for kappa in (0, 1):
        K = f"k{kappa}"
        d = 2 * kappa + 1
        s = _sgn(kappa)
        add(f"conjugated[{d},{d}](1), kappa={kappa}", [(K, d, d)],
            ("factored", lambda t, s=s, kappa=kappa: s * t ** (4 - 2 * kappa) * (t - 1) ** 5))
        for k in (1, 2, 3, 4):
            if k != d:
                add(f"conjugated[{d},{k}](1) = 0, kappa={kappa}", [(K, d, k)], ("zero", lambda t: t * 0))
        for k in (1, 2, 3):
            if k != d:
                add(f"conjugated[{k},4](1) = 0, kappa={kappa}", [(K, k, 4)], ("zero", lambda t: t * 0))
        add(f"conjugated[2,2](1), kappa={kappa}", [(K, 2, 2)],
            ("expanded", lambda t, s=s, kappa=kappa:
             s * t ** (4 - 2 * kappa) * (17 * t**5 - 41 * t**4 + 36 * t**3 - 14 * t**2 + 2 * t)),
            ("factored", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) * (17 * t**3 - 24 * t**2 + 12 * t - 2)),
            ("cube form", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) * (t**3 + 2 * (2 * t - 1) ** 3)))
        add(f"conjugated[4,2](1), kappa={kappa}", [(K, 4, 2)],
            ("expanded", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (8 * t**6 - 38 * t**5 + 75 * t**4 - 79 * t**3 + 47 * t**2 - 15 * t + 2)),
            ("one root", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) * (8 * t**5 - 30 * t**4 + 45 * t**3 - 34 * t**2 + 13 * t - 2)),
            ("double root", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) ** 2 * (8 * t**4 - 22 * t**3 + 23 * t**2 - 11 * t + 2)),
            ("triple root", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) ** 3 * (8 * t**3 - 14 * t**2 + 9 * t - 2)),
            ("factored", lambda t, s=s, kappa=kappa:
             s * t ** (5 - 2 * kappa) * (t - 1) ** 3 * (2 * t - 1) * (4 * t**2 - 5 * t + 2)))
        add(f"conjugated[4,4](1), kappa={kappa}", [(K, 4, 4)],
            ("expanded", lambda t, s=s, kappa=kappa:
             s * t ** (4 - 2 * kappa) * (t**5 - 5 * t**4 + 10 * t**3 - 10 * t**2 + 5 * t - 1)),
            ("factored", lambda t, s=s, kappa=kappa: s * t ** (4 - 2 * kappa) * (t - 1) ** 5))

    add("conjugated[3,2](1), kappa=0", [("k0", 3, 2)],
        ("expanded", lambda t: -t**5 * (12 * t**5 - 42 * t**4 + 58 * t**3 - 40 * t**2 + 14 * t - 2)),
        ("one root", lambda t: -t**5 * (t - 1) * (12 * t**4 - 30 * t**3 + 28 * t**2 - 12 * t + 2)),
        ("double root", lambda t: -t**5 * (t - 1) ** 2 * (12 * t**3 - 18 * t**2 + 10 * t - 2)),
        ("factored", lambda t: -t**5 * (t - 1) ** 2 * (2 * t - 1) * (6 * t**2 - 6 * t + 2)),
        ("cube form", lambda t: -2 * t**5 * (t - 1) ** 2 * (2 * t - 1) * s3(t)))
    add("conjugated[1,2](1), kappa=1", [("k1", 1, 2)],
        ("from row", lambda t: -2 * t**2 * (-24 * t**4 + 36 * t**3 - 20 * t**2 + 4 * t)),
        ("expanded", lambda t: 8 * t**3 * (6 * t**3 - 9 * t**2 + 5 * t - 1)),
        ("factored", lambda t: 8 * t**3 * (2 * t - 1) * (3 * t**2 - 3 * t + 1)),
        ("cube form", lambda t: 8 * t**3 * (2 * t - 1) * s3(t)))
    add("conjugated[1,1](1), kappa=1", [("k1", 1, 1)],
        ("from row", lambda t: -2 * t**4 * (17 * t**3 - 21 * t**2 + 10 * t - 2) - 2 * t**4 * (-6 * t**2 + 5 * t - 1)),
        ("factored", lambda t: -2 * t**4 * (17 * t**3 - 27 * t**2 + 15 * t - 3)),
        ("cube form", lambda t: -2 * t**4 * ((t - 1) ** 3 + 2 * (2 * t - 1) ** 3)))
    add("conjugated[3,3](1), kappa=0", [("k0", 3, 3)],
        ("from row", lambda t: t**4 * (t - 1) ** 2 * (t**3 - 7 * t**2 + 5 * t - 1)
         + 2 * t**2 * (t**2 * (t - 1) ** 2 * (8 * t**3 - 10 * t**2 + 5 * t - 1))),
        ("factored", lambda t: t**4 * (t - 1) ** 2 * (17 * t**3 - 27 * t**2 + 15 * t - 3)),
        ("cube form", lambda t: t**4 * (t - 1) ** 2 * ((t - 1) ** 3 + 2 * (2 * t - 1) ** 3)),
        ("via kappa=1", lambda t: F(-1, 2) * (t - 1) ** 2 * (-2 * t**4 * (17 * t**3 - 27 * t**2 + 15 * t - 3))))
    add("conjugated[2,3](1), kappa=0", [("k0", 2, 3)],
        ("from row", lambda t: t**4 * ((t - 1) * (2 * t - 1) * (4 * t - 1))
         + 2 * t**2 * (-t**2 * (t - 1) * (2 * t - 1) * (6 * t**2 - 4 * t + 1))),
        ("expanded", lambda t: -t**4 * (t - 1) * (2 * t - 1) * (12 * t**2 - 12 * t + 3)),
        ("factored", lambda t: -3 * t**4 * (t - 1) * (2 * t - 1) ** 3))
    add("conjugated[4,3](1), kappa=0", [("k0", 4, 3)],
        ("from row", lambda t: t**4 * (-(t - 1) ** 3 * (2 * t - 1) * (2 * t**2 - 4 * t + 1))
         + 2 * t**2 * (-t**2 * (t - 1) ** 3 * (2 * t - 1) * (2 * t**2 - 2 * t + 1))),
        ("factored", lambda t: -t**4 * (t - 1) ** 3 * (2 * t - 1) * (6 * t**2 - 8 * t + 3)))
    return D


# Displayed forms that are known to be misprinted.  Each entry maps
# (display name, form label) to the reason; the check is reported as waived
# instead of failing, and the report carries both versions.
WAIVERS: dict[tuple[str, str], str] = {
    ("A*[3,1](1)", "expanded"):
        "printed tau^3 coefficient +1 contradicts the printed factorizations (which vanish at tau = 1); "
        "recomputation gives +7 tau^3",
}

# Displayed forms that are evaluated under an evident reading of a misprint.
READINGS: list[Waiver] = [
    Waiver("conjugated[4,2](1) factored", "printed '5tau' read as 5*tau", "4tau^2-5tau+2", "4*tau^2 - 5*tau + 2"),
]


def _target_tables() -> dict:
    vee, wedge = parts_at_one_tau()
    return {"vee": vee, "wedge": wedge, "star": star_at_one_tau(None),
            "k0": star_at_one_tau(0), "k1": star_at_one_tau(1)}


def _fmt(p: UniPoly) -> str:
    return " + ".join(f"({c})*tau^{k}" for k, c in enumerate(p.coeffs) if c) or "0"


def check_displayed_forms(report: Report) -> None:
    """Compare every displayed closed form against the recomputed entries."""
    tables = _target_tables()
    for disp in _displays():
        for label, fn in disp.forms:
            shown = fn(TAU)
            shown = shown if isinstance(shown, UniPoly) else UniPoly((shown,), "tau")
            for part, i, j in disp.targets:
                actual = tables[part][i - 1][j - 1]
                name = f"{disp.name} {label} -> {part}[{i},{j}]"
                ref = f"closed form of {part}[{i},{j}] at z=1 ({label})"
                key = (disp.name, label)
                if shown == actual:
                    report.run(name, ref, lambda: None)
                elif key in WAIVERS:
                    report.checks.append(_waived(name, ref))
                    report.waivers.append(Waiver(name, WAIVERS[key], _fmt(shown), _fmt(actual)))
                else:
                    def fail(shown=shown, actual=actual, part=part, i=i, j=j, label=label):
                        raise IdentityViolation("displayed closed form", {
                            "entry": f"{part}[{i},{j}]", "form": label,
                            "displayed": _fmt(shown), "recomputed": _fmt(actual)})
                    report.run(name, ref, fail)
    report.waivers.extend(READINGS)


def _waived(name, ref):
    from .report import Check
    return Check(name, ref, "waived")


def verify_antisymmetry() -> None:
    """``T_k[i, 3-2k](1) = -T_(1-k)[i, 2k+1](1)`` for rows 2 and 4."""
    for kappa in (0, 1):
        A = star_at_one_tau(kappa)
        B = star_at_one_tau(1 - kappa)
        for i in (2, 4):
            require(A[i - 1][2 - 2 * kappa] == -B[i - 1][2 * kappa], "theta antisymmetry", kappa=kappa, row=i)


def verify_distinguished_row() -> None:
    """Row 2k+1 of the conjugated matrix at z=1 is ``(-2)^k tau^(4-2k) (tau-1)^5 e_(2k+1)``."""
    for kappa in (0, 1):
        A = star_at_one_tau(kappa)
        d = 2 * kappa
        for j in range(4):
            want = _sgn(kappa) * TAU ** (4 - 2 * kappa) * (TAU - 1) ** 5 if j == d else UniPoly((), "tau")
            require(A[d][j] == want, "distinguished row", kappa=kappa, col=j + 1)


# -- scaled limits -----------------------------------------------------------

DISPLAYED_LIMITS = {
    0: [[1, 0, 0, 0], [-12, 17, -24, 0], [8, -12, 17, 0], [4, 8, -12, 1]],
    1: [[17, -24, 0, 0], [-12, 17, 0, 0], [0, 0, 1, 0], [-6, 8, 2, 1]],
}
# Limit of nu^-5 T^-1 A*(1;nu) T with T = diag(1, nu, nu^2, nu^3).
DISPLAYED_UNCONJUGATED_LIMIT = [[17, -24, 0, 0], [-12, 17, 0, 0], [8, -12, 1, 0], [-4, 8, -4, 1]]
LIMIT_WAIVERS = {
    (0, 4, 1): "displayed +4; the exact limit is -4, in agreement with the Sigma_0 conjugation of the "
               "unconjugated limit",
}


def scaling_powers(kappa: int) -> list[int]:
    """Exponents of nu on the diagonal of the similarity used for the limit."""
    return [4, 1, 2, 3] if kappa == 0 else [0, 1, 4, 3]


def _scaled_entry(kappa: int, i: int, j: int) -> tuple[UniPoly, int]:
    """Numerator polynomial in nu and the exponent e with entry = num / nu^e."""
    p = scaling_powers(kappa)
    e = 9 - 2 * kappa + p[i] - p[j]
    num = transformed_A(kappa)[i][j].at_z(1) * F(1, (-2) ** kappa)
    return num, e


def exact_limit(kappa: int) -> list[list[Fraction]]:
    """Exact limit of the scaled conjugated matrix as nu -> infinity."""
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            num, e = _scaled_entry(kappa, i, j)
            if num.degree > e:
                raise IdentityViolation("scaled entry diverges", {"kappa": kappa, "row": i + 1, "col": j + 1})
            row.append(num.coeff(e))
        out.append(row)
    return out


def first_order_coefficients(kappa: int) -> list[list[Fraction]]:
    """``lim nu * (scaled entry - limit)``: the O(1/nu) deviation constants."""
    return [[_scaled_entry(kappa, i, j)[0].coeff(_scaled_entry(kappa, i, j)[1] - 1) for j in range(4)]
            for i in range(4)]


def unconjugated_limit() -> list[list[Fraction]]:
    A = build_A(1)
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            num = A[i][j].at_z(1)
            e = 5 + i - j
            require(num.degree <= e, "unconjugated scaled entry bounded", row=i + 1, col=j + 1)
            row.append(num.coeff(e))
        out.append(row)
    return out


def scaled_limit(kappa: int, nu) -> list[list[Fraction]]:
    """Deviation of the scaled conjugated matrix at ``nu`` from its exact limit."""
    nu = F(nu)
    if nu < 10:
        raise ValueError("nu must be >= 10")
    target = exact_limit(kappa)
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            num, e = _scaled_entry(kappa, i, j)
            row.append(num(nu) / nu**e - target[i][j])
        out.append(row)
    return out


def scaled_matrix(kappa: int, nu) -> list[list[Fraction]]:
    nu = F(nu)
    return [[_scaled_entry(kappa, i, j)[0](nu) / nu ** _scaled_entry(kappa, i, j)[1] for j in range(4)]
            for i in range(4)]


def check_limits(report: Report) -> None:
    for kappa in (0, 1):
        lim = exact_limit(kappa)
        for i in range(4):
            for j in range(4):
                name = f"scaled limit kappa={kappa} [{i + 1},{j + 1}]"
                ref = f"displayed limit matrix kappa={kappa}"
                shown = DISPLAYED_LIMITS[kappa][i][j]
                key = (kappa, i + 1, j + 1)
                if lim[i][j] == shown:
                    report.run(name, ref, lambda: None)
                elif key in LIMIT_WAIVERS:
                    report.checks.append(_waived(name, ref))
                    report.waivers.append(Waiver(name, LIMIT_WAIVERS[key], str(shown), str(lim[i][j])))
                else:
                    report.run(name, ref, lambda key=key, v=lim[i][j], s=shown: require(
                        False, "scaled limit", kappa=key[0], row=key[1], col=key[2], displayed=s, recomputed=str(v)))
    report.run("unconjugated scaled limit", "displayed limit of nu^-5 T^-1 A*(1;nu) T",
               lambda: require(unconjugated_limit() == [[F(x) for x in r] for r in DISPLAYED_UNCONJUGATED_LIMIT],
                               "unconjugated scaled limit"))
    report.run("Sigma conjugation reproduces the limits", "Sigma_k A~ Sigma_k^-1 = A^(k)", verify_sigma_conjugation)


def sigma(kappa: int) -> list[list[Fraction]]:
    S = [[F(int(i == j)) for j in range(4)] for i in range(4)]
    S[2 * kappa] = [F(1), F(0), F(-2), F(0)]
    return S


def _inverse4(M):
    """Gauss-Jordan inverse over the rationals."""
    n = len(M)
    A = [list(map(F, r)) + [F(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [r[n:] for r in A]


def verify_sigma_conjugation() -> None:
    At = unconjugated_limit()
    for kappa in (0, 1):
        S = sigma(kappa)
        got = mat_mul(mat_mul(S, At), _inverse4(S))
        require(got == exact_limit(kappa), "Sigma_k A~ Sigma_k^-1 = exact limit", kappa=kappa)


# -- the terminating solution ------------------------------------------------

def f_star_1(alpha: int, nu: int) -> UniPoly:
    """``sum_k z^k C(nu+alpha, k)^2 C(nu+k, nu)^2``."""
    return UniPoly([binom(nu + alpha, k) ** 2 * binom(nu + k, nu) ** 2 for k in range(nu + alpha + 1)], "z")


def f_1(alpha: int, nu: int) -> UniPoly:
    """Normalized solution ``(nu!)^2 / ((nu+alpha)!)^2 * f_star_1``."""
    return f_star_1(alpha, nu) * F(factorial(nu) ** 2, factorial(nu + alpha) ** 2)


def column(alpha: int, nu: int) -> list[UniPoly]:
    f = f_1(alpha, nu)
    out = [f]
    for _ in range(3):
        out.append(delta(out[-1]))
    return out


def column_recurrence_check_k1(alpha: int, nu_range=range(1, 11)) -> None:
    """``nu^5 X(nu-1) = A*(z; nu) X(nu)`` in Q[z] for the terminating column."""
    A = build_A(alpha)
    for nu in nu_range:
        An = at_nu(A, nu)
        X, Xm = column(alpha, nu), column(alpha, nu - 1)
        for i in range(4):
            rhs = sum((An[i][j] * X[j] for j in range(4)), UniPoly((), "z"))
            lhs = Xm[i] * nu**5
            if lhs != rhs:
                diff = lhs - rhs
                k = next(k for k, c in enumerate(diff.coeffs) if c)
                raise IdentityViolation("nu^5 X(nu-1) = A*(z;nu) X(nu)",
                                        {"alpha": alpha, "nu": nu, "row": i + 1, "z_power": k})


def annihilator(alpha: int, nu: int, f: UniPoly) -> UniPoly:
    """``z (d^2 + (1-alpha) d - mu)^2 f - d^4 f`` with d the Euler operator."""
    mu = (nu + alpha) * (nu + 1)

    def L(g):
        return delta(delta(g)) + delta(g) * (1 - alpha) - g * mu

    d4 = delta(delta(delta(delta(f))))
    return UniPoly.x("z") * L(L(f)) - d4


def annihilator_check_k1(alpha: int, nu_range=range(0, 11)) -> None:
    for nu in nu_range:
        res = annihilator(alpha, nu, f_star_1(alpha, nu))
        if not res.is_zero():
            raise IdentityViolation("annihilator kills f_1", {"alpha": alpha, "nu": nu, "z_power": res.degree})


# -- suite -------------------------------------------------------------------

def run_suite(alphas=(1, 2, 3), nu_max: int = 10) -> Report:
    rep = Report("matrix")
    for a in alphas:
        rep.run(f"inversion alpha={a}", "A*(z;-nu-alpha) A*(z;nu) = -nu^5 (nu+alpha)^5 E4",
                lambda a=a: verify_inversion(a))
    for a in sorted(set((0,) + tuple(alphas))):
        rep.run(f"eigenrow alpha={a}", "R(nu-1) A*(1;nu) = nu^5 R(nu)", lambda a=a: verify_eigenrow(a))
        rep.run(f"affine in z alpha={a}", "A*(z) - A*(1) = (z-1) V(nu)", lambda a=a: verify_z_linear(a))
    rep.run("p5 + tau q5", "nu^5 = p5(mu) + tau q5(mu)", verify_p5_q5)
    rep.run("conjugators", "C D = (-2)^k mu^(2-k) E4, C(-nu-2) = C(nu)", verify_conjugators)
    for k in (0, 1):
        rep.run(f"conjugated inversion kappa={k}",
                "T(-nu-1) T(nu) = -4^k (mu(nu) mu(nu-1))^(2-k) (nu(nu+1))^5 E4",
                lambda k=k: verify_transformed_inversion(k))
    rep.run("distinguished row", "row 2k+1 = (-2)^k tau^(4-2k) (tau-1)^5 e_(2k+1)", verify_distinguished_row)
    rep.run("theta antisymmetry", "T_k[i,3-2k] = -T_(1-k)[i,2k+1]", verify_antisymmetry)
    check_displayed_forms(rep)
    check_limits(rep)
    for a in (x for x in alphas if x in (1, 2)):
        rep.run(f"column recurrence alpha={a}", "nu^5 X(nu-1) = A*(z;nu) X(nu), terminating column",
                lambda a=a: column_recurrence_check_k1(a, range(1, nu_max + 1)))
    for a in alphas:
        rep.run(f"annihilator alpha={a}", "z (d^2+(1-alpha)d-mu)^2 f - d^4 f = 0",
                lambda a=a: annihilator_check_k1(a, range(0, nu_max + 1)))
    return rep
