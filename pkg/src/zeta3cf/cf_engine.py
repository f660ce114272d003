"""Continued fractions ``b0 + a1/(b1 + a2/(b2 + ...))`` in exact arithmetic.

Convergents follow the three-term recurrence
``x[n+1] = b[n+1] x[n] + a[n+1] x[n-1]`` with ``P[-1]=1, Q[-1]=0,
P[0]=b0, Q[0]=1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .errors import DividedByZeroConvergent, ZeroPartialNumerator, ZeroScale
from .exact_core import det2, mat_mul

CoeffFn = Callable[[int], tuple]


@dataclass(frozen=True)
class CFSpec:
    """A continued fraction given by ``b0`` and ``nu -> (a_nu, b_nu)`` for nu >= 1."""

    b0: Fraction
    coeff_fn: CoeffFn = field(compare=False)
    name: str = "cf"

    def coeffs(self, nu: int) -> tuple[Fraction, Fraction]:
        if nu < 1:
            raise ValueError("partial quotients are indexed from 1")
        a, b = self.coeff_fn(nu)
        a, b = Fraction(a), Fraction(b)
        if a == 0:
            raise ZeroPartialNumerator(f"{self.name}: a_{nu} = 0")
        return a, b

    def a(self, nu: int) -> Fraction:
        return self.coeffs(nu)[0]

    def b(self, nu: int) -> Fraction:
        return Fraction(self.b0) if nu == 0 else self.coeffs(nu)[1]


def iter_convergents(spec: CFSpec) -> Iterator[tuple[Fraction, Fraction]]:
    """Yield ``(P_nu, Q_nu)`` for nu = 0, 1, 2, ... without storing history."""
    p_prev, q_prev = Fraction(1), Fraction(0)
    p, q = Fraction(spec.b0), Fraction(1)
    yield p, q
    nu = 0
    while True:
        nu += 1
        a, b = spec.coeffs(nu)
        p_prev, p = p, b * p + a * p_prev
        q_prev, q = q, b * q + a * q_prev
        yield p, q


def convergents(spec: CFSpec, n: int) -> list[tuple[Fraction, Fraction]]:
    """``[(P_0, Q_0), ..., (P_n, Q_n)]``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    for pq in iter_convergents(spec):
        out.append(pq)
        if len(out) > n:
            return out
    return out  # pragma: no cover


def convergent(spec: CFSpec, n: int) -> tuple[Fraction, Fraction]:
    return convergents(spec, n)[-1]


def ratio(p: Fraction, q: Fraction, index: int | None = None) -> Fraction:
    if q == 0:
        raise DividedByZeroConvergent(f"Q_{index} = 0" if index is not None else "Q = 0")
    return Fraction(p) / Fraction(q)


def convergent_ratios(spec: CFSpec, n: int) -> list[Fraction]:
    return [ratio(p, q, i) for i, (p, q) in enumerate(convergents(spec, n))]


@dataclass(frozen=True)
class ConvergentMatrix:
    """``U_nu = [[P_{nu-1}, Q_{nu-1}], [P_nu, Q_nu]]``."""

    rows: tuple
    index: int

    @property
    def det(self) -> Fraction:
        return det2(self.rows)

    def as_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def step_matrix(spec: CFSpec, nu: int) -> list[list[Fraction]]:
    """``A_nu = [[0, 1], [a_{nu+1}, b_{nu+1}]]`` so that ``U_{nu+1} = A_nu U_nu``."""
    a, b = spec.coeffs(nu + 1)
    return [[Fraction(0), Fraction(1)], [a, b]]


def u_matrix(spec: CFSpec, nu: int) -> ConvergentMatrix:
    """Build ``U_nu`` by multiplying step matrices onto ``U_0 = [[1, 0], [b0, 1]]``."""
    if nu < 0:
        raise ValueError("nu must be >= 0")
    U = [[Fraction(1), Fraction(0)], [Fraction(spec.b0), Fraction(1)]]
    for k in range(nu):
        U = mat_mul(step_matrix(spec, k), U)
    return ConvergentMatrix(tuple(tuple(r) for r in U), nu)


def partial_numerator_product(spec: CFSpec, nu: int) -> Fraction:
    out = Fraction(1)
    for k in range(1, nu + 1):
        out *= spec.a(k)
    return out


def equivalence_transform(spec: CFSpec, d: Callable[[int], Fraction], name: str | None = None) -> CFSpec:
    """Rescale ``x_nu -> d_nu x_nu`` (with ``d_0 = d_{-1} = 1``).

    New coefficients are ``a'_{nu+1} = a_{nu+1} d_{nu+1} / d_{nu-1}`` and
    ``b'_{nu+1} = b_{nu+1} d_{nu+1} / d_nu``; the convergent ratios do not change.
    """

    def dd(nu: int) -> Fraction:
        if nu <= 0:
            return Fraction(1)
        v = Fraction(d(nu))
        if v == 0:
            raise ZeroScale(f"d_{nu} = 0")
        return v

    def coeff(nu: int):
        a, b = spec.coeffs(nu)
        return a * dd(nu) / dd(nu - 2), b * dd(nu) / dd(nu - 1)

    return CFSpec(Fraction(spec.b0), coeff, name or f"{spec.name}-scaled")
