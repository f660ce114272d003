"""Exact scalars, dense polynomials and small matrix helpers.

Every quantity in the package is a ``fractions.Fraction`` or a polynomial
with ``Fraction`` coefficients; nothing here ever rounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .errors import IdentityViolation  # noqa: F401  (re-export)

Rational = Fraction

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def binom(n: int, k: int) -> Fraction:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return Fraction(0)
    return Fraction(factorial(n) // (factorial(k) * factorial(n - k)))


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _trim(coeffs: Iterable) -> tuple:
    out = [_as_fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``var**k``.

    The zero polynomial has an empty coefficient tuple.  ``var`` is a label
    only and does not take part in equality.
    """

    coeffs: tuple = ()
    var: str = field(default="z", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c: Scalar, var: str = "z") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "z") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, var: str = "z") -> "UniPoly":
        """The polynomial ``a*var + b``."""
        return cls((b, a), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly((1,), self.var), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or another polynomial."""
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly((), x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = self(inner)
        return out if isinstance(out, UniPoly) else UniPoly((out,), inner.var)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def divmod_linear(self, root: Scalar) -> tuple["UniPoly", Fraction]:
        """Synthetic division by ``(var - root)``; returns quotient, remainder."""
        root = _as_fraction(root)
        if not self.coeffs:
            return UniPoly((), self.var), Fraction(0)
        acc = Fraction(0)
        q = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            q.append(acc)
        rem = q.pop()
        return UniPoly(list(reversed(q)), self.var), rem

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        if not self.coeffs:
            return f"UniPoly(0; {self.var})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*{self.var}^{k}")
        return "UniPoly(" + " + ".join(terms) + ")"


def delta(p: UniPoly) -> UniPoly:
    """Euler operator ``z d/dz``: scales the coefficient of ``z**k`` by ``k``."""
    return UniPoly([k * c for k, c in enumerate(p.coeffs)], p.var)


def delta_pow(p: UniPoly, r: int) -> UniPoly:
    for _ in range(r):
        p = delta(p)
    return p


def poly_eval(p: UniPoly, x: Scalar) -> Fraction:
    return _as_fraction(p(_as_fraction(x)))


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in ``z`` whose coefficients are ``UniPoly`` in ``nu``."""

    z_coeffs: tuple = ()

    def __post_init__(self):
        cs = [c if isinstance(c, UniPoly) else UniPoly((c,), "nu") for c in self.z_coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "z_coeffs", tuple(cs))

    @classmethod
    def from_nu(cls, p: UniPoly) -> "BiPoly":
        return cls((p,))

    def coeff(self, k: int) -> UniPoly:
        if 0 <= k < len(self.z_coeffs):
            return self.z_coeffs[k]
        return UniPoly((), "nu")

    @property
    def z_degree(self) -> int:
        return len(self.z_coeffs) - 1

    def is_zero(self) -> bool:
        return not self.z_coeffs

    def _lift(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly((other,))
        if isinstance(other, (int, Fraction)):
            return BiPoly((UniPoly((other,), "nu"),))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.z_coeffs), len(other.z_coeffs))
        return BiPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.z_coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return BiPoly(())
        out = [UniPoly((), "nu")] * (len(self.z_coeffs) + len(other.z_coeffs) - 1)
        for i, a in enumerate(self.z_coeffs):
            for j, b in enumerate(other.z_coeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly((UniPoly((1,), "nu"),))
        for _ in range(n):
            result = result * self
        return result

    def at_z(self, z) -> UniPoly:
        """Specialize ``z``; returns a polynomial in ``nu``."""
        acc = UniPoly((), "nu")
        for c in reversed(self.z_coeffs):
            acc = acc * _as_fraction(z) + c
        return acc

    def at_nu(self, nu) -> UniPoly:
        """Specialize ``nu``; returns a polynomial in ``z``."""
        return UniPoly([c(_as_fraction(nu)) for c in self.z_coeffs], "z")

    def subs_nu(self, inner: UniPoly) -> "BiPoly":
        return BiPoly([c.compose(inner) for c in self.z_coeffs])

    def __call__(self, z, nu) -> Fraction:
        return self.at_nu(nu)(_as_fraction(z))


# -- small dense matrices over any ring supporting + and * -------------------

Matrix = list


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], zero=Fraction(0)) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_map(f: Callable, a: Sequence[Sequence]) -> Matrix:
    return [[f(x) for x in row] for row in a]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def det2(m: Sequence[Sequence]):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]
