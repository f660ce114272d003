"""Reference enclosures for zeta(3) built only from the defining series.

The direct part sums ``1/n**3`` for ``n < N`` on an integer grid; the tail
``sum_{n>=N} n**-3`` uses Euler-Maclaurin with exact Bernoulli numbers.
Because ``x**-3`` is completely monotone, the Euler-Maclaurin remainder
after ``K`` correction terms lies between 0 and the first omitted term,
which gives a rigorous two-sided bound.  No continued-fraction or
recurrence machinery is used here.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact_core import binom
from .intervals import Interval


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple:
    """``B_0 .. B_n`` (convention ``B_1 = -1/2``), exact."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        if m > 1 and m % 2 == 1:
            B.append(Fraction(0))
            continue
        acc = sum((binom(m + 1, j) * B[j] for j in range(m)), Fraction(0))
        B.append(-acc / (m + 1))
    return tuple(B)


def _em_term(k: int, N: int) -> Fraction:
    """k-th Euler-Maclaurin correction for the tail of sum n**-3 from N."""
    B = bernoulli_numbers(2 * k)[2 * k]
    return (2 * k + 1) * B / (2 * Fraction(N) ** (2 * k + 2))


def _digits_for(tol: Fraction) -> int:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    p = 0
    while Fraction(1, 10**p) > tol / 8:
        p += 1
    return p


@lru_cache(maxsize=64)
def _zeta3_at_precision(p: int) -> Interval:
    N = max(16, 10 * p + 10)
    target = Fraction(1, 10**p) / 4
    scale = 10 ** (p + len(str(N)) + 2)

    direct = sum(scale // (n * n * n) for n in range(1, N))
    lo = Fraction(direct, scale)
    hi = Fraction(direct + N, scale)

    tail = Fraction(1, 2 * N * N) + Fraction(1, 2 * N**3)
    k = 1
    while True:
        term = _em_term(k, N)
        nxt = _em_term(k + 1, N)
        tail += term
        if abs(nxt) <= target:
            break
        if abs(nxt) > abs(term):  # past the optimal truncation point
            raise RuntimeError("Euler-Maclaurin terms stopped decreasing; raise N")
        k += 1
    lo += tail + min(nxt, 0)
    hi += tail + max(nxt, 0)
    return Interval(lo, hi).outward(10 ** (p + 2))


def zeta3_interval(tol=Fraction(1, 10**30)) -> Interval:
    """Interval of width at most ``tol`` that contains zeta(3)."""
    tol = Fraction(tol)
    iv = _zeta3_at_precision(_digits_for(tol))
    assert iv.width <= tol
    return iv


def zeta_interval(s: int, tol=Fraction(1, 10**30)) -> Interval:
    """Enclosure of zeta(s) for integer ``s >= 2`` by the same method."""
    if s == 3:
        return zeta3_interval(tol)
    if s < 2:
        raise ValueError("zeta(s) diverges for s < 2")
    tol = Fraction(tol)
    p = _digits_for(tol)
    N = max(16, 10 * p + 10)
    scale = 10 ** (p + len(str(N)) + 2)
    direct = sum(scale // n**s for n in range(1, N))
    lo, hi = Fraction(direct, scale), Fraction(direct + N, scale)
    # tail: integral + f(N)/2 + sum_k B_2k/(2k)! * (s)_(2k-1) N^(-s-2k+1)
    tail = Fraction(1, (s - 1) * N ** (s - 1)) + Fraction(1, 2 * N**s)

    def term(k):
        B = bernoulli_numbers(2 * k)[2 * k]
        rising = math.prod(range(s, s + 2 * k - 1))
        return B * rising / (math.factorial(2 * k) * Fraction(N) ** (s + 2 * k - 1))

    k = 1
    while True:
        t, nxt = term(k), term(k + 1)
        tail += t
        if abs(nxt) <= tol / 8:
            break
        k += 1
    return Interval(lo + tail + min(nxt, 0), hi + tail + max(nxt, 0)).outward(10 ** (p + 2))
