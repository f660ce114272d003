"""Closed intervals with exact rational endpoints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @classmethod
    def around(cls, x, radius) -> "Interval":
        return cls(Fraction(x) - abs(Fraction(radius)), Fraction(x) + abs(Fraction(radius)))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def _coerce(self, other) -> "Interval":
        return other if isinstance(other, Interval) else Interval.point(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        ends = [a * b for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return Interval(min(ends), max(ends))

    __rmul__ = __mul__

    def abs_upper(self) -> Fraction:
        """Upper bound on ``|x|`` over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def abs_lower(self) -> Fraction:
        """Lower bound on ``|x|`` over the interval (0 if it straddles 0)."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def outward(self, denominator: int) -> "Interval":
        """Round endpoints outward onto the grid ``1/denominator``."""
        lo = Fraction((self.lo.numerator * denominator) // self.lo.denominator, denominator)
        hi = Fraction(-((-self.hi.numerator * denominator) // self.hi.denominator), denominator)
        return Interval(lo, hi)


def truncate_decimal(x: Fraction, digits: int) -> str:
    """Decimal expansion of ``x`` truncated toward minus infinity."""
    scaled = (x.numerator * 10**digits) // x.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def decimal_string(x: Fraction, digits: int) -> str:
    """``x`` rounded to ``digits`` decimals (round half up)."""
    scaled = x * 10**digits
    q = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(abs(q), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
