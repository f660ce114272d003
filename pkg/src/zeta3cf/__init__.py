"""Exact continued fractions and linear forms for zeta(3)."""

from .cf_engine import CFSpec, convergents, equivalence_transform
from .errors import IdentityViolation
from .exact_core import BiPoly, UniPoly, delta
from .intervals import Interval
from .oracle import zeta3_interval

__all__ = [
    "BiPoly",
    "CFSpec",
    "IdentityViolation",
    "Interval",
    "UniPoly",
    "convergents",
    "delta",
    "equivalence_transform",
    "zeta3_interval",
]
