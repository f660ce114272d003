"""Verification records and their JSON form."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import IdentityViolation


@dataclass
class Check:
    name: str
    paper_ref: str
    status: str = "pass"  # pass | fail | waived
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["counterexample"] is None:
            del d["counterexample"]
        return d


@dataclass
class Waiver:
    name: str
    reason: str
    displayed: str = ""
    recomputed: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    waivers: list[Waiver] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def run(self, name: str, ref: str, fn: Callable[[], object]) -> Check:
        """Run ``fn``; an ``IdentityViolation`` becomes a failed check."""
        try:
            fn()
            chk = Check(name, ref)
        except IdentityViolation as exc:
            chk = Check(name, ref, "fail", {k: _jsonable(v) for k, v in exc.where.items()})
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        self.waivers.extend(other.waivers)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "waivers": [asdict(w) for w in self.waivers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return str(v)


def require(cond: bool, name: str, **where) -> None:
    if not cond:
        raise IdentityViolation(name, where)
