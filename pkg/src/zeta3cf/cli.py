"""Command-line front end.

Exit codes: 0 success, 1 identity violation or failed check, 2 usage error.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import click

from . import apery_nesterenko, beta_functions, matrix_system, theorem_a
from .cf_engine import convergents
from .errors import IdentityViolation
from .intervals import Interval, decimal_string
from .oracle import zeta3_interval
from .report import Report

SPECS = ("apery", "zeta3", "nesterenko", "theoremA1", "theoremA2")
SUITES = ("all", "matrix", "nesterenko", "beta", "theoremA")
MAX_DIGITS = 1000


@dataclass
class RunConfig:
    command: str
    spec: str | None = None
    n: int = 10
    nu_max: int = 20
    k_max: int = 40
    alphas: tuple = (1, 2, 3)
    digits: int = 20
    fmt: str = "plain"
    double: bool = False
    extra: dict = field(default_factory=dict)


# -- helpers -------------------------------------------------------------------

def upper_sci(x: Fraction, sig: int = 3) -> str:
    """A decimal in scientific notation that is ``>= x >= 0``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("expects a nonnegative bound")
    if x == 0:
        return "0"
    e = len(str(x.numerator)) - len(str(x.denominator))
    while Fraction(10) ** e > x:
        e -= 1
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    unit = Fraction(10) ** (e - sig + 1)
    m = -((-x) // unit)  # ceiling
    if m >= 10**sig:
        m, e = m // 10 + (m % 10 > 0), e + 1
    digits = str(m)
    mant = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return f"{mant}e{e}"


def _rows(spec: str, n: int, digits: int) -> list[dict]:
    if spec == "apery":
        pairs = [(p.v, p.u) for p in apery_nesterenko.apery_sequence(n)]
    else:
        cf = {
            "zeta3": apery_nesterenko.zeta3_cf_spec,
            "nesterenko": apery_nesterenko.nesterenko_cf_spec,
            "theoremA1": lambda: theorem_a.theorem_a_spec(1),
            "theoremA2": lambda: theorem_a.theorem_a_spec(2),
        }[spec]()
        pairs = convergents(cf, n)
    scale = 2 if spec.startswith("theoremA") else 1
    ref = scale * zeta3_interval(Fraction(1, 10 ** (8 * n + digits + 20)))
    rows = []
    for i, (p, q) in enumerate(pairs):
        row = {"index": i, "P": str(p), "Q": str(q)}
        if q == 0:
            row["ratio"], row["error_bound"] = "", ""
        else:
            r = p / q
            row["ratio"] = decimal_string(r, digits)
            row["error_bound"] = upper_sci((ref - r).abs_upper())
        rows.append(row)
    return rows


def _emit_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["index", "P", "Q", "ratio", "error_bound"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    width = max(len(r["P"]) for r in rows)
    lines = [f"{r['index']:>4}  {r['P']:>{width}}  {r['Q']}  {r['ratio']}  err<={r['error_bound']}" for r in rows]
    return "\n".join(lines) + "\n"


def parse_rows(text: str, fmt: str) -> list[tuple[int, Fraction, Fraction]]:
    """Read back ``(index, P, Q)`` from json or csv output."""
    rows = json.loads(text) if fmt == "json" else list(csv.DictReader(io.StringIO(text)))
    return [(int(r["index"]), Fraction(r["P"]), Fraction(r["Q"])) for r in rows]


def build_report(cfg: RunConfig) -> Report:
    rep = Report(cfg.extra.get("suite", "all"))
    suite = cfg.extra.get("suite", "all")
    if suite in ("all", "nesterenko"):
        rep.extend(apery_nesterenko.run_suite(cfg.k_max))
    if suite in ("all", "matrix"):
        rep.extend(matrix_system.run_suite(cfg.alphas, min(cfg.nu_max, 10)))
    if suite in ("all", "beta"):
        rep.extend(beta_functions.run_suite(cfg.nu_max, cfg.alphas))
    if suite in ("all", "theoremA"):
        rep.extend(theorem_a.run_suite(cfg.k_max))
    return rep


def certified_digits(digits: int, double: bool = False) -> dict:
    """Correctly rounded decimals of zeta(3) or 2 zeta(3) and the first convergent that matches them."""
    scale = 2 if double else 1
    extra = 10
    while True:
        iv = scale * zeta3_interval(Fraction(1, 10 ** (digits + extra)))
        lo, hi = decimal_string(iv.lo, digits), decimal_string(iv.hi, digits)
        if lo == hi:
            break
        extra += 10
    half_ulp = Fraction(1, 2 * 10**digits)
    name = "theoremA1" if double else "zeta3"
    cf = theorem_a.theorem_a_spec(1) if double else apery_nesterenko.zeta3_cf_spec()
    n = 0
    while True:
        p, q = convergents(cf, n)[-1]
        if q and (iv - p / q).abs_upper() < half_ulp and decimal_string(p / q, digits) == lo:
            break
        n += 1
    return {"value": lo, "interval": iv, "expansion": name, "index": n}


# -- commands ------------------------------------------------------------------

@click.group()
def main():
    """Exact continued fractions for zeta(3) and their verification suites."""


@main.command("convergents")
@click.option("--spec", "spec", type=click.Choice(SPECS), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "plain"]), default="plain", show_default=True)
@click.option("--digits", type=click.IntRange(min=0, max=MAX_DIGITS), default=20, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def convergents_cmd(spec, n, fmt, digits, out):
    """Table of convergents P/Q with a certified error bound."""
    cfg = RunConfig("convergents", spec=spec, n=n, digits=digits, fmt=fmt)
    try:
        text = _emit_table(_rows(cfg.spec, cfg.n, cfg.digits), cfg.fmt)
    except IdentityViolation as exc:
        click.echo(json.dumps({"error": str(exc.args[0]), "where": {k: str(v) for k, v in exc.where.items()}}),
                   err=True)
        sys.exit(1)
    _write(text, out)


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--kmax", type=click.IntRange(min=2), default=40, show_default=True)
@click.option("--numax", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--alpha", "alphas", type=click.IntRange(min=1), multiple=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def verify_cmd(suite, kmax, numax, alphas, out):
    """Run exact verification suites and print a JSON report."""
    cfg = RunConfig("verify", k_max=kmax, nu_max=numax, alphas=tuple(alphas) or (1, 2, 3), extra={"suite": suite})
    rep = build_report(cfg)
    _write(rep.to_json() + "\n", out)
    if not rep.ok:
        first = next(c for c in rep.checks if c.status == "fail")
        click.echo(json.dumps(first.to_dict()), err=True)
        sys.exit(1)


@main.command("digits")
@click.argument("n", type=int)
@click.option("--double", is_flag=True, help="Print 2 zeta(3) instead.")
def digits_cmd(n, double):
    """Print zeta(3) rounded to N decimals, certified by interval containment."""
    if not 0 <= n <= MAX_DIGITS:
        raise click.BadParameter(f"N must be in 0..{MAX_DIGITS}", param_hint="N")
    res = certified_digits(n, double)
    iv: Interval = res["interval"]
    click.echo(res["value"])
    click.echo(f"enclosure width: {upper_sci(iv.width)}")
    click.echo(f"first matching convergent: {res['expansion']} index {res['index']}")


def _write(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":  # pragma: no cover
    main()
