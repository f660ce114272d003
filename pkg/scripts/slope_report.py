"""Empirical convergence rates of every expansion against the independent zeta(3) oracle.

Usage: python scripts/slope_report.py [--lo 5] [--hi 40] [--json]
"""
import argparse
import json
import math
from fractions import Fraction

from zeta3cf import apery_nesterenko as an
from zeta3cf import theorem_a as ta
from zeta3cf.cf_engine import convergents
from zeta3cf.oracle import zeta3_interval


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=5)
    ap.add_argument("--hi", type=int, default=40)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    ks = range(args.lo, args.hi + 1)
    z3 = zeta3_interval(Fraction(1, 10 ** (4 * args.hi + 60)))

    apery = [an.apery_pair(k).v / an.apery_pair(k).u for k in ks]
    pn = convergents(an.nesterenko_cf_spec(), 4 * args.hi - 2)
    nest = [pn[4 * k - 2][0] / pn[4 * k - 2][1] for k in ks]
    rows = {
        "apery": an.error_slope(apery, z3, ks),
        "nesterenko[4k-2]": an.error_slope(nest, z3, ks),
        "expansion 1": ta.converge_2zeta3(1, args.hi).slope,
        "expansion 2": ta.converge_2zeta3(2, args.hi).slope,
        "Q growth r=1": ta.q_growth_slope(1, args.lo, args.hi),
        "Q growth r=2": ta.q_growth_slope(2, args.lo, args.hi),
        "linear form r=1": ta.form_decay_slope(1, args.lo, args.hi),
        "linear form r=2": ta.form_decay_slope(2, args.lo, args.hi),
    }
    targets = {"error": -8 * math.log(1 + math.sqrt(2)), "growth": 4 * math.log(1 + math.sqrt(2))}
    if args.json:
        print(json.dumps({"range": [args.lo, args.hi], "slopes": rows, "targets": targets}, indent=2))
        return
    print(f"indices {args.lo}..{args.hi}; error target {targets['error']:.5f}, growth target {targets['growth']:.5f}")
    for name, s in rows.items():
        ref = targets["error"] if ("growth" not in name and "form" not in name) else \
            (targets["growth"] if "growth" in name else -targets["growth"])
        print(f"{name:<18} {s:+.5f}   rel. dev {s / ref - 1:+.2%}")


if __name__ == "__main__":
    main()
