"""Print partial-fraction tables and generating polynomials as JSON with exact fractions.

Usage: python scripts/beta_tables.py --alpha 1 --nu 2 --r 1
"""
import argparse
import json

from zeta3cf.beta_functions import beta_star, beta_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=int, default=1)
    ap.add_argument("--nu", type=int, default=2)
    ap.add_argument("--r", type=int, default=0)
    a = ap.parse_args()
    tab = beta_table(a.alpha, a.nu, a.r)
    bs = beta_star(a.alpha, a.nu, a.r)
    out = {
        "alpha": a.alpha, "nu": a.nu, "r": a.r,
        "beta1": [str(x) for x in tab.b1],
        "beta2": [str(x) for x in tab.b2],
        "beta_star": {f"b{i}": [str(c) for c in bs.get(i).coeffs] for i in (1, 2, 3, 4)},
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
