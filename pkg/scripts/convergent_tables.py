"""Write CSV convergent tables for every expansion into an output directory.

Usage: python scripts/convergent_tables.py [--n 40] [--out tables]
"""
import argparse
import pathlib

from click.testing import CliRunner

from zeta3cf.cli import SPECS, main


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--digits", type=int, default=30)
    ap.add_argument("--out", default="tables")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    runner = CliRunner()
    for spec in SPECS:
        path = out / f"{spec}.csv"
        res = runner.invoke(main, ["convergents", "--spec", spec, "--n", str(args.n), "--format", "csv",
                                   "--digits", str(args.digits), "--out", str(path)])
        if res.exit_code:
            raise SystemExit(res.output)
        print(f"wrote {path}")


if __name__ == "__main__":
    run()
