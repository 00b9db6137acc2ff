"""Run the acceptance criteria and print one line each; exit 1 if any fail."""

import argparse

from crystal_bialgebra import selftest


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", help="comma separated criterion numbers")
    args = ap.parse_args()
    if args.only:
        results = selftest.run_all([int(n) for n in args.only.split(",")])
        agg = None
    else:
        agg, results = selftest.c10()
    for r in results:
        print(r.line())
    if agg is not None:
        print(agg.line())
    raise SystemExit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
