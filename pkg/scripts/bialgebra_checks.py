"""Report the set-level and linear bialgebra axioms up to a degree."""

import argparse

from crystal_bialgebra import linear_bialgebra as lb
from crystal_bialgebra import set_bialgebra as sb


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=2)
    args = ap.parse_args()
    d = args.degree
    print("set associativity failures:", len(sb.associativity_failures(d)))
    print("set coassociativity failures:", len(sb.coassociativity_failures(d)))
    print("set compatibility-square failures:", len(sb.bialgebra_square_failures(d)))
    print("set counit candidates:", len(sb.counit_candidates(d)))
    for name, bad in lb.check_bialgebra(d).items():
        print(f"linear {name} failures:", len(bad))


if __name__ == "__main__":
    main()
