"""Compare the closed commutor formula with the zeta-conjugated swap on all of B(n) (x) B(m)."""

import argparse

from crystal_bialgebra.crystal_core import build_Bn
from crystal_bialgebra.tensor_ops import commutor, commutor_sl2


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=6)
    args = ap.parse_args()
    bad = total = 0
    for n in range(args.max + 1):
        for m in range(args.max + 1):
            table = commutor(build_Bn(n), build_Bn(m))
            for elem, img in table.items():
                total += 1
                if commutor_sl2(elem) != img:
                    bad += 1
                    print("mismatch", elem, img, commutor_sl2(elem))
    print(f"{total} elements checked, {bad} mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
