"""Print the Clebsch-Gordan decomposition of B(m) (x) B(n) for small m, n."""

import argparse

from crystal_bialgebra.crystal_core import build_Bn
from crystal_bialgebra.tensor_ops import decompose, tensor


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=4)
    args = ap.parse_args()
    for m in range(args.max + 1):
        for n in range(args.max + 1):
            d = decompose(tensor(build_Bn(m), build_Bn(n)))
            parts = " + ".join(f"B({len(p.component) - 1})" for p in d.parts)
            print(f"B({m}) (x) B({n}) = {parts}")


if __name__ == "__main__":
    main()
