"""Refined multiplicities f_(i,nu)(n) and where each sequence becomes constant.

Useful for exploring the threshold i0(nu) beyond which the rank-i sequences stabilize early.
"""
import argparse

from repstab.partitions import partitions_of
from repstab.stability import refined_multiplicity


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--imax", type=int, default=3)
    ap.add_argument("--numax", type=int, default=3, help="largest |nu|")
    ap.add_argument("--nmax", type=int, default=14)
    args = ap.parse_args()
    for parity in ("d-odd", "d-even"):
        for i in range(1, args.imax + 1):
            for k in range(args.numax + 1):
                for nu in partitions_of(k):
                    values = [refined_multiplicity(i, nu, n, parity) for n in range(args.nmax + 1)]
                    start = args.nmax
                    while start > 0 and values[start - 1] == values[-1]:
                        start -= 1
                    print(f"{parity} i={i} nu={list(nu)}: constant {values[-1]} from n={start}  {values}")


if __name__ == "__main__":
    main()
