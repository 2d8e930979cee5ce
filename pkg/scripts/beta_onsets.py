"""Observed stable-range onsets of rank-selected homology of the partition lattice.

Each rank set is compared against the bound 4 max(S) and the guess 4 max(S) - (|S| - 1).
"""
import argparse
from itertools import combinations

from repstab.setpartitions import beta_onset_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=9)
    ap.add_argument("--imax", type=int, default=2)
    args = ap.parse_args()
    print("S          onset  4i  guess  status")
    for i in range(1, args.imax + 1):
        for k in range(i):
            for rest in combinations(range(1, i), k):
                S = list(rest) + [i]
                r = beta_onset_experiment(S, args.nmax)
                onset = r["observed_onset"] if r["certified"] else f">{args.nmax - 1}"
                print(f"{str(S):10} {str(onset):>5}  {r['bound_4i']:>2}  {r['conjecture']:>5}  {r['status']}")


if __name__ == "__main__":
    main()
