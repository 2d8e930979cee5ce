"""Print the hatted Lie and W tables, one row per (n, i) cell, as computed from scratch."""
import argparse
import json

from repstab.characters import decompose_sym, decomposition_json
from repstab.liewhitney import hat_entry
from repstab.symfunc import format_terms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--imax", type=int, default=4)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for kind in ("Lie", "W"):
        for n in range(2, args.nmax + 1):
            for i in range(1, min(args.imax, n - 1) + 1):
                mult = decompose_sym(hat_entry(kind, i, n))
                rows.append({"kind": kind, "i": i, **decomposition_json(n, mult)})
                if not args.json:
                    print(f"hat{kind}^{i}_{n}: {format_terms(mult)}")
    if args.json:
        print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
