"""Pair polynomial characters with configuration space cohomology and compare constant ranges."""
import argparse

from repstab.stability import conf_pairing_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--deg", type=int, default=3)
    ap.add_argument("--imax", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=14)
    args = ap.parse_args()
    rows = conf_pairing_sweep(args.deg, args.imax, (2, 3), args.nmax)
    for r in rows:
        print(f"d={r['d']} i={r['i']} P={r['P']}: constant from {r['observed']}, bound {r['predicted']}"
              f"  {'ok' if r['ok'] else 'VIOLATED'}")
    bad = sum(not r["ok"] for r in rows)
    print(f"{len(rows) - bad}/{len(rows)} within the bound")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
