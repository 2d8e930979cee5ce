"""Command line entry point: ``repstab <verb> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from repstab import cache as diskcache
from repstab import liewhitney as lw
from repstab import orliksolomon as osa
from repstab import setpartitions as sp
from repstab import stability as st
from repstab import verify as vf
from repstab.characters import decompose_sym, decomposition_json, dimension
from repstab.partitions import Partition
from repstab.symfunc import CONFIG, DegreeCapError, format_terms

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

OBJECTS = ("lie", "w", "hatlie", "hatw", "wh", "conf", "kappa", "nu", "tau", "ell", "pi")

# smaller windows for a quick pass of ``verify all``
QUICK = {"tables": 6, "theorem-1-1": 2, "row-recurrence": 7, "tableaux": 7, "wg-recurrence": 7,
         "euler": 7, "degree-laws": 6, "littlewood": 4, "product-gf": 4, "whitney-beta": 6,
         "orlik-solomon": 5, "os-concentration": 6, "star-tree": 5, "dprime-euler": 6, "polynomial": 10}


class UsageError(ValueError):
    pass


def _partition(text: str) -> Partition:
    try:
        lam = Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition literal {text!r}") from exc
    return lam


def _ranks(text: str) -> list[int]:
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad rank set {text!r}") from exc


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--object {args.object} needs " + ", ".join("--" + n for n in missing))


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- verbs -------------------------------------------------------------------

def build_object(args):
    """(size, SymFn) for the named character."""
    obj = args.object
    if obj in ("lie", "w"):
        if args.partition is not None:
            lam = args.partition
            return lam.size, (lw.lie_lambda if obj == "lie" else lw.w_lambda)(lam)
        _need(args, "rank", "size")
        return args.size, lw.graded("Lie" if obj == "lie" else "W", args.rank, args.size)
    if obj in ("hatlie", "hatw"):
        _need(args, "rank", "size")
        return args.size, lw.hat_entry("Lie" if obj == "hatlie" else "W", args.rank, args.size)
    if obj == "wh":
        _need(args, "rank", "size")
        return args.size, lw.whitney_homology(args.rank, args.size)
    if obj == "conf":
        _need(args, "size", "d", "rank")
        return args.size, lw.conf_cohomology(args.size, args.d, args.rank)
    _need(args, "size")
    return args.size, {"kappa": lw.kappa, "nu": lw.nu, "tau": lw.tau, "ell": lw.ell, "pi": lw.pi}[obj](args.size)


def cmd_decompose(args) -> int:
    n, f = build_object(args)
    mult = decompose_sym(f)
    data = decomposition_json(n, mult)
    data = {"object": args.object, **data, "dimension": dimension(f)}
    text = f"{format_terms(mult)}\ndimension {data['dimension']}"
    _emit(args, text, data)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "all":
        names = list(vf.TARGETS)
    elif args.target in vf.TARGETS:
        names = [args.target]
    else:
        raise UsageError(f"unknown target {args.target!r}; choose from all, " + ", ".join(vf.TARGETS))
    results = []
    for name in names:
        nmax = args.nmax
        if nmax is None and args.budget == "quick":
            nmax = QUICK.get(name)
        results.append((name, vf.run_target(name, nmax)))
    ok = all(c.ok for _, checks in results for c in checks)
    lines = [c.line(name) for name, checks in results for c in checks]
    if len(names) > 1:
        lines.append(f"{sum(all(c.ok for c in cs) for _, cs in results)}/{len(results)} targets passed")
    data = {"ok": ok, "targets": [{"target": name, "ok": all(c.ok for c in cs),
                                   "checks": [c.as_dict() for c in cs]} for name, cs in results]}
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_onset(args) -> int:
    obj = args.object
    if obj in ("conf", "lie", "w"):
        _need(args, "i")
        if obj == "conf":
            _need(args, "d")
            kind = lw.conf_kind(args.d)
        else:
            kind = "Lie" if obj == "lie" else "W"
        f = lw.hat_aggregate(kind, args.i)
        onset = st.onset_of_M(f)
        data = {"object": obj, "kind": kind, "i": args.i, "sharp_onset": onset}
        text = f"sharp onset {onset}"
        if args.nmax is not None:
            rep = st.onset_scan(f, args.nmax)
            data["observed"] = {"onset": rep.onset, "n_max": rep.n_max, "certified": rep.certified, "note": rep.note}
            text += f"\nobserved onset {rep.onset} for n <= {rep.n_max}" + (f" ({rep.note})" if rep.note else "")
            if rep.onset is not None and rep.certified and rep.onset != onset:
                _emit(args, text, data)
                return EXIT_FAIL
        _emit(args, text, data)
        return EXIT_OK
    if obj == "beta":
        _need(args, "ranks")
        rep = sp.beta_onset_experiment(args.ranks, args.nmax or 9)
        data = {k: v for k, v in rep.items() if k != "decompositions"}
        data["decompositions"] = [decomposition_json(n, m) for n, m in sorted(rep["decompositions"].items())]
        text = "\n".join(
            [f"n={n}: {format_terms(m)}" for n, m in sorted(rep["decompositions"].items())]
            + [f"observed onset {rep['observed_onset']} (n_max {rep['n_max']}, "
               f"{'certified' if rep['certified'] else 'not certified'})",
               f"bound 4i = {rep['bound_4i']}, conjecture 4i-(|S|-1) = {rep['conjecture']}: {rep['status']}"])
        _emit(args, text, data)
        return EXIT_OK
    if obj == "refined":
        _need(args, "i", "d")
        nu = args.nu if args.nu is not None else Partition()
        parity = "d-odd" if args.d % 2 else "d-even"
        n_max = args.nmax or 14
        values = [st.refined_multiplicity(args.i, nu, n, parity) for n in range(n_max + 1)]
        stable = n_max
        while stable > 0 and values[stable - 1] == values[n_max]:
            stable -= 1
        data = {"i": args.i, "nu": list(nu), "d": args.d, "values": values, "constant_from": stable}
        text = "\n".join([f"n={n}: {v}" for n, v in enumerate(values)]
                         + [f"constant from n={stable} in the window n <= {n_max}"])
        _emit(args, text, data)
        return EXIT_OK
    if obj == "pairing":
        _need(args, "i", "d", "poly")
        P = st.PolynomialStatistic.parse(args.poly)
        rep = st.conf_pairing(P, args.i, args.d, args.nmax or 14)
        data = {"P": args.poly, "i": args.i, "d": args.d, "values": [str(v) for v in rep.values],
                "constant_from": rep.observed,
                "bound": rep.predicted, "certified": rep.certified, "ok": rep.ok}
        text = "\n".join([f"n={n}: {v}" for n, v in enumerate(rep.values)]
                         + [f"constant from n={rep.observed}, bound {rep.predicted}"
                            + ("" if rep.certified else " (window too short to certify)")])
        _emit(args, text, data)
        return EXIT_OK if rep.ok or not rep.certified else EXIT_FAIL
    raise UsageError(f"onset does not handle --object {obj}")


def cmd_beta(args) -> int:
    n, ranks = args.size, args.ranks
    f = sp.beta_S_sym(n, ranks)
    mult = decompose_sym(f)
    data = {"S": ranks, **decomposition_json(n, mult), "dimension": dimension(f),
            "chains": sp.chain_count(n, ranks)}
    text = f"{format_terms(mult)}\ndimension {data['dimension']}\nchains {data['chains']}"
    _emit(args, text, data)
    return EXIT_OK


def cmd_os(args) -> int:
    n = args.size
    osa._check_n(n, osa.OS.max_n)
    data = {"n": n, "dims": osa.dims(n), "char_poly": osa.char_poly_dims(n),
            "cohomology": osa.cohomology(n)}
    lines = [f"dim A^i: {data['dims']}", f"characteristic polynomial: {data['char_poly']}",
             f"cohomology of (A, d): {data['cohomology']}"]
    if n >= 2:
        coh = osa.hatW_cohomology(n)
        data["hatW"] = osa.cohomology_report(n, check_traces=n <= 6)
        lines.append(f"cohomology of F_n: {coh}")
        r = osa.star_tree_span(n)
        data["star_tree"] = {"relation_holds": r.relation_holds, "dimension": r.dimension,
                             "character": r.character.to_json()}
        lines.append(f"star trees: relation {'holds' if r.relation_holds else 'fails'}, "
                     f"span dimension {r.dimension}, character {format_terms(r.character.schur())}")
    if args.rank is not None:
        chi = osa.A_character(n, args.rank)
        data["A_character"] = chi.to_json()
        lines.append(f"A^{args.rank}: {format_terms(chi.schur())}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_cache(args) -> int:
    store = CONFIG.cache or diskcache.PlethysmCache(args.dir)
    if args.action == "clear":
        removed = store.clear()
        _emit(args, f"removed {removed} entries from {store.directory}", {"removed": removed})
    else:
        info = store.info()
        _emit(args, f"{info['directory']}: {info['entries']} entries, {info['bytes']} bytes", info)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, help="cap on symmetric function degrees")
    common.add_argument("--max-n", type=int, help="cap on n for lattice and Orlik-Solomon enumerations")
    common.add_argument("--max-chains", type=int, help="work budget for chain counting")

    parser = argparse.ArgumentParser(prog="repstab",
                                     description="Exact computations with configuration space characters.")
    sub = parser.add_subparsers(dest="verb", metavar="verb")
    sub.required = True

    p = sub.add_parser("decompose", parents=[common], help="irreducible decomposition of a named character")
    p.add_argument("--object", choices=OBJECTS, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--partition", type=_partition)
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a verification target")
    p.add_argument("target", help="all, " + ", ".join(vf.TARGETS))
    p.add_argument("--nmax", type=int)
    p.add_argument("--budget", choices=("default", "quick"), default="default")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("onset", parents=[common], help="stable-range onsets")
    p.add_argument("--object", choices=("conf", "lie", "w", "beta", "refined", "pairing"), required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--ranks", type=_ranks)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--poly", help='polynomial statistic, e.g. "b(1,2) - x2"')
    p.add_argument("--nmax", type=int)
    p.set_defaults(run=cmd_onset)

    p = sub.add_parser("beta", parents=[common], help="rank-selected homology of the partition lattice")
    p.add_argument("--ranks", type=_ranks, required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(run=cmd_beta)

    p = sub.add_parser("os", parents=[common], help="Orlik-Solomon algebra of the braid arrangement")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.set_defaults(run=cmd_os)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the plethysm cache")
    p.add_argument("action", choices=("info", "clear"))
    p.add_argument("--dir")
    p.set_defaults(run=cmd_cache)
    return parser


def _budgets() -> tuple:
    return (CONFIG.max_degree, sp.LATTICE.max_n, sp.LATTICE.max_chains, osa.OS.max_n, osa.OS.max_n_hat)


def _restore(saved: tuple) -> None:
    (CONFIG.max_degree, sp.LATTICE.max_n, sp.LATTICE.max_chains, osa.OS.max_n, osa.OS.max_n_hat) = saved


def _apply_budgets(args) -> None:
    if args.max_degree is not None:
        CONFIG.max_degree = args.max_degree
    if args.max_n is not None:
        sp.LATTICE.max_n = args.max_n
        osa.OS.max_n = osa.OS.max_n_hat = args.max_n
    if args.max_chains is not None:
        sp.LATTICE.max_chains = args.max_chains


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    saved = _budgets()
    _apply_budgets(args)
    if os.environ.get(diskcache.ENV_VAR) and CONFIG.cache is None:
        diskcache.enable()
    try:
        return args.run(args)
    except (DegreeCapError, sp.BudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, KeyError) as exc:
        print(f"repstab {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _restore(saved)


if __name__ == "__main__":
    sys.exit(main())
