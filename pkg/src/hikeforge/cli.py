"""hikeforge: exact hike arithmetic on small digraphs.

Exit status: 0 on success, 1 when an identity check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .arithmetic import NAMED_FUNCTIONS, liouville, mangoldt_by_contiguity, mangoldt_by_convolution, tau
from .cospectral import expand_pathsum, intersection_slide_check
from .errors import HikeForgeError
from .graph import Digraph, SimpleGraph, load_digraph
from .hikes import enumerate_hikes, format_hike, hike_id, is_walk
from .identities import (
    SUITES,
    backtrackless_orbit_counts,
    brute_force_orbits,
    check_ihara_factorization,
    primitive_orbit_counts,
    run_suite,
)
from .incidence import mobius, one, series_of
from .ntbridge import check_nt_isomorphism
from .primes import enumerate_primes
from .reconstruction import reconstruct, reconstruct_with_lengths
from .reports import CheckReport
from .worked import run_worked_examples

DEFAULT_MAX_LEN = 8

SERIES_FUNCTIONS = {
    "mobius": mobius,
    "one": one,
    "tau": tau,
    "lambda": liouville,
    "mangoldt": mangoldt_by_convolution,
}


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: Any, human: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(human.rstrip("\n") + "\n")


def _read_graph(path: str) -> Digraph:
    try:
        with open(path, "rb") as fh:
            return load_digraph(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _read_simple(path: str) -> SimpleGraph:
    g = _read_graph(path)
    if g.has_loops() or not g.is_bidirected():
        raise UsageError(f"{path} must describe an undirected graph without loops")
    return g.to_simple_graph()


def _reports_out(args: argparse.Namespace, reports: list[CheckReport]) -> int:
    ok = all(r.passed for r in reports)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.identity} (bound {r.bound})" for r in reports]
    for r in reports:
        if not r.passed:
            lines.append(f"  counterexample: {json.dumps(r.to_json()['counterexample'], sort_keys=True)}")
    _emit(args, {"passed": ok, "reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if ok else 1


# -- subcommands -------------------------------------------------------------------


def cmd_primes(args) -> int:
    cat = enumerate_primes(_read_graph(args.graph))
    lines = [f"{cat.name(i)}: {' -> '.join(map(str, p.vertices))} (length {p.length})" for i, p in enumerate(cat)]
    lines.append(f"{len(cat)} primes, {len(cat.dependence_edges())} dependent pairs")
    _emit(args, cat.to_json(), "\n".join(lines))
    return 0


def cmd_hikes(args) -> int:
    cat = enumerate_primes(_read_graph(args.graph))
    hikes = enumerate_hikes(cat, args.max_len)
    counts = [0] * (args.max_len + 1)
    for h in hikes:
        counts[h.length] += 1
    payload: dict = {"max_len": args.max_len, "counts": counts}
    lines = [f"length {k}: {c}" for k, c in enumerate(counts)]
    if args.full:
        payload["hikes"] = [{"hike": format_hike(h), "id": hike_id(h), "length": h.length} for h in hikes]
        lines += [f"  {format_hike(h)}" for h in hikes]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_series(args) -> int:
    cat = enumerate_primes(_read_graph(args.graph))
    s = series_of(SERIES_FUNCTIONS[args.fn], cat, args.max_len)
    from .incidence import format_series

    _emit(args, {"function": args.fn, **s.to_json()}, format_series(s))
    return 0


def cmd_mangoldt(args) -> int:
    cat = enumerate_primes(_read_graph(args.graph))
    rows = []
    ok = True
    for h in enumerate_hikes(cat, args.max_len):
        if h.is_trivial:
            continue
        row: dict = {"hike": format_hike(h), "length": h.length, "mangoldt": mangoldt_by_convolution(h)}
        if args.oracle:
            row["contiguity"] = mangoldt_by_contiguity(h)
            ok &= row["contiguity"] == row["mangoldt"]
        rows.append(row)
    lines = [
        f"{r['hike']}: {r['mangoldt']}" + (f" (oracle {r['contiguity']})" if args.oracle else "")
        for r in rows
        if r["mangoldt"] or args.oracle
    ]
    if args.oracle:
        lines.append("oracle agrees" if ok else "ORACLE MISMATCH")
    _emit(args, {"max_len": args.max_len, "values": rows, "oracle_agrees": ok if args.oracle else None}, "\n".join(lines))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    if args.suite == "ihara" and (not g.is_bidirected() or g.has_loops()):
        raise UsageError("the ihara suite needs a bidirected graph without loops")
    return _reports_out(args, run_suite(g, args.max_len, args.suite))


def cmd_orbits(args) -> int:
    g = _read_graph(args.graph)
    counts = backtrackless_orbit_counts(g, args.max_len) if args.backtrackless else primitive_orbit_counts(g, args.max_len)
    payload: dict = {"max_len": args.max_len, "backtrackless": args.backtrackless, "counts": counts.to_json()}
    lines = [f"length {k}: {c}" for k, c in enumerate(counts.counts) if k]
    ok = True
    if args.oracle:
        brute = brute_force_orbits(g, args.max_len, backtrackless=args.backtrackless)
        ok = brute == counts
        payload["oracle"] = brute.to_json()
        lines.append("oracle agrees" if ok else f"ORACLE MISMATCH: {brute.to_json()}")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_ihara(args) -> int:
    g = _read_graph(args.graph)
    if not g.is_bidirected() or g.has_loops():
        raise UsageError("the Ihara factorization needs a bidirected graph without loops")
    return _reports_out(args, [check_ihara_factorization(g, args.max_len)])


def cmd_nt_check(args) -> int:
    lengths = [int(x) for x in args.lengths.split(",")] if args.lengths else None
    return _reports_out(args, [check_nt_isomorphism(args.primes, args.max_len, lengths)])


def _read_lengths(path: str) -> list[int]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x > 0 for x in data):
        raise UsageError(f"{path} must hold a JSON list of positive integers")
    return data


def cmd_reconstruct(args) -> int:
    gamma = _read_simple(args.gamma)
    if args.lengths:
        result = reconstruct_with_lengths(gamma, _read_lengths(args.lengths))
    else:
        result = reconstruct(gamma)
    payload = result.to_json()
    lines = [f"status: {result.outcome}"]
    if result.reason:
        lines.append(f"reason: {result.reason}")
    for cls in result.trace.get("classes", []):
        lines.append(f"class {cls['members']}: clique neighbourhood={cls['clique_neighbourhood']}")
    if "backtracks" in result.trace:
        lines.append(f"backtracks: {result.trace['backtracks']}")
    for g in payload["graphs"]:
        lines.append(json.dumps(g, sort_keys=True))
    _emit(args, payload, "\n".join(lines))
    return 0 if result.outcome in ("unique", "ambiguous") else 1


def _cycle_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cycle must be a comma-separated vertex list, got {text!r}") from exc


def cmd_cospectral(args) -> int:
    if args.pair:
        a, b = (_read_graph(p) for p in args.pair)
        return _reports_out(args, [intersection_slide_check(a, b)])
    if not (args.cycle1 and args.cycle2 and args.shared is not None):
        raise UsageError("--expand needs --cycle1, --cycle2 and --shared")
    g = _read_graph(args.expand)
    try:
        out = expand_pathsum(g, _cycle_arg(args.cycle1), _cycle_arg(args.cycle2), args.shared)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = out.to_json()
    _emit(args, payload, json.dumps(payload, sort_keys=True))
    return 0


def cmd_paper_examples(args) -> int:
    return _reports_out(args, run_worked_examples())


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hikeforge", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    # repeated on each subcommand; SUPPRESS keeps a flag given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str, func, graph: bool = True, max_len: bool = True):
        p = sub.add_parser(name, help=help_text, description=help_text, parents=[common])
        if graph:
            p.add_argument("--graph", required=True, metavar="FILE", help="graph JSON file")
        if max_len:
            p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, metavar="L", help="length bound (default 8)")
        p.set_defaults(func=func)
        return p

    add("primes", "list the simple cycles and their dependences", cmd_primes, max_len=False)
    p = add("hikes", "count hikes per length", cmd_hikes)
    p.add_argument("--full", action="store_true", help="also list every normal form")
    p = add("series", "coefficients of a named function's hike series", cmd_series)
    p.add_argument("--fn", choices=sorted(SERIES_FUNCTIONS), default="mobius")
    p = add("mangoldt", "von Mangoldt values of every hike", cmd_mangoldt)
    p.add_argument("--oracle", action="store_true", help="cross-check by counting contiguous representations")
    p = add("verify", "run identity checks", cmd_verify)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p = add("orbits", "primitive orbit counts from traces", cmd_orbits)
    p.add_argument("--backtrackless", action="store_true", help="use the non-backtracking arc matrix")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumerating closed walks")
    add("ihara", "Ihara factorization of the orbit zeta function", cmd_ihara)
    p = add("nt-check", "compare hike arithmetic on disjoint cycles with integers", cmd_nt_check, graph=False)
    p.add_argument("--primes", type=int, required=True, metavar="K", help="number of disjoint cycles")
    p.add_argument("--lengths", metavar="L1,L2,...", help="cycle lengths (default 1..K)")
    p = add("reconstruct", "recover a graph from its dependence graph", cmd_reconstruct, graph=False, max_len=False)
    p.add_argument("--gamma", required=True, metavar="FILE", help="dependence graph JSON file")
    p.add_argument("--lengths", metavar="FILE", help="JSON list of prime lengths")
    p = add("cospectral", "check a cospectral pair or expand two cycles", cmd_cospectral, graph=False, max_len=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", nargs=2, metavar=("A", "B"), help="two graph JSON files")
    group.add_argument("--expand", metavar="FILE", help="graph to rewrite")
    p.add_argument("--cycle1", metavar="V,V,...", help="cycle moved onto the new chain")
    p.add_argument("--cycle2", metavar="V,V,...", help="cycle kept in place")
    p.add_argument("--shared", type=int, metavar="V", help="vertex where the cycles meet")
    add("paper-examples", "run the curated worked examples", cmd_paper_examples, graph=False, max_len=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_len", 0) < 0:
        parser.print_usage(sys.stderr)
        sys.stderr.write("hikeforge: error: --max-len must be non-negative\n")
        return 2
    try:
        return args.func(args)
    except (UsageError, HikeForgeError) as exc:
        sys.stderr.write(f"hikeforge: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
