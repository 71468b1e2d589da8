"""``gainrank`` command line: analyze, fuzz, generate.

Exit codes: 0 success, 1 bad input or parameters, 2 a theorem check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cycle_analysis import CycleType
from .gain_core import GraphError, dumps_graph, load_graph
from .generators import (
    CertificationError,
    GainDomain,
    cycle_of_type,
    lower_optimal_instance,
    random_gain_graph,
)
from .linalg import DEFAULT_TOL
from .theorems import analyze, is_lower_optimal_by_structure

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


def _default_seed() -> int:
    raw = os.environ.get("GAINRANK_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"GAINRANK_SEED must be an integer, got {raw!r}")


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return x


def _nonneg_int(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if x < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {x}")
    return x


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def render_text(report) -> str:
    d = report.to_dict()
    lines = [
        f"n={d['n']} m={d['m']} omega={d['omega']} c={d['c']} alpha={d['alpha']} "
        f"matching={d['matching']} pendants={d['pendant_count']}",
        f"rank={d['rank']} inertia: p+={d['inertia']['p_plus']} n-={d['inertia']['n_minus']} "
        f"zero={d['inertia']['zero']} ({d['arithmetic']})",
        f"2n-2c-2α ≤ r ≤ 2n-2α:  {2 * d['n']}-{2 * d['c']}-{2 * d['alpha']} = {d['bound_lower']}"
        f" ≤ {d['rank']} ≤ {2 * d['n']}-{2 * d['alpha']} = {d['bound_upper']}"
        f"  [{'holds' if d['bounds_hold'] else 'VIOLATED'}]",
        f"cycles pairwise vertex-disjoint: {d['disjoint_cycles']}",
    ]
    for cyc in d["cycles"]:
        lines.append(
            f"  cycle {cyc['vertices']} length {cyc['length']} gain {cyc['gain_product']} "
            f"Type {cyc['type']}"
        )
    s = d["structure"]
    lines.append(f"lower-optimal by rank: {d['lower_optimal_by_rank']}")
    lines.append(f"lower-optimal by structure: {d['lower_optimal_by_structure']}")
    if "error" not in s:
        lines.append(
            f"  (i) disjoint={s['i_disjoint_cycles']} (ii) types={s['ii_cycle_types']} "
            f"(iii) alpha(T_G)=alpha([T_G])+c: {s['iii_alpha_condition']}"
        )
    lines.append(f"maximum independent set: {d['independent_set']}")
    for note in d["notes"]:
        lines.append(f"note: {note}")
    for v in d["violations"]:
        lines.append(f"VIOLATION: {v}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    try:
        g = load_graph(args.file)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = analyze(g, args.tol)
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_fuzz(args) -> int:
    from .fuzz import run_fuzz

    try:
        summary = run_fuzz(
            n_max=args.n_max,
            trials=args.trials,
            seed=args.seed,
            gain_domain=args.gain_domain,
            exhaustive_n=args.exhaustive_n,
            gains_per_graph=args.gains_per_graph,
            lemmas=not args.no_lemmas,
            tol=args.tol,
            workers=args.workers,
            rank_offset=args.inject_rank_offset,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for line in summary.lines():
        print(line)
    print("OK" if summary.ok else f"{len(summary.failures)} violation(s)")
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_generate(args) -> int:
    try:
        if args.kind == "random":
            g = random_gain_graph(args.n, args.p, args.gain_domain, args.seed)
        elif args.kind == "cycle":
            g = cycle_of_type(args.length, CycleType(args.type), args.seed)
        else:
            lengths = args.cycles
            g = lower_optimal_instance(len(lengths), lengths, args.growth, args.seed,
                                       isolated=args.isolated)
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        log = sys.stdout
    else:
        sys.stdout.write(text)
        log = sys.stderr
    if args.kind == "lower-optimal":
        verdict = is_lower_optimal_by_structure(g)
        print(
            f"certified lower-optimal: n={g.n} m={g.m} rank check passed, "
            f"structural check {'passed' if verdict.holds else 'FAILED'}",
            file=log,
        )
        if not verdict.holds:
            return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainrank",
        description="Rank, independence number and cyclomatic number of complex unit gain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()
    domains = [d.value for d in GainDomain]

    p = sub.add_parser("analyze", help="analyze a graph file")
    p.add_argument("file")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                   help="relative eigenvalue tolerance for angle gains")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(format="text", func=cmd_analyze)

    p = sub.add_parser("fuzz", help="check the theorems on generated instances")
    p.add_argument("--n-max", type=_nonneg_int, default=10)
    p.add_argument("--trials", type=_nonneg_int, default=200)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--gain-domain", choices=domains, default="FourthRoots")
    p.add_argument("--exhaustive-n", type=_nonneg_int, default=0,
                   help="also sweep every connected graph on at most this many vertices (<= 7)")
    p.add_argument("--gains-per-graph", type=_nonneg_int, default=25)
    p.add_argument("--no-lemmas", action="store_true", help="skip the lemma suite")
    p.add_argument("--workers", type=_nonneg_int, default=1)
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--inject-rank-offset", type=int, default=0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("generate", help="write a generated graph as JSON")
    gen = p.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("random")
    g.add_argument("--n", type=_nonneg_int, required=True)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--gain-domain", choices=domains, default="FourthRoots")
    g = gen.add_parser("cycle")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--type", choices=[t.value for t in CycleType], required=True)
    g = gen.add_parser("lower-optimal")
    g.add_argument("--cycles", type=_int_list, default=[], help="comma-separated cycle lengths")
    g.add_argument("--growth", type=_nonneg_int, default=0, help="pendant-pair growth steps")
    g.add_argument("--isolated", type=_nonneg_int, default=0)
    for g in gen.choices.values():
        g.add_argument("--seed", type=int, default=seed)
        g.add_argument("--out", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
