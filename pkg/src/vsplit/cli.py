"""Command line interface: solve, check, oracle, gen.

Results go to standard output as a single JSON document; diagnostics go to
standard error.  Exit codes: 0 solved / valid / reachable, 1 infeasible /
invalid / above budget, 2 bad input or a search limit was hit.
"""
from __future__ import annotations

import argparse
import sys

from . import solve as solve_dispatch
from .errors import BudgetExceeded, GraphError, OracleExceeded, VsplitError
from .generate import KINDS, generate
from .graph import GRAPH_CLASSES, Graph
from .serialize import (
    dumps,
    graph_from_dict,
    graph_from_edgelist,
    graph_to_dict,
    graph_to_edgelist,
    report_to_dict,
    result_to_dict,
    sequence_from_dict,
)
from .splits import VARIANTS
from .verify import brute_force_min_splits, check_certificate

import json


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edgelist":
        return graph_from_edgelist(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_dict(data)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    if args.limit_nodes is not None and g.n > args.limit_nodes:
        raise GraphError(
            f"graph has {g.n} vertices, above the limit {args.limit_nodes}"
        )
    res = solve_dispatch(
        g, args.graph_class, args.variant, odd_cap=args.odd_cap
    )
    payload = result_to_dict(res)
    if args.budget is not None:
        payload["budget"] = args.budget
        payload["within_budget"] = (
            res.feasible and res.min_splits is not None
            and res.min_splits <= args.budget
        )
    sys.stdout.write(dumps(payload))
    if not res.feasible:
        return 1
    if args.budget is not None and res.min_splits > args.budget:
        return 1
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    try:
        cert_data = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON in {args.certificate}: {exc}") from exc
    seq = sequence_from_dict(cert_data)
    report = check_certificate(g, seq, args.variant, args.graph_class)
    sys.stdout.write(dumps(report_to_dict(report)))
    return 0 if report.valid else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    try:
        k = brute_force_min_splits(g, args.graph_class, args.variant, args.k_max)
    except OracleExceeded:
        sys.stdout.write(dumps({"exceeded": True, "k_max": args.k_max}))
        return 1
    sys.stdout.write(dumps({"min_splits": k, "k_max": args.k_max}))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(
        args.kind, args.n, p=args.p, cycles=args.cycles,
        noise=args.noise, seed=args.seed,
    )
    if args.format == "edgelist":
        sys.stdout.write(graph_to_edgelist(g))
    else:
        sys.stdout.write(dumps(graph_to_dict(g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vsplit",
        description="Minimum vertex splitting into constellation, cycle graph, "
        "linear forest, or bipartite targets, with verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_variant(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--class", dest="graph_class", required=True, choices=GRAPH_CLASSES,
            help="target graph class",
        )
        p.add_argument(
            "--variant", required=True, choices=VARIANTS,
            help="inclusive or exclusive splits",
        )

    p_solve = sub.add_parser("solve", help="compute the minimum split count")
    p_solve.add_argument("input", help="graph file, or - for stdin")
    add_class_variant(p_solve)
    p_solve.add_argument("--budget", type=int, default=None,
                         help="also decide: is the minimum <= this budget?")
    p_solve.add_argument("--format", choices=("json", "edgelist"), default="json")
    p_solve.add_argument("--limit-nodes", type=int, default=None,
                         help="refuse graphs with more vertices than this")
    p_solve.add_argument("--odd-cap", type=int, default=20,
                         help="odd-vertex cap for the route inspection pairing")
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check", help="verify a certificate")
    p_check.add_argument("graph", help="graph file, or - for stdin")
    p_check.add_argument("certificate", help="certificate JSON file")
    add_class_variant(p_check)
    p_check.add_argument("--format", choices=("json", "edgelist"), default="json")
    p_check.set_defaults(func=cmd_check)

    p_oracle = sub.add_parser("oracle", help="brute-force minimum (small graphs)")
    p_oracle.add_argument("input", help="graph file, or - for stdin")
    add_class_variant(p_oracle)
    p_oracle.add_argument("--k-max", type=int, required=True,
                          help="give up beyond this many splits")
    p_oracle.add_argument("--format", choices=("json", "edgelist"), default="json")
    p_oracle.set_defaults(func=cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a seeded graph")
    p_gen.add_argument("kind", choices=KINDS)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--cycles", type=int, default=2)
    p_gen.add_argument("--noise", type=int, default=2)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--format", choices=("json", "edgelist"), default="json")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VsplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
