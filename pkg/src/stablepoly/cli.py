"""Command line entry point.

Exit codes: 0 success, 1 input/guard error, 2 internal assertion, failed
fixture, or invariant violation.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from pathlib import Path
from typing import Any

from . import graph as gr
from . import report
from .codegree import (codegree_auto, codegree_exact, codegree_matching_edmonds,
                       codegree_matching_formula, is_h_perfect, triple_class)
from .dsl import DSLError, parse_dsl, parse_edge_list
from .fixtures import reference_checks
from .graph import GraphError
from .guards import DEFAULT_GUARDS, GuardError, Guards
from .hull import HullError
from .polytope import PolytopeError, ehrhart_h_star, stable_set_polytope
from .regularity import regularity_bounds
from .sweep import SweepOptions, labeled_graphs_up_to, random_family, triple_search, verify_family

GRAPH_COMMANDS = ("invariants", "codegree", "facets", "ehrhart", "hperfect", "regularity", "matching")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stablepoly", description="Codegree and Ehrhart data of stable set polytopes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--max-n", type=_positive, help="override the size guard of this command")
        sp.add_argument("--facet-budget", type=_positive, help="largest dimension for facet enumeration")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=_positive, default=1)

    for name in GRAPH_COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("graph", nargs="?", help="generator expression, e.g. 'join(cycle(5),cycle(5))'")
        sp.add_argument("--file", type=Path, help="edge-list file instead of an expression")
        common(sp)
        if name == "codegree":
            sp.add_argument("--method", default="auto",
                            choices=("auto", "exact_lp", "exact_facet", "perfect_formula", "h_perfect_formula"))
            sp.add_argument("--declare-h-perfect", action="store_true")
        if name == "regularity":
            sp.add_argument("--k-max", type=_positive, default=3)

    for name in ("verify", "triples"):
        sp = sub.add_parser(name)
        fam = sp.add_mutually_exclusive_group(required=True)
        fam.add_argument("--all-labeled", action="store_true", help="every labeled graph up to --max-n vertices")
        fam.add_argument("--random", type=_positive, metavar="SAMPLE", help="number of random graphs")
        sp.add_argument("--min-n", type=_positive, default=2)
        common(sp)
        if name == "verify":
            sp.add_argument("--random-points", type=int, default=10)

    sp = sub.add_parser("paper-examples")
    sp.add_argument("--format", choices=("json", "table"), default="json")
    return p


def _guards(args: argparse.Namespace, field: str | None) -> Guards:
    updates = {}
    if getattr(args, "max_n", None) and field:
        updates[field] = args.max_n
    if getattr(args, "facet_budget", None):
        updates["facet_max_n"] = args.facet_budget
    return dataclasses.replace(DEFAULT_GUARDS, **updates)


def _load_graph(args: argparse.Namespace) -> gr.Graph:
    if (args.graph is None) == (args.file is None):
        raise GraphError("give exactly one input: an expression or --file")
    if args.file is not None:
        return parse_edge_list(args.file.read_text())
    return parse_dsl(args.graph)


def _run_graph_command(args: argparse.Namespace) -> tuple[gr.Graph, Any, Any]:
    g = _load_graph(args)
    cmd = args.command
    if cmd == "invariants":
        guards = _guards(args, "graph_max_n")
        inv = gr.graph_invariants(g, guards.graph_max_n)
        return g, report.invariants(inv, gr.is_perfect(g, guards.graph_max_n)), None
    if cmd == "codegree":
        guards = _guards(args, "codegree_max_n")
        if args.method in ("exact_lp", "exact_facet"):
            rep = codegree_exact(g, args.method, guards)
        elif args.method == "auto":
            rep = codegree_auto(g, args.declare_h_perfect, guards)
        else:
            rep = codegree_auto(g, args.method == "h_perfect_formula", guards)
            if rep.method != args.method:
                raise GraphError(f"{args.method} does not apply to this graph (dispatch chose {rep.method})")
        return (g, *report.codegree(rep))
    if cmd == "facets":
        guards = _guards(args, "facet_max_n")
        cert = is_h_perfect(g, guards)
        if cert.verdict == "inconclusive":
            raise GuardError(cert.reason)
        return g, {"count": len(cert.facets), "facets": [report.facet_class(c) for c in cert.facets]}, None
    if cmd == "ehrhart":
        guards = _guards(args, "ehrhart_max_n")
        P = stable_set_polytope(g, guards.graph_max_n)
        out = report.ehrhart(ehrhart_h_star(P, guards.ehrhart_max_n, guards))
        out["vertex_count"] = len(P.vertices)
        return g, out, None
    if cmd == "hperfect":
        guards = _guards(args, "facet_max_n")
        return g, report.h_perfect(is_h_perfect(g, guards)), None
    if cmd == "regularity":
        guards = _guards(args, "ehrhart_max_n")
        return g, report.regularity(regularity_bounds(g, args.k_max, guards)), None
    if cmd == "matching":
        guards = _guards(args, "odd_subset_max_n")
        out = {
            "formula": codegree_matching_formula(g, with_invariants=False, guards=guards).codeg,
            "edmonds": codegree_matching_edmonds(g, guards=guards, with_invariants=False).codeg,
            "exact_line_graph": None,
        }
        if g.edge_count <= guards.codegree_max_n:
            out["exact_line_graph"] = codegree_exact(gr.line_graph(g), guards=guards).codeg
        out["agree"] = len({v for v in out.values() if v is not None}) == 1
        out["dimension"] = g.edge_count
        return g, out, None
    raise AssertionError(cmd)


def _family(args: argparse.Namespace) -> list[gr.Graph]:
    max_n = args.max_n or 5
    if args.all_labeled:
        return list(labeled_graphs_up_to(max_n))
    return random_family(args.random, args.seed, min(args.min_n, max_n), max_n)


def _run_sweep(args: argparse.Namespace) -> Any:
    guards = _guards(args, None)
    if args.command == "triples":
        if args.all_labeled:
            res = triple_search(args.max_n or 5, "all_labeled", workers=args.workers, guards=guards)
        else:
            res = triple_search(args.max_n or 5, "random", sample=args.random, seed=args.seed,
                                workers=args.workers, guards=guards)
        return {
            "graphs_examined": res.graphs_examined,
            "class_counts": res.class_counts,
            "triples": [{"triple": list(t), "class": triple_class(*t), "witness": report.graph_echo(res.witnesses[t])}
                        for t in res.triples],
        }
    opts = SweepOptions(random_points=args.random_points, seed=args.seed, guards=guards)
    count, violations = verify_family(_family(args), opts, args.workers)
    return {
        "graphs_checked": count,
        "violations": [{"invariant": v.invariant, "detail": v.detail, "graph": report.graph_echo(v.graph)}
                       for v in violations],
    }


def _table(doc: dict[str, Any]) -> str:
    lines = [f"command: {doc['command']}"]
    if doc.get("input"):
        inp = doc["input"]
        lines.append(f"graph: {inp['dsl'] or 'edge list'} (n={inp['n']}, m={len(inp['edges'])})")

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            for k in value:
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}[{i}]", item)
        else:
            lines.append(f"{prefix}: {value}")

    walk("", doc["result"])
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    failed = False
    try:
        if args.command in GRAPH_COMMANDS:
            g, result, certs = _run_graph_command(args)
        elif args.command == "paper-examples":
            g, certs = None, None
            checks = reference_checks()
            result = {"checks": [{"fixture": c.fixture, "quantity": c.quantity, "expected": c.expected,
                                  "actual": c.actual, "ok": c.ok} for c in checks],
                      "all_ok": all(c.ok for c in checks)}
            failed = not result["all_ok"]
        else:
            g, certs = None, None
            result = _run_sweep(args)
            failed = bool(result.get("violations"))
    except (DSLError, GraphError, GuardError, HullError, PolytopeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 2
    doc = report.envelope(args.command, g, result, certs, time.perf_counter() - start)
    print(report.dumps(doc) if args.format == "json" else _table(doc))
    return 2 if failed else 0


def main() -> None:
    sys.exit(run())
