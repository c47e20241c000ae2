"""Graph families, invariant sweeps and the triple search.

Sweeps are embarrassingly parallel; results are always sorted canonically so
the worker count never changes the output.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from . import graph as gr
from .codegree import (codegree_auto, codegree_exact, codegree_matching_edmonds,
                       codegree_matching_formula, is_h_perfect, triple_class,
                       verify_certificates)
from .graph import Graph
from .guards import DEFAULT_GUARDS, Guards, check
from .polytope import (contains_facets, contains_lp, count_lattice_points, ehrhart_h_star,
                       interior_facets, interior_lp, matching_polytope, stable_set_polytope)


def graph_key(g: Graph) -> tuple:
    """Canonical sort key: vertex count, edge count, sorted edge list."""
    return (g.n, g.edge_count, g.sorted_edges)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^C(n,2)`` labeled graphs on ``1..n``, by edge bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for b, e in enumerate(pairs) if mask >> b & 1])


def labeled_graphs_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from all_labeled_graphs(n)


def random_family(sample: int, seed: int, n_min: int, n_max: int) -> list[Graph]:
    """``sample`` graphs with ``n`` uniform in ``[n_min, n_max]`` and uniform edge density.

    Each member is itself a ``random(n,p,seed)`` expression, so it can be
    reproduced from its label alone.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for _ in range(sample):
        n = int(rng.integers(n_min, n_max + 1))
        p = round(float(rng.random()), 6)
        sub = int(rng.integers(0, 2**62))
        out.append(gr.random_graph(n, p, sub))
    return out


def _map(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# --- triple search ----------------------------------------------------------

@dataclass
class TripleSearchResult:
    graphs_examined: int = 0
    witnesses: dict[tuple[int, int, int], Graph] = field(default_factory=dict)
    class_counts: dict[str, int] = field(default_factory=lambda: {c: 0 for c in ("i", "ii", "iii", "iv")})

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return sorted(self.witnesses)

    def classes(self) -> set[str]:
        return {c for c, k in self.class_counts.items() if k}


def _triple_of(g: Graph) -> tuple[Graph, tuple[int, int, int]]:
    rep = codegree_exact(g)
    return g, rep.triple


def triple_search(n_max: int | None = None, family: str = "all_labeled", sample: int = 100,
                  seed: int = 0, graphs: Iterable[Graph] | None = None, workers: int = 1,
                  guards: Guards = DEFAULT_GUARDS) -> TripleSearchResult:
    """Realized ``(omega+1, codeg, chi+1)`` triples with a smallest witness each.

    ``family`` is ``all_labeled`` (every labeled graph on ``1..n_max``
    vertices), ``random`` (``sample`` random graphs on ``2..n_max``) or
    ``fixtures`` (the explicit ``graphs``).
    """
    if family == "fixtures":
        items = list(graphs or [])
    else:
        if n_max is None:
            raise ValueError("n_max is required for generated families")
        check(n_max, guards.sweep_max_n, "triple_search")
        if family == "all_labeled":
            items = list(labeled_graphs_up_to(n_max))
        elif family == "random":
            items = random_family(sample, seed, min(2, n_max), n_max)
        else:
            raise ValueError(f"unknown family {family!r}")
    result = TripleSearchResult()
    for g, t in sorted(_map(_triple_of, items, workers), key=lambda r: graph_key(r[0])):
        result.graphs_examined += 1
        result.class_counts[triple_class(*t)] += 1
        if t not in result.witnesses:
            result.witnesses[t] = g
    return result


# --- invariant suites -------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    graph: Graph
    invariant: str
    detail: str


@dataclass(frozen=True)
class SweepOptions:
    random_points: int = 10
    seed: int = 0
    dual_path_max_n: int = 6
    ehrhart_max_n: int = 5
    matching_max_edges: int = 10
    guards: Guards = DEFAULT_GUARDS


def check_graph(g: Graph, opts: SweepOptions = SweepOptions()) -> list[Violation]:
    """Run the codegree and polytope invariant suites on one graph."""
    out: list[Violation] = []

    def fail(name: str, detail: str) -> None:
        out.append(Violation(g, name, detail))

    guards = opts.guards
    inv = gr.graph_invariants(g, guards.graph_max_n)
    omega, chi = inv.clique_number, inv.chromatic_number
    perfect = gr.is_perfect(g, guards.graph_max_n).perfect
    rep = codegree_exact(g, guards=guards, invariants=inv)

    if not omega + 1 <= rep.codeg <= chi + 1:
        fail("sandwich", f"{omega + 1} <= {rep.codeg} <= {chi + 1} fails")
    if perfect and not omega + 1 == rep.codeg == chi + 1:
        fail("perfect equality", f"triple {rep.triple} for a perfect graph")
    for problem in verify_certificates(g, rep):
        fail("certificates", problem)

    if g.n <= guards.facet_max_n:
        hp = is_h_perfect(g, guards)
        if hp.verdict == "h_perfect" and rep.codeg != omega + 1:
            fail("h-perfect formula", f"h-perfect but codeg {rep.codeg} != omega+1")
        if perfect and hp.verdict != "h_perfect":
            fail("perfect implies h-perfect", hp.verdict)
        auto = codegree_auto(g, guards=guards)
        if auto.codeg != rep.codeg:
            fail("dispatch soundness", f"{auto.method} gives {auto.codeg}, exact {rep.codeg}")

    P = stable_set_polytope(g, guards.graph_max_n)
    if g.n <= opts.dual_path_max_n:
        P.facets(guards.facet_max_n)
        rng = np.random.Generator(np.random.PCG64(opts.seed))
        one = (1,) * g.n
        for k in range(1, chi + 2):
            pts = [one] + [tuple(int(v) for v in rng.integers(0, k + 1, g.n))
                           for _ in range(opts.random_points)]
            for x in pts:
                if contains_lp(P, k, x) != contains_facets(P, k, x):
                    fail("dual-path contains", f"k={k}, x={x}")
                a, b = interior_lp(P, k, x).interior, interior_facets(P, k, x).interior
                if a != b:
                    fail("dual-path interior", f"k={k}, x={x}: lp={a} facet={b}")
                if a and not interior_lp(P, k + 1, x).interior:
                    fail("monotone interior", f"k={k}, x={x}")

    if g.n <= opts.ehrhart_max_n:
        eh = ehrhart_h_star(P, max_n=guards.ehrhart_max_n, guards=guards)
        if eh.h_star[0] != 1 or min(eh.h_star) < 0:
            fail("h* nonnegative", str(eh.h_star))
        if eh.values[1] != len(P.vertices):
            fail("L(1) = stable sets", f"{eh.values[1]} vs {len(P.vertices)}")
        if eh.degree != rep.degree:
            fail("degree link", f"deg h* = {eh.degree}, n+1-codeg = {rep.degree}")
        for k in range(1, g.n + 1):
            inner = count_lattice_points(P, k, strict=True, guards=guards)
            if inner != (-1) ** g.n * eh.evaluate(-k):
                fail("reciprocity", f"k={k}: interior {inner}, (-1)^n L(-k) = {(-1) ** g.n * eh.evaluate(-k)}")

    if g.edges and g.edge_count <= opts.matching_max_edges:
        line = gr.line_graph(g)
        f1 = codegree_matching_formula(g, with_invariants=False).codeg
        f2 = codegree_matching_edmonds(g, guards=guards, with_invariants=False).codeg
        f3 = codegree_exact(line, guards=guards).codeg
        if not f1 == f2 == f3:
            fail("matching three-way", f"formula {f1}, edmonds {f2}, exact {f3}")
        if set(matching_polytope(g).vertices) != set(stable_set_polytope(line).vertices):
            fail("matching = line stable set polytope", "vertex sets differ")
    return out


def _check_for_pool(args: tuple[Graph, SweepOptions]) -> list[Violation]:
    return check_graph(*args)


def verify_family(graphs: Iterable[Graph], opts: SweepOptions = SweepOptions(),
                  workers: int = 1) -> tuple[int, list[Violation]]:
    items = sorted(graphs, key=graph_key)
    results = _map(_check_for_pool, [(g, opts) for g in items], workers)
    violations = [v for vs in results for v in vs]
    return len(items), violations
