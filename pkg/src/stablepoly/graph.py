"""Simple graphs on ``1..n``: generators, transforms, exact invariants and
perfect-graph recognition.

Vertices are 1-based in every public signature.  Internally adjacency is a
tuple of bitmasks where bit ``j`` of ``adj[i]`` means vertices ``i+1`` and
``j+1`` are adjacent.

Numbering of derived graphs is fixed:

* ``line_graph(g)``: vertex ``k`` is the ``k``-th edge of ``g`` in
  lexicographic order.
* ``join(g, h)`` / ``disjoint_union(g, h)``: ``g`` keeps ``1..n(g)``, the
  vertices of ``h`` are shifted by ``n(g)``.
* ``induced(g, S)``: the vertices of ``S`` in increasing order become
  ``1..|S|``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .guards import DEFAULT_GUARDS, check

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph data or an impossible transform."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Equality and hashing only look at ``n`` and ``edges``; ``label`` and
    ``line_of`` are provenance.
    """

    n: int
    edges: frozenset[Edge]
    label: str | None = field(default=None, compare=False)
    line_of: Graph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {{{i},{j}}} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], label: str | None = None,
                   line_of: Graph | None = None) -> Graph:
        norm = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"vertex out of range in edge {{{i},{j}}} (n={n})")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm), label, line_of)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def describe(self) -> str:
        return self.label if self.label is not None else f"graph(n={self.n}, m={self.edge_count})"


def _bits(mask: int) -> list[int]:
    """1-based vertices of a bitmask, increasing."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


# --- generators -------------------------------------------------------------

def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return Graph.from_edges(k, edges, f"cycle({k})")


def complete(k: int) -> Graph:
    return Graph.from_edges(k, combinations(range(1, k + 1), 2), f"complete({k})")


def path(k: int) -> Graph:
    """Path on ``k`` vertices (``k-1`` edges)."""
    return Graph.from_edges(k, [(i, i + 1) for i in range(1, k)], f"path({k})")


def empty(k: int) -> Graph:
    return Graph.from_edges(k, [], f"empty({k})")


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("complete_multipartite needs positive part sizes")
    owner = []
    for idx, size in enumerate(parts):
        owner.extend([idx] * size)
    n = len(owner)
    edges = [(i + 1, j + 1) for i, j in combinations(range(n), 2) if owner[i] != owner[j]]
    label = "complete_multipartite(" + ",".join(map(str, parts)) + ")"
    return Graph.from_edges(n, edges, label)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from numpy's PCG64 generator seeded with ``seed``.

    Pairs are visited in lexicographic order and each draws one double.
    """
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0,1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(1, n + 1), 2))
    draws = rng.random(len(pairs))
    edges = [e for e, u in zip(pairs, draws) if u < p]
    return Graph.from_edges(n, edges, f"random({n},{p},{seed})")


# --- transforms -------------------------------------------------------------

def _combined(name: str, *labels: str | None) -> str | None:
    if any(lab is None for lab in labels):
        return None
    return f"{name}(" + ",".join(labels) + ")"  # type: ignore[arg-type]


def complement(g: Graph) -> Graph:
    edges = [e for e in combinations(range(1, g.n + 1), 2) if e not in g.edges]
    return Graph.from_edges(g.n, edges, _combined("complement", g.label))


def line_graph(g: Graph) -> Graph:
    if not g.edges:
        raise GraphError("line graph of an edgeless graph is empty")
    order = g.sorted_edges
    edges = [(a + 1, b + 1) for a, b in combinations(range(len(order)), 2)
             if set(order[a]) & set(order[b])]
    return Graph.from_edges(len(order), edges, _combined("line", g.label), line_of=g)


def join(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = list(g.edges) + [(i + off, j + off) for i, j in h.edges]
    edges += [(i, j + off) for i in range(1, g.n + 1) for j in range(1, h.n + 1)]
    return Graph.from_edges(g.n + h.n, edges, _combined("join", g.label, h.label))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = list(g.edges) + [(i + off, j + off) for i, j in h.edges]
    return Graph.from_edges(g.n + h.n, edges, _combined("union", g.label, h.label))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    given = list(vertices)
    keep = sorted(set(given))
    if len(keep) != len(given):
        raise GraphError("induced subgraph vertex list has repeats")
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in keep:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i + 1 for i, v in enumerate(keep)}
    edges = [(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos]
    label = None
    if g.label is not None:
        label = f"induced({g.label},[{','.join(map(str, keep))}])"
    return Graph.from_edges(len(keep), edges, label)


def transform(g: Graph, op: str, arg=None) -> Graph:
    """Dispatch ``op`` in complement | line_graph | join | disjoint_union | induced."""
    if op == "complement":
        return complement(g)
    if op == "line_graph":
        return line_graph(g)
    if op == "join":
        return join(g, arg)
    if op == "disjoint_union":
        return disjoint_union(g, arg)
    if op == "induced":
        return induced(g, arg)
    raise GraphError(f"unknown transform {op!r}")


# --- invariants -------------------------------------------------------------

@dataclass(frozen=True)
class InvariantBundle:
    n: int
    edge_count: int
    max_degree: int
    clique_number: int
    chromatic_number: int
    components: tuple[tuple[int, ...], ...]
    clique_witness: tuple[int, ...]
    coloring_witness: dict[int, int]


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u - 1]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def max_degree(g: Graph) -> int:
    return max(m.bit_count() for m in g.adj)


def maximum_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique by branch and bound (first found in vertex order)."""
    adj = g.adj
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = clique
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(clique + [v], cand & adj[v])
            cand ^= low

    expand([], (1 << g.n) - 1)
    return tuple(v + 1 for v in best)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), each sorted, list sorted."""
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pivot_src = p | x
        u = max(_bits(pivot_src), key=lambda w: (adj[w - 1] & p).bit_count())
        for v in _bits(p & ~adj[u - 1]):
            bit = 1 << (v - 1)
            bk(r | bit, p & adj[v - 1], x & adj[v - 1])
            p &= ~bit
            x |= bit

    bk(0, (1 << g.n) - 1, 0)
    return sorted(out)


def k_coloring(g: Graph, k: int) -> dict[int, int] | None:
    """A proper coloring with colors ``1..k`` or None.

    Branches on the lowest-index uncolored vertex, colors ascending; a vertex
    never opens a color beyond ``max used + 1``.
    """
    adj = g.adj
    color = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = {color[u - 1] for u in _bits(adj[v] & ((1 << v) - 1))}
        for c in range(1, min(k, used + 1) + 1):
            if c in forbidden:
                continue
            color[v] = c
            if place(v + 1, max(used, c)):
                return True
        color[v] = 0
        return False

    if not place(0, 0):
        return None
    return {v + 1: c for v, c in enumerate(color)}


def chromatic_number(g: Graph, lower: int | None = None) -> tuple[int, dict[int, int]]:
    k = lower if lower is not None else len(maximum_clique(g))
    while True:
        col = k_coloring(g, k)
        if col is not None and len(set(col.values())) == k:
            return k, col
        if col is not None:
            # fewer colors suffice than k; cannot happen when k starts at a lower bound
            raise AssertionError("chromatic search started above the chromatic number")
        k += 1


def graph_invariants(g: Graph, max_n: int = DEFAULT_GUARDS.graph_max_n) -> InvariantBundle:
    check(g.n, max_n, "graph_invariants")
    clique = maximum_clique(g)
    chi, coloring = chromatic_number(g, len(clique))
    return InvariantBundle(
        n=g.n,
        edge_count=g.edge_count,
        max_degree=max_degree(g),
        clique_number=len(clique),
        chromatic_number=chi,
        components=tuple(components(g)),
        clique_witness=clique,
        coloring_witness=coloring,
    )


# --- stable sets ------------------------------------------------------------

def iter_stable_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Stable sets in lexicographic order of their indicator vectors."""
    adj = g.adj
    n = g.n

    def rec(v: int, chosen: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(chosen)
            return
        yield from rec(v + 1, chosen, blocked)
        if not blocked >> v & 1:
            chosen.append(v + 1)
            yield from rec(v + 1, chosen, blocked | adj[v])
            chosen.pop()

    yield from rec(0, [], 0)


def enumerate_stable_sets(g: Graph, max_n: int = DEFAULT_GUARDS.graph_max_n) -> list[tuple[int, ...]]:
    check(g.n, max_n, "enumerate_stable_sets")
    return list(iter_stable_sets(g))


def indicator(n: int, vertices: Iterable[int]) -> tuple[int, ...]:
    x = [0] * n
    for v in vertices:
        x[v - 1] = 1
    return tuple(x)


# --- perfection -------------------------------------------------------------

@dataclass(frozen=True)
class PerfectnessCertificate:
    perfect: bool
    kind: str | None = None  # "odd_hole" | "odd_antihole"
    witness: tuple[int, ...] = ()

    @property
    def verdict(self) -> str:
        return "perfect" if self.perfect else "imperfect"


def _find_odd_hole(adj: Sequence[int], n: int) -> list[int] | None:
    """An induced cycle of odd length >= 5, as a vertex sequence, or None.

    Grows chordless paths whose first vertex is the smallest on the cycle.
    """
    def grow(s: int, path: list[int], blocked: int) -> list[int] | None:
        u = path[-1]
        above = ~((1 << (s + 1)) - 1)
        cand = adj[u] & ~blocked & above
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if adj[s] >> w & 1:
                if len(path) >= 2 and len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                    return path + [w]
                continue
            inner = adj[u] if len(path) >= 2 else 0
            found = grow(s, path + [w], blocked | low | inner)
            if found:
                return found
        return None

    for s in range(n):
        for v1 in _bits(adj[s] & ~((1 << (s + 1)) - 1)):
            v1 -= 1
            found = grow(s, [s, v1], (1 << s) | (1 << v1))
            if found:
                return found
    return None


def is_perfect(g: Graph, max_n: int = DEFAULT_GUARDS.graph_max_n) -> PerfectnessCertificate:
    """Decide perfection by searching for odd holes, then odd antiholes."""
    check(g.n, max_n, "is_perfect")
    hole = _find_odd_hole(g.adj, g.n)
    if hole is not None:
        return PerfectnessCertificate(False, "odd_hole", tuple(v + 1 for v in hole))
    full = (1 << g.n) - 1
    co_adj = [(full & ~m) & ~(1 << i) for i, m in enumerate(g.adj)]
    anti = _find_odd_hole(co_adj, g.n)
    if anti is not None:
        return PerfectnessCertificate(False, "odd_antihole", tuple(v + 1 for v in anti))
    return PerfectnessCertificate(True)


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists the vertices of an induced cycle of ``g`` in order."""
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.adjacent(seq[a], seq[b]) != consecutive:
                return False
    return True
