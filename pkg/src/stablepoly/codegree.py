"""Codegree of stable set polytopes: exact search, closed forms, h-perfectness.

The exact path uses the fact that a dilate ``kP_G`` has an interior lattice
point iff the all-ones point is interior, and scans ``k`` upward from
``omega + 1``; the first interior dilate is the codegree, and a scan that
passes ``chi + 1`` is treated as an internal error.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import graph as gr
from .graph import Graph, GraphError, InvariantBundle
from .guards import DEFAULT_GUARDS, GuardError, Guards, check
from .hull import Inequality
from .polytope import (InteriorResult, VPolytope, direction_step, interior_facets,
                       interior_lp, stable_set_polytope, verify_step)

METHODS = ("exact_lp", "exact_facet", "perfect_formula", "matching_formula",
           "matching_edmonds", "h_perfect_formula")


def triple_class(a: int, b: int, c: int) -> str:
    """Case label for ``omega+1 = a <= codeg = b <= chi+1 = c``."""
    if not a <= b <= c:
        raise ValueError(f"({a}, {b}, {c}) is not a sandwich triple")
    if a == b == c:
        return "i"
    if a < b == c:
        return "ii"
    if a == b < c:
        return "iii"
    return "iv"


@dataclass(frozen=True)
class CodegreeReport:
    n: int
    codeg: int
    method: str
    omega_plus_1: int | None = None
    chi_plus_1: int | None = None
    blocking_certificate: InteriorResult | None = field(default=None, repr=False)
    interior_certificate: InteriorResult | None = field(default=None, repr=False)
    rule: str = ""
    label: str | None = None

    @property
    def degree(self) -> int:
        return self.n + 1 - self.codeg

    @property
    def witness_k(self) -> int:
        return self.codeg

    @property
    def triple(self) -> tuple[int, int, int] | None:
        if self.omega_plus_1 is None or self.chi_plus_1 is None:
            return None
        return (self.omega_plus_1, self.codeg, self.chi_plus_1)

    @property
    def triple_class(self) -> str | None:
        t = self.triple
        return triple_class(*t) if t else None


def _interior(P: VPolytope, k: int, method: str) -> InteriorResult:
    return interior_lp(P, k, (1,) * P.n) if method == "exact_lp" else interior_facets(P, k, (1,) * P.n)


def codegree_exact(g: Graph, method: str = "exact_lp", guards: Guards = DEFAULT_GUARDS,
                   invariants: InvariantBundle | None = None) -> CodegreeReport:
    if method not in ("exact_lp", "exact_facet"):
        raise ValueError(f"exact codegree method must be exact_lp or exact_facet, not {method!r}")
    check(g.n, guards.codegree_max_n, "codegree_exact")
    inv = invariants or gr.graph_invariants(g, guards.graph_max_n)
    omega, chi = inv.clique_number, inv.chromatic_number
    P = stable_set_polytope(g, guards.graph_max_n)
    if method == "exact_facet":
        P.facets(guards.facet_max_n)

    previous = None
    k = omega + 1
    while True:
        if k > chi + 1:
            raise AssertionError(f"no interior point up to chi+1={chi + 1} for {g.describe()}")
        res = _interior(P, k, method)
        if res.interior:
            break
        previous = res
        k += 1
    blocking = previous if previous is not None else _interior(P, k - 1, method)
    if blocking.interior:
        raise AssertionError(f"all-ones point interior already at k={k - 1} < omega+1")
    return CodegreeReport(g.n, k, method, omega + 1, chi + 1, blocking, res,
                          rule="interior scan from omega+1", label=g.label)


def verify_certificates(g: Graph, report: CodegreeReport) -> list[str]:
    """Independent re-evaluation of both certificates; returns problems found."""
    problems = []
    P = stable_set_polytope(g)
    one = (1,) * g.n
    k = report.codeg
    block = report.blocking_certificate
    if block is None or block.k != k - 1:
        problems.append("missing blocking certificate at codeg-1")
    elif block.blocking_facet is not None:
        f = block.blocking_facet
        if any(f.slack(v) < 0 for v in P.vertices):
            problems.append(f"blocking facet {f} is not valid")
        if f.slack(one, k - 1) > 0:
            problems.append(f"blocking facet {f} does not block at k={k - 1}")
    elif block.blocking_step is not None:
        st = block.blocking_step
        again = direction_step(P, k - 1, one, st.axis, st.sign)
        if again.positive:
            problems.append(f"blocking direction {st.axis},{st.sign} has a positive step")
    else:
        problems.append("blocking certificate carries no evidence")

    inner = report.interior_certificate
    if inner is None or not inner.interior or inner.k != k:
        problems.append("missing interior certificate at codeg")
    elif inner.method == "lp":
        if len(inner.steps) != 2 * g.n:
            problems.append("interior certificate does not cover all 2n directions")
        for st in inner.steps:
            if not (st.positive and verify_step(P, k, one, st)):
                problems.append(f"step {st.axis},{st.sign} does not verify")
    else:
        if any(f.slack(one, k) <= 0 for f in P.facets()):
            problems.append("facet interior certificate fails")
    return problems


# --- matching polytopes -----------------------------------------------------

def _line_invariants(g: Graph, guards: Guards) -> InvariantBundle | None:
    try:
        return gr.graph_invariants(gr.line_graph(g), guards.graph_max_n)
    except GuardError:
        return None


def codegree_matching_formula(g: Graph, with_invariants: bool = True,
                              guards: Guards = DEFAULT_GUARDS) -> CodegreeReport:
    """Codegree of the matching polytope from the maximum degree alone.

    ``max_degree + 2`` when the maximum degree is even and every component
    attaining it is complete, otherwise ``max_degree + 1``.
    """
    if not g.edges:
        raise GraphError("matching polytope of an edgeless graph")
    delta = gr.max_degree(g)
    extremal = [c for c in gr.components(g)
                if max(g.degree(v) for v in c) == delta]
    all_complete = all(
        sum(g.degree(v) for v in c) == len(c) * (len(c) - 1) for c in extremal)
    codeg = delta + 2 if delta % 2 == 0 and all_complete else delta + 1
    inv = _line_invariants(g, guards) if with_invariants else None
    return CodegreeReport(
        g.edge_count, codeg, "matching_formula",
        inv.clique_number + 1 if inv else None,
        inv.chromatic_number + 1 if inv else None,
        rule=f"max degree {delta}" + (", even with complete extremal components" if codeg == delta + 2 else ""),
        label=f"line({g.label})" if g.label else None)


def _edmonds_component(g: Graph, comp: tuple[int, ...]) -> int:
    """Smallest k with the all-ones point strictly inside every degree and odd-set
    inequality of the component's matching polytope, dilated by k."""
    verts = [v - 1 for v in comp]
    adj = g.adj
    degrees = [adj[v].bit_count() for v in verts]
    odd_sets = []
    for size in range(3, len(verts) + 1, 2):
        for U in combinations(verts, size):
            mask = 0
            for v in U:
                mask |= 1 << v
            edges = sum((adj[v] & mask).bit_count() for v in U) // 2
            odd_sets.append((size, edges))
    k = 1
    while True:
        if all(d < k for d in degrees) and all(2 * e < k * (s - 1) for s, e in odd_sets):
            return k
        k += 1


def codegree_matching_edmonds(g: Graph, guards: Guards = DEFAULT_GUARDS,
                              with_invariants: bool = True) -> CodegreeReport:
    if not g.edges:
        raise GraphError("matching polytope of an edgeless graph")
    check(g.n, guards.odd_subset_max_n, "codegree_matching_edmonds")
    values = [_edmonds_component(g, c) for c in gr.components(g) if len(c) > 1]
    inv = _line_invariants(g, guards) if with_invariants else None
    return CodegreeReport(
        g.edge_count, max(values), "matching_edmonds",
        inv.clique_number + 1 if inv else None,
        inv.chromatic_number + 1 if inv else None,
        rule="degree and odd-set inequalities, max over components",
        label=f"line({g.label})" if g.label else None)


# --- h-perfectness ----------------------------------------------------------

@dataclass(frozen=True)
class FacetClass:
    facet: Inequality
    kind: str  # trivial | clique | odd_cycle | other
    witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class HPerfectCertificate:
    verdict: str  # h_perfect | not_h_perfect | inconclusive
    facets: tuple[FacetClass, ...] = ()
    offender: FacetClass | None = None
    reason: str = ""


def hamiltonian_cycle(g: Graph, vertices: tuple[int, ...]) -> tuple[int, ...] | None:
    """A cycle of ``g`` through exactly ``vertices`` (any chords allowed), or None."""
    vs = sorted(vertices)
    m = len(vs)
    if m < 3:
        return None
    idx = {v: i for i, v in enumerate(vs)}
    nbr = [0] * m
    for i, v in enumerate(vs):
        for u in g.neighbors(v):
            if u in idx:
                nbr[i] |= 1 << idx[u]
    full = (1 << m) - 1
    # parent[mask][j]: predecessor on a path from vertex 0 through mask ending at j
    parent: dict[tuple[int, int], int] = {(1, 0): -1}
    layer = {(1, 0)}
    for _ in range(m - 1):
        nxt = set()
        for mask, j in sorted(layer):
            cand = nbr[j] & ~mask
            while cand:
                low = cand & -cand
                t = low.bit_length() - 1
                cand ^= low
                key = (mask | low, t)
                if key not in parent:
                    parent[key] = j
                    nxt.add(key)
        layer = nxt
    for mask, j in sorted(layer):
        if mask == full and nbr[j] & 1:
            seq = []
            state = (mask, j)
            while state[1] != -1:
                seq.append(vs[state[1]])
                p = parent[state]
                state = (state[0] & ~(1 << state[1]), p)
            return tuple(reversed(seq))
    return None


def classify_facet(g: Graph, f: Inequality) -> FacetClass:
    if f.is_trivial:
        return FacetClass(f, "trivial", f.support)
    if all(c in (0, 1) for c in f.coeffs):
        S = f.support
        if f.rhs == 1 and all(g.adjacent(a, b) for a, b in combinations(S, 2)):
            return FacetClass(f, "clique", S)
        if len(S) % 2 == 1 and len(S) >= 3 and 2 * f.rhs == len(S) - 1:
            cyc = hamiltonian_cycle(g, S)
            if cyc is not None:
                return FacetClass(f, "odd_cycle", cyc)
    return FacetClass(f, "other")


def is_h_perfect(g: Graph, guards: Guards = DEFAULT_GUARDS) -> HPerfectCertificate:
    """Decide h-perfectness by classifying every facet of the stable set polytope."""
    if g.n > guards.facet_max_n:
        return HPerfectCertificate("inconclusive", reason=f"n={g.n} exceeds facet budget {guards.facet_max_n}")
    P = stable_set_polytope(g, guards.graph_max_n)
    classes = tuple(classify_facet(g, f) for f in P.facets(guards.facet_max_n))
    offender = next((c for c in classes if c.kind == "other"), None)
    verdict = "not_h_perfect" if offender else "h_perfect"
    return HPerfectCertificate(verdict, classes, offender)


# --- dispatch ---------------------------------------------------------------

def codegree_auto(g: Graph, declared_h_perfect: bool = False,
                  guards: Guards = DEFAULT_GUARDS) -> CodegreeReport:
    """Pick the cheapest justified rule and record it in ``rule``.

    Order: perfect -> h-perfect (declared or verified) -> line graph of a
    known graph -> exact interior scan.
    """
    inv = gr.graph_invariants(g, guards.graph_max_n)
    omega, chi = inv.clique_number, inv.chromatic_number
    perf = gr.is_perfect(g, guards.graph_max_n)
    if perf.perfect:
        return CodegreeReport(g.n, omega + 1, "perfect_formula", omega + 1, chi + 1,
                              rule="perfect: omega+1", label=g.label)
    if declared_h_perfect:
        return CodegreeReport(g.n, omega + 1, "h_perfect_formula", omega + 1, chi + 1,
                              rule="declared h-perfect: omega+1", label=g.label)
    if is_h_perfect(g, guards).verdict == "h_perfect":
        return CodegreeReport(g.n, omega + 1, "h_perfect_formula", omega + 1, chi + 1,
                              rule="verified h-perfect: omega+1", label=g.label)
    if g.line_of is not None:
        rep = codegree_matching_formula(g.line_of, with_invariants=False, guards=guards)
        return CodegreeReport(g.n, rep.codeg, "matching_formula", omega + 1, chi + 1,
                              rule=f"line graph, {rep.rule}", label=g.label)
    return codegree_exact(g, guards=guards, invariants=inv)
