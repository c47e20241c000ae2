"""Stable set and matching polytopes, membership and interior tests, lattice
point counting, Ehrhart data, spanning and bounded IDP checks.

Dilation is implicit: ``kP`` is never materialized, vertices are scaled by
``k`` inside the LP encodings and right-hand sides are scaled inside facet
evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterator, Sequence

from . import graph as gr
from .graph import Graph, GraphError
from .guards import DEFAULT_GUARDS, GuardError, check
from .hnf import hermite_normal_form
from .hull import Inequality, facet_enumeration
from .lp import Constraint, lp_solve

Point = tuple[int, ...]


class PolytopeError(ValueError):
    pass


class VPolytope:
    """A full-dimensional lattice polytope given by its vertices.

    The facet list is a write-once cache filled on first request.
    """

    def __init__(self, vertices: Sequence[Sequence[int]], n: int, source: str = "",
                 facets: Sequence[Inequality] | None = None):
        self.n = n
        self.vertices: tuple[Point, ...] = tuple(sorted({tuple(map(int, v)) for v in vertices}))
        for v in self.vertices:
            if len(v) != n:
                raise PolytopeError(f"vertex {v} has dimension {len(v)}, expected {n}")
        self.source = source
        self._facets: tuple[Inequality, ...] | None = tuple(facets) if facets is not None else None

    def __repr__(self) -> str:
        return f"VPolytope(n={self.n}, vertices={len(self.vertices)}, source={self.source!r})"

    @property
    def has_facets(self) -> bool:
        return self._facets is not None

    def facets(self, max_n: int = DEFAULT_GUARDS.facet_max_n) -> tuple[Inequality, ...]:
        if self._facets is None:
            self._facets = tuple(facet_enumeration(self.vertices, self.n, max_n=max_n))
        return self._facets

    def try_facets(self, max_n: int = DEFAULT_GUARDS.facet_max_n) -> tuple[Inequality, ...] | None:
        try:
            return self.facets(max_n)
        except GuardError:
            return None

    @property
    def is_01(self) -> bool:
        return all(c in (0, 1) for v in self.vertices for c in v)

    def coordinate_range(self, i: int) -> tuple[int, int]:
        col = [v[i] for v in self.vertices]
        return min(col), max(col)


def stable_set_polytope(g: Graph, max_n: int = DEFAULT_GUARDS.graph_max_n) -> VPolytope:
    """Every stable-set indicator vector is a vertex (0/1 points of a 0/1 polytope)."""
    sets = gr.enumerate_stable_sets(g, max_n=max_n)
    return VPolytope([gr.indicator(g.n, s) for s in sets], g.n, source=f"stable:{g.describe()}")


def enumerate_matchings(g: Graph) -> list[tuple[int, ...]]:
    """Matchings as tuples of 1-based edge indices into ``g.sorted_edges``."""
    order = g.sorted_edges
    out: list[tuple[int, ...]] = []

    def rec(i: int, used: int, chosen: list[int]) -> None:
        if i == len(order):
            out.append(tuple(chosen))
            return
        rec(i + 1, used, chosen)
        a, b = order[i]
        mask = (1 << a) | (1 << b)
        if not used & mask:
            chosen.append(i + 1)
            rec(i + 1, used | mask, chosen)
            chosen.pop()

    rec(0, 0, [])
    return out


def matching_polytope(g: Graph) -> VPolytope:
    """Coordinates follow ``g.sorted_edges``, the same order as ``line_graph``."""
    if not g.edges:
        raise GraphError("matching polytope of an edgeless graph has dimension 0")
    m = g.edge_count
    verts = [gr.indicator(m, mt) for mt in enumerate_matchings(g)]
    return VPolytope(verts, m, source=f"matching:{g.describe()}")


def _check_dim(P: VPolytope, x: Sequence[int]) -> None:
    if len(x) != P.n:
        raise PolytopeError(f"point has dimension {len(x)}, polytope has {P.n}")


# --- membership -------------------------------------------------------------

def _hull_constraints(P: VPolytope, k: int, x: Sequence[int], extra: int = 0) -> list[Constraint]:
    """``(kV) lam = x, sum lam = 1`` with ``extra`` trailing zero columns."""
    m = len(P.vertices)
    rows = [Constraint([1] * m + [0] * extra, "==", 1)]
    for i in range(P.n):
        rows.append(Constraint([k * v[i] for v in P.vertices] + [0] * extra, "==", x[i]))
    return rows


def contains_lp(P: VPolytope, k: int, x: Sequence[int]) -> bool:
    _check_dim(P, x)
    cons = _hull_constraints(P, k, x)
    return lp_solve([0] * len(P.vertices), cons).optimal


def contains_facets(P: VPolytope, k: int, x: Sequence[int]) -> bool:
    _check_dim(P, x)
    return all(f.slack(x, k) >= 0 for f in P.facets())


def contains(P: VPolytope, k: int, x: Sequence[int], method: str = "auto") -> bool:
    """Is ``x`` in ``kP``?  ``method`` is lp | facet | auto (facet when cached)."""
    if method == "auto":
        method = "facet" if P.has_facets else "lp"
    if method == "lp":
        return contains_lp(P, k, x)
    if method == "facet":
        return contains_facets(P, k, x)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class DirectionStep:
    """Largest ``eps`` with ``x + eps * sign * e_axis`` in ``kP``.

    ``eps`` is None when ``x`` itself is not in ``kP``.  ``weights`` is the
    convex combination of the scaled vertices that realizes the step.
    """

    axis: int  # 1-based
    sign: int
    eps: Fraction | None
    weights: tuple[Fraction, ...] | None = field(default=None, repr=False)

    @property
    def positive(self) -> bool:
        return self.eps is not None and self.eps > 0


@dataclass(frozen=True)
class InteriorResult:
    interior: bool
    k: int
    point: Point
    method: str
    steps: tuple[DirectionStep, ...] = ()
    blocking_step: DirectionStep | None = None
    blocking_facet: Inequality | None = None

    def __bool__(self) -> bool:
        return self.interior


def direction_step(P: VPolytope, k: int, x: Sequence[int], axis: int, sign: int) -> DirectionStep:
    m = len(P.vertices)
    cons = _hull_constraints(P, k, x, extra=1)
    row = list(cons[axis].coeffs)
    row[-1] = -sign
    cons[axis] = Constraint(row, "==", x[axis - 1])
    res = lp_solve([0] * m + [1], cons)
    if not res.optimal:
        return DirectionStep(axis, sign, None)
    return DirectionStep(axis, sign, res.optimum, res.witness[:m])


def interior_lp(P: VPolytope, k: int, x: Sequence[int], exhaustive: bool = False) -> InteriorResult:
    """Interior iff all ``2n`` axis steps are positive.

    Stops at the first non-positive step unless ``exhaustive``.
    """
    _check_dim(P, x)
    steps = []
    blocking = None
    for axis in range(1, P.n + 1):
        for sign in (1, -1):
            st = direction_step(P, k, x, axis, sign)
            steps.append(st)
            if not st.positive and blocking is None:
                blocking = st
                if st.eps is None or not exhaustive:
                    return InteriorResult(False, k, tuple(x), "lp", tuple(steps), blocking_step=st)
    return InteriorResult(blocking is None, k, tuple(x), "lp", tuple(steps), blocking_step=blocking)


def interior_facets(P: VPolytope, k: int, x: Sequence[int]) -> InteriorResult:
    _check_dim(P, x)
    for f in P.facets():
        if f.slack(x, k) <= 0:
            return InteriorResult(False, k, tuple(x), "facet", blocking_facet=f)
    return InteriorResult(True, k, tuple(x), "facet")


def interior_contains(P: VPolytope, k: int, x: Sequence[int], method: str = "lp") -> InteriorResult:
    """Is ``x`` in the interior of ``kP``?  ``method`` is lp | facet | auto."""
    if method == "auto":
        method = "facet" if P.has_facets else "lp"
    if method == "lp":
        return interior_lp(P, k, x)
    if method == "facet":
        return interior_facets(P, k, x)
    raise ValueError(f"unknown method {method!r}")


def verify_step(P: VPolytope, k: int, x: Sequence[int], step: DirectionStep) -> bool:
    """Re-check a positive step from its weights alone."""
    if step.weights is None or step.eps is None:
        return False
    w = step.weights
    if any(v < 0 for v in w) or sum(w) != 1 or len(w) != len(P.vertices):
        return False
    target = [Fraction(c) for c in x]
    target[step.axis - 1] += step.sign * step.eps
    for i in range(P.n):
        if sum(k * v[i] * wt for v, wt in zip(P.vertices, w) if wt) != target[i]:
            return False
    return True


# --- lattice points ---------------------------------------------------------

def _iter_by_facets(P: VPolytope, facets: Sequence[Inequality], k: int, strict: bool) -> Iterator[Point]:
    n = P.n
    lo = [k * P.coordinate_range(i)[0] for i in range(n)]
    hi = [k * P.coordinate_range(i)[1] for i in range(n)]
    A = [f.coeffs for f in facets]
    rhs = [k * f.rhs - (1 if strict else 0) for f in facets]
    nf = len(A)
    # suffix[f][t] = min of sum_{j >= t} a_j x_j over the box
    suffix = []
    for a in A:
        s = [0] * (n + 1)
        for t in range(n - 1, -1, -1):
            s[t] = s[t + 1] + min(a[t] * lo[t], a[t] * hi[t])
        suffix.append(s)
    touching = [[(fi, A[fi][t]) for fi in range(nf) if A[fi][t]] for t in range(n)]
    partial = [0] * nf
    x = [0] * n

    def rec(t: int) -> Iterator[Point]:
        if t == n:
            yield tuple(x)
            return
        L, U = lo[t], hi[t]
        for fi, a in touching[t]:
            room = rhs[fi] - partial[fi] - suffix[fi][t + 1]
            if a > 0:
                U = min(U, room // a)
            else:
                L = max(L, -(room // -a))
            if L > U:
                return
        for v in range(L, U + 1):
            x[t] = v
            for fi, a in touching[t]:
                partial[fi] += a * v
            yield from rec(t + 1)
            for fi, a in touching[t]:
                partial[fi] -= a * v

    yield from rec(0)


def iter_lattice_points(P: VPolytope, k: int, strict: bool = False,
                        guards=DEFAULT_GUARDS) -> Iterator[Point]:
    """Lattice points of ``kP`` (interior only when ``strict``), lexicographic."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        if not strict:
            yield (0,) * P.n
        return
    facets = P.try_facets(guards.facet_max_n)
    if facets is not None:
        yield from _iter_by_facets(P, facets, k, strict)
        return
    check(P.n, guards.lp_lattice_max_n, "lattice points without facets")
    ranges = [range(k * a, k * b + 1) for a, b in map(P.coordinate_range, range(P.n))]
    for x in product(*ranges):
        if strict:
            if interior_lp(P, k, x).interior:
                yield x
        elif contains_lp(P, k, x):
            yield x


def lattice_points(P: VPolytope, k: int, max_n: int = DEFAULT_GUARDS.ehrhart_max_n,
                   guards=DEFAULT_GUARDS) -> list[Point]:
    check(P.n, max_n, "lattice_points")
    return list(iter_lattice_points(P, k, guards=guards))


def count_lattice_points(P: VPolytope, k: int, strict: bool = False, guards=DEFAULT_GUARDS) -> int:
    return sum(1 for _ in iter_lattice_points(P, k, strict, guards))


# --- Ehrhart ----------------------------------------------------------------

def _poly_mul_linear(poly: list[Fraction], root: int) -> list[Fraction]:
    """poly * (t - root), coefficients by increasing power."""
    out = [Fraction(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] += c
        out[i] -= root * c
    return out


def interpolate(values: Sequence[int]) -> list[Fraction]:
    """Coefficients (increasing power) of the polynomial through ``(i, values[i])``."""
    n = len(values) - 1
    coeffs = [Fraction(0)] * (n + 1)
    for i, yi in enumerate(values):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n + 1):
            if j != i:
                basis = _poly_mul_linear(basis, j)
                denom *= i - j
        for p, c in enumerate(basis):
            coeffs[p] += Fraction(yi) * c / denom
    return coeffs


def h_star_from_values(values: Sequence[int]) -> list[int]:
    """Ehrhart series numerator from ``L(0..n)``."""
    n = len(values) - 1
    return [sum((-1) ** (j - i) * comb(n + 1, j - i) * values[i] for i in range(j + 1))
            for j in range(n + 1)]


@dataclass(frozen=True)
class EhrhartData:
    n: int
    values: tuple[int, ...]
    coefficients: tuple[Fraction, ...]
    h_star: tuple[int, ...]

    @property
    def degree(self) -> int:
        return max(i for i, h in enumerate(self.h_star) if h != 0)

    @property
    def normalized_volume(self) -> int:
        return sum(self.h_star)

    def evaluate(self, t: int) -> Fraction:
        return sum((c * t ** p for p, c in enumerate(self.coefficients)), Fraction(0))

    def series_value(self, k: int) -> int:
        """Coefficient of ``z^k`` in ``h*(z) / (1-z)^(n+1)``."""
        return sum(h * comb(k - j + self.n, self.n) for j, h in enumerate(self.h_star) if j <= k)


def ehrhart_h_star(P: VPolytope, max_n: int = DEFAULT_GUARDS.ehrhart_max_n,
                   guards=DEFAULT_GUARDS) -> EhrhartData:
    check(P.n, max_n, "ehrhart_h_star")
    values = tuple(count_lattice_points(P, k, guards=guards) for k in range(P.n + 1))
    data = EhrhartData(P.n, values, tuple(interpolate(values)), tuple(h_star_from_values(values)))
    for k, v in enumerate(values):
        if data.series_value(k) != v or data.evaluate(k) != v:
            raise AssertionError(f"Ehrhart series mismatch at k={k}")
    return data


# --- spanning and IDP -------------------------------------------------------

def polytope_lattice_points(P: VPolytope, guards=DEFAULT_GUARDS) -> list[Point]:
    """Lattice points of ``P`` itself; for 0/1 polytopes these are the vertices."""
    if P.is_01:
        return list(P.vertices)
    return list(iter_lattice_points(P, 1, guards=guards))


def lattice_spanning(P: VPolytope, guards=DEFAULT_GUARDS) -> bool:
    pts = polytope_lattice_points(P, guards)
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if not diffs:
        return P.n == 0
    res = hermite_normal_form(diffs)
    return res.rank == P.n and res.lattice_index() == 1


@dataclass(frozen=True)
class IDPVerdict:
    """Bounded check only: ``passed`` never certifies full IDP."""

    passed: bool
    k_max: int
    failure_k: int | None = None
    failure_point: Point | None = None


def is_idp_up_to(P: VPolytope, k_max: int, max_n: int = DEFAULT_GUARDS.ehrhart_max_n,
                 guards=DEFAULT_GUARDS) -> IDPVerdict:
    """First ``(k, x)`` with ``x`` in ``kP`` not a sum of ``k`` lattice points of ``P``."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    check(P.n, max_n, "is_idp_up_to")
    facets = P.facets(guards.facet_max_n)
    base = polytope_lattice_points(P, guards)
    base_set = set(base)
    order = sorted(base, key=lambda p: (-sum(p), p))
    memo: dict[tuple[Point, int], bool] = {}

    def in_dilate(y: Sequence[int], k: int) -> bool:
        return all(f.slack(y, k) >= 0 for f in facets)

    def decomposes(x: Point, k: int) -> bool:
        if k == 1:
            return x in base_set
        key = (x, k)
        if key in memo:
            return memo[key]
        ok = False
        for p in order:
            rest = tuple(a - b for a, b in zip(x, p))
            if in_dilate(rest, k - 1) and decomposes(rest, k - 1):
                ok = True
                break
        memo[key] = ok
        return ok

    for k in range(2, k_max + 1):
        for x in _iter_by_facets(P, facets, k, strict=False):
            if not decomposes(x, k):
                return IDPVerdict(False, k_max, k, x)
    return IDPVerdict(True, k_max)
