from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from stablepoly import graph as gr
from stablepoly.guards import Guards
from stablepoly.polytope import (VPolytope, contains, contains_facets, contains_lp, count_lattice_points,
                                 ehrhart_h_star, enumerate_matchings, h_star_from_values, interior_contains,
                                 interior_facets, interior_lp, interpolate, is_idp_up_to, lattice_points,
                                 lattice_spanning, matching_polytope, stable_set_polytope, verify_step)

from strategies import graphs

SQUARE = VPolytope([(0, 0), (1, 0), (0, 1), (1, 1)], 2, "square")


def brute_points(P: VPolytope, k: int, strict: bool = False) -> list[tuple[int, ...]]:
    """Box scan filtered by the facet description."""
    fs = P.facets()
    lo_hi = [P.coordinate_range(i) for i in range(P.n)]
    out = []
    for x in product(*(range(k * a, k * b + 1) for a, b in lo_hi)):
        if all((f.slack(x, k) > 0) if strict else (f.slack(x, k) >= 0) for f in fs):
            out.append(x)
    return out


def brute_matchings(g: gr.Graph) -> list[tuple]:
    es = g.sorted_edges
    out = []
    for mask in range(1 << len(es)):
        chosen = [e for b, e in enumerate(es) if mask >> b & 1]
        ends = [v for e in chosen for v in e]
        if len(ends) == len(set(ends)):
            out.append(tuple(chosen))
    return out


# --- constructors -----------------------------------------------------------

def test_stable_set_polytope_sizes():
    assert stable_set_polytope(gr.complete(3)).vertices == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert len(stable_set_polytope(gr.cycle(5)).vertices) == 11
    big = stable_set_polytope(gr.join(gr.cycle(5), gr.line_graph(gr.complete(5))))
    assert (len(big.vertices), big.n) == (11 + 26 - 1, 15)


def test_matching_polytope_sizes():
    assert len(matching_polytope(gr.complete(3)).vertices) == 4
    # path with 3 edges: empty, 3 single edges, and the outer pair {12, 34}
    assert len(matching_polytope(gr.path(4)).vertices) == 5 == len(brute_matchings(gr.path(4)))
    K5 = matching_polytope(gr.complete(5))
    assert (len(K5.vertices), K5.n) == (26, 10)


@given(graphs(n_max=6))
def test_matchings_are_line_graph_stable_sets(g):
    if not g.edges:
        return
    assert set(matching_polytope(g).vertices) == set(stable_set_polytope(gr.line_graph(g)).vertices)
    assert len(enumerate_matchings(g)) == len(brute_matchings(g))
    for m in enumerate_matchings(g):
        ends = [v for i in m for v in g.sorted_edges[i - 1]]
        assert len(ends) == len(set(ends))


# --- membership -------------------------------------------------------------

def test_membership_examples():
    c5 = stable_set_polytope(gr.cycle(5))
    k3 = stable_set_polytope(gr.complete(3))
    # (1,...,1) has coordinate sum 5, above the odd-cycle bound 4 of 2 P_C5
    assert not contains(c5, 2, (1,) * 5)
    assert contains(c5, 2, (1, 1, 1, 1, 0))
    assert contains(c5, 3, (1,) * 5)
    assert not contains(k3, 1, (1, 1, 0))
    for P in (c5, k3, SQUARE):
        for k in (0, 1, 3):
            assert contains(P, k, (0,) * P.n)


def test_interior_examples():
    c5 = stable_set_polytope(gr.cycle(5))
    yes = interior_contains(c5, 3, (1,) * 5)
    assert yes.interior and len(yes.steps) == 10 and all(s.positive for s in yes.steps)
    assert all(verify_step(c5, 3, (1,) * 5, s) for s in yes.steps)
    no = interior_facets(c5, 2, (1,) * 5)
    assert not no.interior and no.blocking_facet.slack((1,) * 5, 2) <= 0
    assert not interior_lp(c5, 2, (1,) * 5).interior
    assert interior_contains(SQUARE, 2, (1, 1)).interior
    assert not interior_contains(SQUARE, 2, (0, 1)).interior


@given(graphs(n_max=5), st.integers(0, 4), st.data())
def test_membership_paths_agree(g, k, data):
    P = stable_set_polytope(g)
    x = data.draw(st.tuples(*[st.integers(0, max(k, 1))] * g.n))
    assert contains_lp(P, k, x) == contains_facets(P, k, x)
    a, b = interior_lp(P, k, x), interior_facets(P, k, x)
    assert a.interior == b.interior
    if a.interior:
        assert interior_lp(P, k + 1, x).interior


# --- lattice points ---------------------------------------------------------

def test_lattice_point_examples():
    k2 = stable_set_polytope(gr.complete(2))
    assert sorted(lattice_points(k2, 2)) == sorted((a, b) for a in range(3) for b in range(3) if a + b <= 2)
    c5 = stable_set_polytope(gr.cycle(5))
    assert sorted(lattice_points(c5, 1)) == sorted(c5.vertices)
    assert count_lattice_points(stable_set_polytope(gr.complete(3)), 3) == comb(6, 3)


@given(graphs(n_max=5), st.integers(0, 3), st.booleans())
def test_lattice_points_match_box_scan(g, k, strict):
    P = stable_set_polytope(g)
    ours = sorted(count_lattice_points(P, k, strict) for _ in [0])
    expected = len(brute_points(P, k, strict)) if k else (0 if strict else 1)
    assert ours == [expected]


def test_lp_fallback_matches_facets():
    # no facet cache and a zero facet budget forces the LP scan
    g = gr.cycle(5)
    tight = Guards(facet_max_n=1)
    for k in (1, 2, 3):
        for strict in (False, True):
            fresh = stable_set_polytope(g)
            assert count_lattice_points(fresh, k, strict, tight) == len(brute_points(stable_set_polytope(g), k, strict))


# --- Ehrhart ----------------------------------------------------------------

def test_interpolate_recovers_polynomial():
    values = [3 * t ** 3 - t + 7 for t in range(4)]
    assert interpolate(values) == [7, -1, 0, 3]


def test_unit_square():
    data = ehrhart_h_star(SQUARE)
    assert data.values == tuple((k + 1) ** 2 for k in range(3))
    assert data.h_star == (1, 1, 0) and data.degree == 1


def test_unimodular_triangle():
    data = ehrhart_h_star(stable_set_polytope(gr.complete(2)))
    assert data.values == tuple(comb(k + 2, 2) for k in range(3))
    assert data.h_star == (1, 0, 0) and data.degree == 0


def test_c5_h_star():
    data = ehrhart_h_star(stable_set_polytope(gr.cycle(5)))
    assert data.degree == 3
    assert data.values[1] == 11


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cube_h_star_is_eulerian(n):
    # unit cube: h*_j are the Eulerian numbers A(n, j)
    def eulerian(n, j):
        return sum((-1) ** i * comb(n + 1, i) * (j + 1 - i) ** n for i in range(j + 2))
    data = ehrhart_h_star(stable_set_polytope(gr.empty(n)))
    assert data.h_star == tuple(eulerian(n, j) for j in range(n)) + (0,)


@given(graphs(n_max=5))
def test_reciprocity(g):
    P = stable_set_polytope(g)
    data = ehrhart_h_star(P)
    for k in range(1, g.n + 1):
        assert count_lattice_points(P, k, strict=True) == (-1) ** g.n * data.evaluate(-k)


def test_h_star_inverse():
    values = [1, 11, 46]  # arbitrary
    h = h_star_from_values(values)
    assert sum(hj * comb(2 - j + 2, 2) for j, hj in enumerate(h)) == 46


# --- spanning and IDP -------------------------------------------------------

@given(graphs(n_max=7))
def test_stable_set_polytopes_span(g):
    assert lattice_spanning(stable_set_polytope(g))


def test_spanning_examples():
    # the midpoint 1 is a lattice point of conv{0, 2}, so the segment spans Z
    assert lattice_spanning(VPolytope([(0,), (2,)], 1))
    # empty simplex of determinant 2: its only lattice points are the vertices
    assert not lattice_spanning(VPolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)], 3))
    assert lattice_spanning(SQUARE)


def test_idp_examples():
    assert is_idp_up_to(stable_set_polytope(gr.complete(3)), 3).passed
    assert is_idp_up_to(SQUARE, 4).passed
    assert is_idp_up_to(VPolytope([(0, 0), (1, 0), (0, 1), (1, 1)], 2), 2).passed


def test_idp_failure_for_non_normal_simplex():
    # conv{0, e1, e2, (1,1,2)} has the interior-ish point (1,1,1) in 2P with no decomposition
    P = VPolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)], 3)
    v = is_idp_up_to(P, 2)
    assert not v.passed and v.failure_k == 2 and v.failure_point == (1, 1, 1)


def test_idp_failure_two_c5_antijoin():
    g = gr.complement(gr.disjoint_union(gr.cycle(5), gr.cycle(5)))
    P = stable_set_polytope(g)
    guards = Guards(ehrhart_max_n=10)
    v = is_idp_up_to(P, 5, max_n=10, guards=guards)
    assert not v.passed and v.failure_k == 5
    x = v.failure_point
    assert contains_lp(P, 5, x)
    # a sum of 5 stable sets covering x exactly would partition x's support into 5 stable sets
    assert x == (1,) * 10 and gr.graph_invariants(g).chromatic_number > 5
    assert is_idp_up_to(P, 4, max_n=10, guards=guards).passed


def test_dilation_validation():
    with pytest.raises(ValueError):
        count_lattice_points(SQUARE, -1)
    with pytest.raises(ValueError):
        is_idp_up_to(SQUARE, 1)
