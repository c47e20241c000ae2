"""Exact codegree, Ehrhart and regularity-bound computations for stable set polytopes."""
from .codegree import (CodegreeReport, HPerfectCertificate, codegree_auto, codegree_exact,
                       codegree_matching_edmonds, codegree_matching_formula, is_h_perfect,
                       triple_class, verify_certificates)
from .dsl import DSLError, parse_dsl, parse_edge_list
from .graph import (Graph, GraphError, complement, complete, complete_multipartite, cycle,
                    disjoint_union, empty, enumerate_stable_sets, graph_invariants, induced,
                    is_perfect, join, line_graph, path, random_graph, transform)
from .guards import DEFAULT_GUARDS, GuardError, Guards
from .hnf import hermite_normal_form
from .hull import Inequality, facet_enumeration
from .lp import Constraint, LPResult, lp_solve
from .polytope import (EhrhartData, VPolytope, contains, ehrhart_h_star, interior_contains,
                       is_idp_up_to, lattice_points, lattice_spanning, matching_polytope,
                       stable_set_polytope)
from .regularity import regularity_bounds
from .sweep import triple_search

__version__ = "0.1.0"
