"""Reference graphs with known codegree data, run by ``paper-examples``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from . import graph as gr
from .codegree import codegree_exact, is_h_perfect
from .dsl import parse_dsl
from .guards import Guards
from .polytope import ehrhart_h_star, is_idp_up_to, stable_set_polytope


@dataclass(frozen=True)
class FixtureCheck:
    fixture: str
    quantity: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


# room for the 15-vertex join and the 10-vertex IDP search
FIXTURE_GUARDS = Guards(ehrhart_max_n=10)


def _codegree_checks(expr: str, expected: dict[str, Any]) -> Iterator[FixtureCheck]:
    g = parse_dsl(expr)
    rep = codegree_exact(g, guards=FIXTURE_GUARDS)
    actual = {"n": g.n, "omega": rep.omega_plus_1 - 1, "chi": rep.chi_plus_1 - 1,
              "codeg": rep.codeg, "degree": rep.degree, "class": rep.triple_class}
    for key, value in expected.items():
        yield FixtureCheck(expr, key, value, actual[key])


def reference_checks() -> list[FixtureCheck]:
    checks: list[FixtureCheck] = []
    checks += _codegree_checks("cycle(5)", {"omega": 2, "chi": 3, "codeg": 3, "degree": 3, "class": "iii"})
    c5 = stable_set_polytope(gr.cycle(5))
    checks.append(FixtureCheck("cycle(5)", "h* degree", 3, ehrhart_h_star(c5).degree))
    checks += _codegree_checks("line(complete(5))", {"omega": 4, "chi": 5, "codeg": 6, "class": "ii"})
    checks += _codegree_checks("join(cycle(5),line(complete(5)))",
                               {"n": 15, "omega": 6, "chi": 8, "codeg": 8, "degree": 8, "class": "iv"})
    checks += _codegree_checks("join(cycle(5),cycle(5))",
                               {"omega": 4, "chi": 6, "codeg": 6, "degree": 5, "class": "iv"})

    # join additivity: holds for C5 + L(K5), fails for C5 + C5
    c5r = codegree_exact(gr.cycle(5))
    lk5 = codegree_exact(parse_dsl("line(complete(5))"))
    big = codegree_exact(parse_dsl("join(cycle(5),line(complete(5)))"))
    jj = codegree_exact(parse_dsl("join(cycle(5),cycle(5))"))
    checks.append(FixtureCheck("join(C5,L(K5))", "degree additive", True, big.degree == c5r.degree + lk5.degree))
    checks.append(FixtureCheck("join(C5,L(K5))", "codeg = sum - 1", True, big.codeg == c5r.codeg + lk5.codeg - 1))
    checks.append(FixtureCheck("join(C5,C5)", "degree additive", False, jj.degree == 2 * c5r.degree))
    checks.append(FixtureCheck("join(C5,C5)", "codeg = sum - 1", False, jj.codeg == 2 * c5r.codeg - 1))

    for k in range(1, 7):
        checks += _codegree_checks(f"complete({k})", {"codeg": k + 1, "class": "i"})

    for k in (5, 7, 9):
        g = gr.cycle(k)
        checks.append(FixtureCheck(f"cycle({k})", "h-perfect", "h_perfect", is_h_perfect(g).verdict))
        checks.append(FixtureCheck(f"cycle({k})", "codeg", 3, codegree_exact(g).codeg))

    anti = parse_dsl("complement(union(cycle(5),cycle(5)))")
    inv = gr.graph_invariants(anti)
    checks.append(FixtureCheck(anti.label, "n - omega", 6, anti.n - inv.clique_number))
    verdict = is_idp_up_to(stable_set_polytope(anti), 5, max_n=anti.n, guards=FIXTURE_GUARDS)
    checks.append(FixtureCheck(anti.label, "IDP up to k=5", False, verdict.passed))
    return checks
