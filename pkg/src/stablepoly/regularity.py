"""Bounds on the regularity of the toric ring of a stable set polytope.

Only the bounds are produced; the regularity itself needs a Groebner basis
computation of the toric ideal and is not attempted here.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import graph as gr
from .codegree import codegree_auto
from .graph import Graph
from .guards import DEFAULT_GUARDS, GuardError, Guards
from .polytope import IDPVerdict, is_idp_up_to, lattice_spanning, stable_set_polytope


@dataclass(frozen=True)
class RegularityReport:
    n: int
    omega: int
    chi: int
    perfect: bool
    codeg: int
    degree: int
    spanning: bool
    lower_bound: int  # n - chi, always valid
    degree_lower_bound: int | None  # deg P, valid when spanning
    conditional_upper_bound: int  # n - omega, valid when the toric ring is normal
    upper_bound_status: str  # proven | unproven
    exact: int | None
    idp: IDPVerdict | None
    notes: tuple[str, ...] = field(default=())


def regularity_bounds(g: Graph, k_max: int = 3, guards: Guards = DEFAULT_GUARDS) -> RegularityReport:
    inv = gr.graph_invariants(g, guards.graph_max_n)
    n, omega, chi = g.n, inv.clique_number, inv.chromatic_number
    perfect = gr.is_perfect(g, guards.graph_max_n).perfect
    cd = codegree_auto(g, guards=guards)
    P = stable_set_polytope(g, guards.graph_max_n)
    spanning = lattice_spanning(P, guards)
    notes = []

    idp = None
    try:
        idp = is_idp_up_to(P, k_max, max_n=guards.ehrhart_max_n, guards=guards)
    except GuardError as exc:
        notes.append(f"IDP check skipped: {exc}")

    if perfect:
        status = "proven"
        exact = n - chi
        notes.append("perfect: the polytope is compressed, hence IDP; reg = deg P = n - chi = n - omega")
    else:
        status = "unproven"
        exact = None
        if idp is not None and not idp.passed:
            notes.append(f"not IDP (fails at k={idp.failure_k}): upper bound n - omega does not apply")
        else:
            notes.append("normality not established; n - omega is conditional")
    if spanning:
        notes.append("spanning: reg >= deg P")
    return RegularityReport(
        n=n, omega=omega, chi=chi, perfect=perfect, codeg=cd.codeg, degree=cd.degree,
        spanning=spanning, lower_bound=n - chi,
        degree_lower_bound=cd.degree if spanning else None,
        conditional_upper_bound=n - omega, upper_bound_status=status, exact=exact,
        idp=idp, notes=tuple(notes))
