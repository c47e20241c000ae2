"""JSON report assembly.

The JSON document is the machine contract (see ``docs/report-schema.md``);
bump ``SCHEMA_VERSION`` on any field change.  Rationals are written as
``"p/q"`` strings so nothing is rounded.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .codegree import CodegreeReport, FacetClass, HPerfectCertificate
from .graph import Graph, InvariantBundle, PerfectnessCertificate
from .hull import Inequality
from .polytope import DirectionStep, EhrhartData, IDPVerdict, InteriorResult
from .regularity import RegularityReport

SCHEMA_VERSION = "1.0"


def rational(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def graph_echo(g: Graph) -> dict[str, Any]:
    return {"dsl": g.label, "n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def inequality(f: Inequality, kind: str | None = None, witness: tuple[int, ...] = ()) -> dict[str, Any]:
    out: dict[str, Any] = {"coeffs": list(f.coeffs), "rhs": f.rhs}
    if kind is not None:
        out["kind"] = kind
    if witness:
        out["witness"] = list(witness)
    return out


def facet_class(c: FacetClass) -> dict[str, Any]:
    return inequality(c.facet, c.kind, c.witness)


def step(s: DirectionStep, with_weights: bool = True) -> dict[str, Any]:
    out: dict[str, Any] = {"axis": s.axis, "sign": s.sign, "eps": rational(s.eps),
                           "member": s.eps is not None}
    if with_weights and s.weights is not None:
        out["weights"] = [rational(w) for w in s.weights]
    return out


def interior(r: InteriorResult | None) -> dict[str, Any] | None:
    if r is None:
        return None
    return {
        "k": r.k,
        "interior": r.interior,
        "method": r.method,
        "steps": [step(s) for s in r.steps] if r.interior else [],
        "blocking_step": step(r.blocking_step) if r.blocking_step else None,
        "blocking_facet": inequality(r.blocking_facet) if r.blocking_facet else None,
    }


def invariants(inv: InvariantBundle, perf: PerfectnessCertificate) -> dict[str, Any]:
    return {
        "n": inv.n,
        "edge_count": inv.edge_count,
        "max_degree": inv.max_degree,
        "clique_number": inv.clique_number,
        "chromatic_number": inv.chromatic_number,
        "components": [list(c) for c in inv.components],
        "clique_witness": list(inv.clique_witness),
        "coloring_witness": {str(v): c for v, c in sorted(inv.coloring_witness.items())},
        "perfect": perf.perfect,
        "imperfection_witness": {"kind": perf.kind, "vertices": list(perf.witness)} if not perf.perfect else None,
    }


def codegree(rep: CodegreeReport) -> tuple[dict[str, Any], dict[str, Any]]:
    result = {
        "n": rep.n,
        "omega_plus_1": rep.omega_plus_1,
        "codeg": rep.codeg,
        "chi_plus_1": rep.chi_plus_1,
        "degree": rep.degree,
        "method": rep.method,
        "rule": rep.rule,
        "witness_k": rep.witness_k,
        "triple_class": rep.triple_class,
    }
    certs = {
        "blocking": interior(rep.blocking_certificate),
        "interior": interior(rep.interior_certificate),
    }
    return result, certs


def ehrhart(data: EhrhartData) -> dict[str, Any]:
    return {
        "n": data.n,
        "values": list(data.values),
        "coefficients": [rational(c) for c in data.coefficients],
        "h_star": list(data.h_star),
        "degree": data.degree,
        "normalized_volume": data.normalized_volume,
    }


def h_perfect(cert: HPerfectCertificate) -> dict[str, Any]:
    return {
        "verdict": cert.verdict,
        "reason": cert.reason or None,
        "facets": [facet_class(c) for c in cert.facets],
        "offender": facet_class(cert.offender) if cert.offender else None,
    }


def idp(v: IDPVerdict | None) -> dict[str, Any] | None:
    if v is None:
        return None
    return {"passed_up_to_k_max": v.passed, "k_max": v.k_max, "failure_k": v.failure_k,
            "failure_point": list(v.failure_point) if v.failure_point else None}


def regularity(r: RegularityReport) -> dict[str, Any]:
    return {
        "n": r.n, "omega": r.omega, "chi": r.chi, "perfect": r.perfect,
        "codeg": r.codeg, "degree": r.degree, "spanning": r.spanning,
        "lower_bound": r.lower_bound, "degree_lower_bound": r.degree_lower_bound,
        "conditional_upper_bound": r.conditional_upper_bound,
        "upper_bound_status": r.upper_bound_status, "exact": r.exact,
        "idp": idp(r.idp), "notes": list(r.notes),
    }


def envelope(command: str, g: Graph | None, result: Any, certificates: Any = None,
             seconds: float | None = None) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": graph_echo(g) if g is not None else None,
        "result": result,
        "certificates": certificates,
        "timings": {"seconds": round(seconds, 6) if seconds is not None else None},
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
