"""Exact two-phase simplex over the rationals.

The tableau is kept integral with fraction-free (integer-preserving)
pivoting: every entry is ``T[i][j] / d`` for a common positive denominator
``d``, and a pivot on ``(r, c)`` replaces ``T[i][j]`` by
``(T[i][j] * T[r][c] - T[i][c] * T[r][j]) // d``, which is always exact.
Bland's rule picks entering and leaving variables, so the pivot sequence is
deterministic and cannot cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

Number = int | Fraction


class Constraint(NamedTuple):
    """``coeffs . x  sense  rhs`` with ``sense`` one of ``<=``, ``>=``, ``==``."""

    coeffs: Sequence[Number]
    sense: str
    rhs: Number


@dataclass(frozen=True)
class LPResult:
    status: str  # optimal | infeasible | unbounded
    optimum: Fraction | None = None
    witness: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class LPError(ValueError):
    pass


def _integral_row(values: Sequence[Number]) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns (row, positive scale)."""
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return [int(v * den) for v in values], den


class _Tableau:
    """Rows ``0..m-1`` are constraints, row ``m`` is the objective.

    Column ``ncols`` (last) is the right-hand side.  ``basis[i]`` is the
    basic column of row ``i``.
    """

    def __init__(self, rows: list[list[int]], basis: list[int]):
        self.T = rows
        self.basis = basis
        self.d = 1

    @property
    def m(self) -> int:
        return len(self.T) - 1

    def pivot(self, r: int, c: int) -> None:
        T, d = self.T, self.d
        prow = T[r]
        p = prow[c]
        nz = [j for j, v in enumerate(prow) if v]
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[c]
            if f:
                new = [v * p for v in row]
                for j in nz:
                    new[j] -= f * prow[j]
                T[i] = [v // d for v in new]
            elif d != p:
                T[i] = [v * p // d for v in row]
        self.d = p
        self.basis[r] = c
        if p < 0:
            self.T = [[-v for v in row] for row in T]
            self.d = -p

    def run(self, allowed: int) -> str:
        """Maximize; columns ``>= allowed`` never enter.  Returns optimal|unbounded."""
        while True:
            T = self.T
            obj = T[-1]
            c = next((j for j in range(allowed) if obj[j] < 0), None)
            if c is None:
                return "optimal"
            best = None
            for i in range(self.m):
                a = T[i][c]
                if a > 0:
                    key = (T[i][-1], a)
                    if best is None:
                        best = (i, key)
                        continue
                    bi, (bn, ba) = best
                    lhs, rhs = key[0] * ba, bn * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[bi]):
                        best = (i, key)
            if best is None:
                return "unbounded"
            self.pivot(best[0], c)


def lp_solve(objective: Sequence[Number], constraints: Sequence[Constraint],
             free: Sequence[int] = (), max_size: int | None = None) -> LPResult:
    """Maximize ``objective . x`` subject to ``constraints``.

    Variables are nonnegative except those listed in ``free``.  The returned
    witness is checked against every constraint before returning.
    """
    nvar = len(objective)
    for con in constraints:
        if len(con.coeffs) != nvar:
            raise LPError(f"constraint has {len(con.coeffs)} coefficients, objective has {nvar}")
        if con.sense not in ("<=", ">=", "=="):
            raise LPError(f"unknown constraint sense {con.sense!r}")
    if max_size is not None and nvar * max(1, len(constraints)) > max_size:
        raise LPError(f"LP with {nvar} variables and {len(constraints)} rows exceeds size limit")

    free_set = sorted(set(free))
    # x_j = x_j^+ - x_j^-: the minus parts are appended after the originals
    neg_col = {j: nvar + k for k, j in enumerate(free_set)}
    ncore = nvar + len(free_set)

    rows: list[list[int]] = []
    senses: list[str] = []
    for con in constraints:
        vals = list(con.coeffs) + [-con.coeffs[j] for j in free_set] + [con.rhs]
        ints, _ = _integral_row(vals)
        if ints[-1] < 0:
            ints = [-v for v in ints]
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[con.sense]
        else:
            sense = con.sense
        rows.append(ints)
        senses.append(sense)

    m = len(rows)
    nslack = sum(1 for s in senses if s != "==")
    nart = sum(1 for s in senses if s != "<=")
    ncols = ncore + nslack + nart
    art_start = ncore + nslack

    T: list[list[int]] = []
    basis: list[int] = []
    si, ai = ncore, art_start
    for ints, sense in zip(rows, senses):
        row = ints[:-1] + [0] * (nslack + nart) + [ints[-1]]
        if sense == "<=":
            row[si] = 1
            basis.append(si)
            si += 1
        else:
            if sense == ">=":
                row[si] = -1
                si += 1
            row[ai] = 1
            basis.append(ai)
            ai += 1
        T.append(row)

    # phase 1: maximize -(sum of artificials)
    obj1 = [0] * (ncols + 1)
    for i, row in enumerate(T):
        if basis[i] >= art_start:
            for j in range(ncols + 1):
                if j < art_start or j == ncols:
                    obj1[j] -= row[j]
    T.append(obj1)
    tab = _Tableau(T, basis)
    tab.run(art_start)
    if tab.T[-1][-1] != 0:
        return LPResult("infeasible")

    # drive artificials out of the basis; drop redundant rows
    r = 0
    while r < tab.m:
        if tab.basis[r] >= art_start:
            c = next((j for j in range(art_start) if tab.T[r][j] != 0), None)
            if c is None:
                del tab.T[r]
                del tab.basis[r]
                continue
            tab.pivot(r, c)
        r += 1
    tab.T = [row[:art_start] + [row[-1]] for row in tab.T]

    # phase 2 objective row: z_j = c_B B^-1 A_j - c_j, scaled by d
    cvals = list(objective) + [-objective[j] for j in free_set] + [0] * nslack
    cint, cscale = _integral_row(cvals)
    d = tab.d
    obj2 = [-cj * d for cj in cint] + [0]
    for i in range(tab.m):
        cb = cint[tab.basis[i]]
        if cb:
            row = tab.T[i]
            for j in range(art_start + 1):
                obj2[j] += cb * row[j]
    tab.T[-1] = obj2
    status = tab.run(art_start)
    if status == "unbounded":
        return LPResult("unbounded")

    vals = [Fraction(0)] * art_start
    for i in range(tab.m):
        vals[tab.basis[i]] = Fraction(tab.T[i][-1], tab.d)
    x = [vals[j] - (vals[neg_col[j]] if j in neg_col else 0) for j in range(nvar)]
    optimum = sum((Fraction(c) * xi for c, xi in zip(objective, x)), Fraction(0))
    assert optimum == Fraction(tab.T[-1][-1], tab.d * cscale)
    _check_witness(x, constraints)
    return LPResult("optimal", optimum, tuple(x))


def _check_witness(x: Sequence[Fraction], constraints: Sequence[Constraint]) -> None:
    den = 1
    for xi in x:
        den = lcm(den, xi.denominator)
    num = [int(xi * den) for xi in x]
    for con in constraints:
        if all(type(a) is int for a in con.coeffs) and type(con.rhs) is int:
            lhs = sum(a * v for a, v in zip(con.coeffs, num) if a)
            rhs = con.rhs * den
        else:
            lhs = sum((Fraction(a) * xi for a, xi in zip(con.coeffs, x) if a), Fraction(0))
            rhs = con.rhs
        ok = {"<=": lhs <= rhs, ">=": lhs >= rhs, "==": lhs == rhs}[con.sense]
        if not ok:
            raise AssertionError(f"simplex witness violates {con}")


def feasible_point(constraints: Sequence[Constraint], nvar: int) -> tuple[Fraction, ...] | None:
    res = lp_solve([0] * nvar, constraints)
    return res.witness if res.optimal else None
