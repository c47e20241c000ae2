"""Row-style Hermite normal form over the integers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class HNFResult:
    """``H`` holds the nonzero rows of the HNF of the input.

    Pivots are positive, strictly increasing in column, and entries above a
    pivot lie in ``[0, pivot)``.  ``transform`` (when requested) is an
    integer matrix ``U`` with ``U @ rows == H``.
    """

    H: tuple[tuple[int, ...], ...]
    pivot_columns: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.H)

    def lattice_index(self) -> int:
        """Product of the pivots (the index of the row lattice in its span's integer lattice
        when that span is everything)."""
        out = 1
        for row, c in zip(self.H, self.pivot_columns):
            out *= row[c]
        return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _comb(s: int, u: Sequence[int], t: int, v: Sequence[int]) -> list[int]:
    return [s * a + t * b for a, b in zip(u, v)]


def hermite_normal_form(rows: Iterable[Sequence[int]], track_transform: bool = False) -> HNFResult:
    """Incremental HNF: each input row is reduced into the current echelon basis.

    With ``track_transform`` every basis row carries its coefficients over the
    input rows, which costs ``O(rank * len(rows))`` extra memory.
    """
    rows = [list(map(int, r)) for r in rows]
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    basis: dict[int, list[int]] = {}
    coeff: dict[int, list[int]] = {}

    for idx, row in enumerate(rows):
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        v = row[:]
        cv = [0] * m if track_transform else []
        if track_transform:
            cv[idx] = 1
        for c in range(ncols):
            if v[c] == 0:
                continue
            if c not in basis:
                if v[c] < 0:
                    v = [-a for a in v]
                    cv = [-a for a in cv]
                basis[c] = v
                coeff[c] = cv
                break
            b = basis[c]
            g, s, t = _xgcd(b[c], v[c])
            if g < 0:
                g, s, t = -g, -s, -t
            p, q = b[c] // g, v[c] // g
            basis[c] = _comb(s, b, t, v)
            v = _comb(p, v, -q, b)
            if track_transform:
                cb = coeff[c]
                coeff[c] = _comb(s, cb, t, cv)
                cv = _comb(p, cv, -q, cb)

    cols = sorted(basis)
    # reduce entries above each pivot; left to right keeps earlier columns fixed
    for i in range(len(cols)):
        c = cols[i]
        piv = basis[c][c]
        for j in range(i):
            r = cols[j]
            f = basis[r][c] // piv
            if f:
                basis[r] = _comb(1, basis[r], -f, basis[c])
                if track_transform:
                    coeff[r] = _comb(1, coeff[r], -f, coeff[c])
    H = tuple(tuple(basis[c]) for c in cols)
    U = tuple(tuple(coeff[c]) for c in cols) if track_transform else None
    return HNFResult(H, tuple(cols), U)
