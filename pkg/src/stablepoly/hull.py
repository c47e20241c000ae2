"""Facet enumeration of full-dimensional lattice polytopes.

Double description on the homogenized cone
``{y : y . (1, v) >= 0 for every point v}``; its extreme rays ``(b, -a)`` are
the facets ``a . x <= b``.  Rays are kept as primitive integer vectors and
adjacency is decided combinatorially from tight-point bitsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .guards import DEFAULT_GUARDS, check

Point = tuple[int, ...]


class HullError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Inequality:
    """``coeffs . x <= rhs`` in primitive integer form."""

    coeffs: tuple[int, ...]
    rhs: int

    def __post_init__(self) -> None:
        if not any(self.coeffs):
            raise HullError("zero functional is not an inequality")
        if reduce(gcd, self.coeffs, abs(self.rhs)) != 1:
            raise HullError(f"inequality {self} is not primitive")

    @classmethod
    def normalized(cls, coeffs: Sequence[int], rhs: int) -> Inequality:
        g = reduce(gcd, coeffs, abs(rhs))
        if g == 0:
            raise HullError("zero functional is not an inequality")
        return cls(tuple(c // g for c in coeffs), rhs // g)

    def value(self, x: Sequence[int | Fraction]) -> int | Fraction:
        return sum(c * v for c, v in zip(self.coeffs, x) if c)

    def slack(self, x: Sequence[int | Fraction], k: int = 1) -> int | Fraction:
        """``k * rhs - coeffs . x``; nonnegative iff ``x`` satisfies the ``k``-dilate."""
        return k * self.rhs - self.value(x)

    @property
    def is_trivial(self) -> bool:
        """A nonnegativity facet ``-x_i <= 0``."""
        return self.rhs == 0 and sorted(self.coeffs)[0] == -1 and sum(map(abs, self.coeffs)) == 1

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                coef = "" if abs(c) == 1 else str(abs(c))
                terms.append(("-" if c < 0 else "+") + coef + f"x{i + 1}")
        body = " ".join(terms).lstrip("+")
        return f"{body} <= {self.rhs}"


def _facet_sort_key(f: Inequality):
    if f.is_trivial:
        return (0, 0, f.support)
    return (1, f.rhs, tuple(-c for c in f.coeffs))


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _rank(rows: list[list[Fraction]]) -> int:
    m = [r[:] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _inverse(mat: list[list[int]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [v / p for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    diffs = [[Fraction(a - b) for a, b in zip(p, p0)] for p in points[1:]]
    return _rank(diffs) if diffs else 0


def _initial_simplex(points: list[Point], n: int) -> list[int]:
    """Indices of ``n+1`` affinely independent points, chosen greedily in order."""
    chosen: list[int] = []
    basis_rows: list[list[Fraction]] = []  # reduced homogenized rows
    pivots: list[int] = []
    for idx, p in enumerate(points):
        row = [Fraction(1)] + [Fraction(v) for v in p]
        for prow, pc in zip(basis_rows, pivots):
            if row[pc] != 0:
                f = row[pc] / prow[pc]
                row = [a - f * b for a, b in zip(row, prow)]
        pc = next((j for j, v in enumerate(row) if v != 0), None)
        if pc is None:
            continue
        basis_rows.append(row)
        pivots.append(pc)
        chosen.append(idx)
        if len(chosen) == n + 1:
            return chosen
    raise HullError(f"points span affine dimension {len(chosen) - 1} < {n}; not full-dimensional")


def facet_enumeration(vertices: Iterable[Sequence[int]], n: int,
                      max_n: int = DEFAULT_GUARDS.facet_max_n) -> list[Inequality]:
    """Irredundant facets of ``conv(vertices)`` in ``R^n``, deterministically ordered.

    Trivial facets ``-x_i <= 0`` come first (by ``i``), then the rest by
    right-hand side.
    """
    check(n, max_n, "facet_enumeration")
    points = sorted({tuple(int(v) for v in p) for p in vertices})
    for p in points:
        if len(p) != n:
            raise HullError(f"point {p} has dimension {len(p)}, expected {n}")
    homog = [(1,) + p for p in points]
    d = n + 1

    init = _initial_simplex(points, n)
    inv = _inverse([list(homog[i]) for i in init])
    rays: list[tuple[int, ...]] = []
    zeros: list[int] = []
    for col in range(d):
        column = [inv[r][col] for r in range(d)]
        den = reduce(lcm, (c.denominator for c in column), 1)
        rays.append(_primitive([int(c * den) for c in column]))
        zeros.append(sum(1 << init[r] for r in range(d) if r != col))

    done = set(init)
    for idx, h in enumerate(homog):
        if idx in done:
            continue
        bit = 1 << idx
        vals = [sum(a * b for a, b in zip(y, h)) for y in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        zer = [i for i, s in enumerate(vals) if s == 0]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_zeros = [zeros[i] for i in pos] + [zeros[i] | bit for i in zer]
        if neg:
            for p in pos:
                for q in neg:
                    common = zeros[p] & zeros[q]
                    if common.bit_count() < d - 2:
                        continue
                    if any(r != p and r != q and common & ~zeros[r] == 0 for r in range(len(rays))):
                        continue
                    sp, sq = vals[p], -vals[q]
                    y = _primitive([sp * b + sq * a for a, b in zip(rays[p], rays[q])])
                    new_rays.append(y)
                    new_zeros.append(common | bit)
        rays, zeros = new_rays, new_zeros
        done.add(idx)

    facets = [Inequality.normalized([-c for c in y[1:]], y[0]) for y in rays]
    facets = sorted(set(facets), key=_facet_sort_key)
    return facets


def facet_is_valid_and_tight(f: Inequality, points: Sequence[Sequence[int]]) -> bool:
    """Valid on every point and tight on ``n`` affinely independent ones."""
    n = len(f.coeffs)
    if any(f.slack(p) < 0 for p in points):
        return False
    tight = [p for p in points if f.slack(p) == 0]
    return affine_rank(tight) >= n - 1
