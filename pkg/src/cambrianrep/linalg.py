"""Exact Gaussian elimination over the rationals, plus general quiver representations.

The general :class:`Representation` is the ground-truth side of every check:
Hom and Ext^1 come from the kernel and cokernel of the standard map
``⊕_x Hom(A_x, B_x) -> ⊕_α Hom(A_s(α), B_t(α))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .quiver import QuiverA

Matrix = list  # list of rows of Fractions / ints


def row_echelon(rows: Sequence[Sequence], ncols: int) -> tuple[list, list]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _integer_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Fraction-free elimination; rows are rescaled by their gcd to stay small."""
    m = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(m)) if m[k][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r]
        for k in range(r + 1, len(m)):
            f = m[k][c]
            if f:
                row = [a * piv[c] - b * f for a, b in zip(m[k], piv)]
                g = gcd(*row)
                m[k] = [v // g for v in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    if all(type(v) is int for row in rows for v in row):
        return _integer_rank(rows, ncols)
    return len(row_echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows · v = 0}."""
    if not rows:
        return [[Fraction(int(k == c)) for k in range(ncols)] for c in range(ncols)]
    red, piv = row_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Unique solution of a square nonsingular system."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, piv = row_echelon(aug, n)
    if piv != list(range(n)):
        raise ValueError("singular system")
    return [red[k][n] for k in range(n)]


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse by one Gauss-Jordan pass on [A | I]."""
    n = len(a)
    aug = [list(row) + [int(r == c) for c in range(n)] for r, row in enumerate(a)]
    red, piv = row_echelon(aug, n)
    if piv != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


@dataclass
class Representation:
    """Finite-dimensional representation of a type A quiver.

    ``dims[v]`` is the dimension at vertex v; ``maps[l]`` is the matrix of
    arrow l (shape ``dims[target] x dims[source]``).
    """
    quiver: QuiverA
    dims: dict
    maps: dict

    @classmethod
    def interval(cls, q: QuiverA, i: int, j: int) -> "Representation":
        dims = {v: int(i <= v <= j) for v in q.vertices}
        maps = {}
        for l in q.arrow_indices:
            s, t = q.arrow(l)
            if dims[s] and dims[t]:
                maps[l] = [[1]]
            else:
                maps[l] = zeros(dims[t], dims[s])
        return cls(q, dims, maps)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.quiver.vertices)


def _hom_coordinates(a: Representation, b: Representation):
    """Index the unknowns f_v[r][c] of a family of maps A_v -> B_v."""
    index = {}
    for v in a.quiver.vertices:
        for r in range(b.dims[v]):
            for c in range(a.dims[v]):
                index[(v, r, c)] = len(index)
    return index


def _differential(a: Representation, b: Representation):
    """Rows of δ(f)_α = B_α f_s - f_t A_α, one row per entry of each Hom(A_s, B_t)."""
    q = a.quiver
    index = _hom_coordinates(a, b)
    rows = []
    for l in q.arrow_indices:
        s, t = q.arrow(l)
        am, bm = a.maps[l], b.maps[l]
        for r in range(b.dims[t]):
            for c in range(a.dims[s]):
                row = [0] * len(index)
                # (B_α f_s)[r][c] = Σ_k B_α[r][k] f_s[k][c]
                for k in range(b.dims[s]):
                    if bm[r][k]:
                        row[index[(s, k, c)]] += bm[r][k]
                # (f_t A_α)[r][c] = Σ_k f_t[r][k] A_α[k][c]
                for k in range(a.dims[t]):
                    if am[k][c]:
                        row[index[(t, r, k)]] -= am[k][c]
                rows.append(row)
    return rows, len(index)


def hom_dim_general(a: Representation, b: Representation) -> int:
    rows, ncols = _differential(a, b)
    return ncols - rank(rows, ncols)


def ext_dim_general(a: Representation, b: Representation) -> int:
    """dim Ext^1(A, B) as the cokernel dimension of the differential."""
    rows, ncols = _differential(a, b)
    return len(rows) - rank(rows, ncols)


def nonsplit_extension(sub: Representation, quot: Representation) -> Representation | None:
    """Middle term E of a non-split 0 -> sub -> E -> quot -> 0, or None if Ext^1 vanishes.

    E_v = sub_v ⊕ quot_v with block maps [[sub_α, c_α], [0, quot_α]] for a
    cocycle c outside the image of the differential.
    """
    q = sub.quiver
    rows, ncols = _differential(quot, sub)
    target = len(rows)
    if target - rank(rows, ncols) == 0:
        return None
    # columns of δ span its image; pick a standard basis vector outside that span
    image = [list(col) for col in zip(*rows)] if ncols else []
    base_rank = rank(image, target)
    cocycle = None
    for e in range(target):
        unit = [int(k == e) for k in range(target)]
        if rank(image + [unit], target) > base_rank:
            cocycle = unit
            break
    dims = {v: sub.dims[v] + quot.dims[v] for v in q.vertices}
    maps = {}
    pos = 0
    for l in q.arrow_indices:
        s, t = q.arrow(l)
        c = [[cocycle[pos + r * quot.dims[s] + k] for k in range(quot.dims[s])]
             for r in range(sub.dims[t])]
        pos += sub.dims[t] * quot.dims[s]
        top = [list(sub.maps[l][r]) + c[r] for r in range(sub.dims[t])]
        bottom = [[0] * sub.dims[s] + list(quot.maps[l][r]) for r in range(quot.dims[t])]
        maps[l] = top + bottom
    return Representation(q, dims, maps)
