"""Interval modules over a type A quiver: Hom/Ext, the AR quiver, extensions and meshes.

Every indecomposable is an interval module ``M(i,j)``. Hom spaces are computed
by solving the commuting-square constraints exactly; everything geometric in
the package is checked against these linear systems.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple

from . import linalg
from .polygon import Segment
from .quiver import QuiverA, RIGHT, cohook, hook


class IntervalModule(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"S({self.i})" if self.i == self.j else f"M({self.i},{self.j})"

    @property
    def label(self) -> str:
        return f"M({self.i},{self.j})"

    @property
    def support(self) -> range:
        return range(self.i, self.j + 1)


K0Class = tuple  # integer coordinates indexed by vertices 1..n+2


def intervals(q: QuiverA) -> list[IntervalModule]:
    """All indecomposables in lexicographic order of (i, j)."""
    m = q.n + 2
    return [IntervalModule(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]


def F_map(s: Segment) -> IntervalModule:
    return IntervalModule(s.i + 1, s.j)


def F_inv(m: IntervalModule) -> Segment:
    return Segment(m.i - 1, m.j)


def dim_vector(q: QuiverA, m: IntervalModule) -> K0Class:
    return tuple(int(m.i <= v <= m.j) for v in q.vertices)


def class_of(q: QuiverA, modules) -> K0Class:
    total = [0] * q.num_vertices
    for m in modules:
        for v in m.support:
            total[v - 1] += 1
    return tuple(total)


# -- Hom and Ext -----------------------------------------------------------

def _commuting_rows(q: QuiverA, m: IntervalModule, nn: IntervalModule):
    """Commuting-square constraints on f: M -> N, one unknown per common vertex."""
    lo, hi = max(m.i, nn.i), min(m.j, nn.j)
    unknowns = list(range(lo, hi + 1))
    col = {v: k for k, v in enumerate(unknowns)}
    rows = []
    for x, y in q.arrows():
        # N_α f_x = f_y M_α, as a map M_x -> N_y; trivial unless both are nonzero
        if not (m.i <= x <= m.j and nn.i <= y <= nn.j):
            continue
        row = [0] * len(unknowns)
        if nn.i <= x <= nn.j and x in col:
            row[col[x]] += 1
        if m.i <= y <= m.j and y in col:
            row[col[y]] -= 1
        if any(row):
            rows.append(row)
    return rows, unknowns


@lru_cache(maxsize=None)
def _hom_dim(directions: str, m: IntervalModule, nn: IntervalModule) -> int:
    q = QuiverA(len(directions) - 1, directions)
    rows, unknowns = _commuting_rows(q, m, nn)
    return len(unknowns) - linalg.rank(rows, len(unknowns))


def hom_dim(q: QuiverA, m: IntervalModule, nn: IntervalModule) -> int:
    return _hom_dim(q.directions, m, nn)


def is_morphism(q: QuiverA, m: IntervalModule, nn: IntervalModule, f: dict) -> bool:
    """Check that components ``f[v]`` (scalars) commute with every arrow."""
    def comp(v):
        return f.get(v, 0) if (m.i <= v <= m.j and nn.i <= v <= nn.j) else 0
    for x, y in q.arrows():
        if not (m.i <= x <= m.j and nn.i <= y <= nn.j):
            continue
        left = comp(x) if nn.i <= x <= nn.j else 0
        right = comp(y) if m.i <= y <= m.j else 0
        if left != right:
            return False
    return True


def canonical_morphism(q: QuiverA, m: IntervalModule, nn: IntervalModule) -> dict | None:
    """The map that is 1 on the support overlap, if it is a nonzero morphism."""
    lo, hi = max(m.i, nn.i), min(m.j, nn.j)
    if lo > hi:
        return None
    f = {v: 1 for v in range(lo, hi + 1)}
    return f if is_morphism(q, m, nn, f) else None


def compose(f: dict, g: dict) -> dict:
    """g ∘ f for componentwise scalar maps; zero components are dropped."""
    return {v: f[v] * g[v] for v in f.keys() & g.keys() if f[v] * g[v]}


def euler_form(q: QuiverA, d: K0Class, e: K0Class) -> int:
    total = sum(a * b for a, b in zip(d, e))
    for x, y in q.arrows():
        total -= d[x - 1] * e[y - 1]
    return total


def ext_dim(q: QuiverA, m: IntervalModule, nn: IntervalModule) -> int:
    """dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>."""
    return hom_dim(q, m, nn) - euler_form(q, dim_vector(q, m), dim_vector(q, nn))


def as_representation(q: QuiverA, m: IntervalModule) -> linalg.Representation:
    return linalg.Representation.interval(q, m.i, m.j)


def hom_ext_table(q: QuiverA) -> dict:
    mods = intervals(q)
    return {
        "hom": [[hom_dim(q, a, b) for b in mods] for a in mods],
        "ext": [[ext_dim(q, a, b) for b in mods] for a in mods],
    }


# -- Extensions ------------------------------------------------------------

class Shape(enum.Enum):
    NONE = "none"
    INDECOMPOSABLE = "indecomposable"
    DECOMPOSABLE = "decomposable"


@dataclass(frozen=True)
class ExtensionShape:
    shape: Shape
    middle: tuple = ()

    def __str__(self):
        if self.shape is Shape.NONE:
            return "split"
        return " ⊕ ".join(str(e) for e in self.middle)


def middle_terms(q: QuiverA, sub: IntervalModule, quot: IntervalModule) -> ExtensionShape:
    """Middle term of the non-split 0 -> sub -> E -> quot -> 0, if one exists.

    With sub = F(γ(k,l)) and quot = F(γ(i,j)) the middle term is obtained by
    exchanging right endpoints: F(γ(i,l)) ⊕ F(γ(k,j)), where a degenerate
    segment contributes nothing.
    """
    if ext_dim(q, quot, sub) == 0:
        return ExtensionShape(Shape.NONE)
    k, l = F_inv(sub)
    i, j = F_inv(quot)
    parts = []
    for a, b in ((i, l), (k, j)):
        if a == b:
            continue
        if a > b:
            raise AssertionError(f"extension of {quot} by {sub} has invalid middle segment ({a},{b})")
        parts.append(F_map(Segment(a, b)))
    parts.sort()
    shape = Shape.INDECOMPOSABLE if len(parts) == 1 else Shape.DECOMPOSABLE
    return ExtensionShape(shape, tuple(parts))


@lru_cache(maxsize=None)
def _hom_matrix_inverse(directions: str) -> tuple:
    """Inverse of (dim Hom(X, M))_{X,M}, solved once per orientation."""
    q = QuiverA(len(directions) - 1, directions)
    mods = intervals(q)
    mat = [[hom_dim(q, x, m) for m in mods] for x in mods]
    return tuple(tuple(row) for row in linalg.inverse(mat))


def decompose(rep: linalg.Representation) -> dict:
    """Interval multiplicities of ``rep``, read off from dim Hom(X, rep) for all X."""
    q = rep.quiver
    mods = intervals(q)
    h = [linalg.hom_dim_general(as_representation(q, x), rep) for x in mods]
    # dim Hom(X, -) is additive, and the matrix (dim Hom(X, M))_{X,M} is invertible
    inv = _hom_matrix_inverse(q.directions)
    mult = [sum(a * b for a, b in zip(row, h) if b) for row in inv]
    out = {}
    for m, c in zip(mods, mult):
        c = Fraction(c)
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"non-integral multiplicity {c} for {m}")
        if c:
            out[m] = int(c)
    return out


def extension_middle_oracle(q: QuiverA, sub: IntervalModule, quot: IntervalModule) -> dict | None:
    """Decomposition of an explicitly built non-split extension (None if Ext^1 = 0)."""
    e = linalg.nonsplit_extension(as_representation(q, sub), as_representation(q, quot))
    return None if e is None else decompose(e)


# -- AR quiver -------------------------------------------------------------

def projective(q: QuiverA, x: int) -> IntervalModule:
    """P(x): supported on the vertices reachable from x."""
    lo = hi = x
    while hi <= q.n + 1 and q.direction(hi) == RIGHT:
        hi += 1
    while lo >= 2 and q.direction(lo - 1) != RIGHT:
        lo -= 1
    return IntervalModule(lo, hi)


def injective(q: QuiverA, x: int) -> IntervalModule:
    """I(x): supported on the vertices from which x is reachable."""
    lo = hi = x
    while hi <= q.n + 1 and q.direction(hi) != RIGHT:
        hi += 1
    while lo >= 2 and q.direction(lo - 1) == RIGHT:
        lo -= 1
    return IntervalModule(lo, hi)


def hook_modules(q: QuiverA) -> set[IntervalModule]:
    out = set()
    for l in q.arrow_indices:
        for path in (hook(q, l), cohook(q, l)):
            out.add(IntervalModule(*path.support))
    return out


def coxeter_matrix(q: QuiverA) -> list:
    """Φ = -E^{-1} E^T, where <x, y> = x^T E y; dim τM = Φ dim M off projectives."""
    size = q.num_vertices
    e = [[int(r == c) for c in range(size)] for r in range(size)]
    for x, y in q.arrows():
        e[x - 1][y - 1] -= 1
    et = [list(col) for col in zip(*e)]
    cols = []
    for c in range(size):
        rhs = [et[r][c] for r in range(size)]
        cols.append([-v for v in linalg.solve(e, rhs)])
    return [[int(cols[c][r]) for c in range(size)] for r in range(size)]


@dataclass(frozen=True)
class ARQuiver:
    vertices: tuple
    arrows: frozenset
    tau: dict = field(compare=False)

    def predecessors(self, x) -> list:
        return sorted(a for a, b in self.arrows if b == x)

    def successors(self, x) -> list:
        return sorted(b for a, b in self.arrows if a == x)


def hook_arrows(q: QuiverA, m: IntervalModule) -> list[tuple]:
    """Irreducible maps at M(i,j): adding a hook (out) or removing a cohook (in)."""
    i, j = m
    top = q.n + 2
    out = []
    if j < top:
        l = j
        if q.direction(l) != RIGHT:      # α: j <- j+1, add H(α) on the right
            h = hook(q, l).support
            out.append((m, IntervalModule(i, h[1])))
        else:                            # α: j -> j+1, N = M(i, ℓ) maps onto M
            c = cohook(q, l).support
            out.append((IntervalModule(i, c[1]), m))
    if i > 1:
        l = i - 1
        if q.direction(l) == RIGHT:      # α: i-1 -> i, add H(α) on the left
            h = hook(q, l).support
            out.append((m, IntervalModule(h[0], j)))
        else:                            # α: i-1 <- i, N = M(h, j) maps onto M
            c = cohook(q, l).support
            out.append((IntervalModule(c[0], j), m))
    return out


def ar_quiver(q: QuiverA) -> ARQuiver:
    mods = intervals(q)
    arrows = frozenset(a for m in mods for a in hook_arrows(q, m))
    projectives = {projective(q, x) for x in q.vertices}
    phi = coxeter_matrix(q)
    by_dim = {dim_vector(q, m): m for m in mods}
    tau = {}
    for m in mods:
        if m in projectives:
            continue
        d = dim_vector(q, m)
        image = tuple(sum(phi[r][c] * d[c] for c in range(len(d))) for r in range(len(d)))
        if image not in by_dim:
            raise AssertionError(f"Coxeter image of {m} is not an interval: {image}")
        tau[m] = by_dim[image]
    return ARQuiver(tuple(mods), arrows, tau)


def subrepresentation_supports(q: QuiverA, m: IntervalModule) -> Iterator[frozenset]:
    """Vertex sets of subrepresentations of M: closed under arrows inside supp M."""
    supp = list(m.support)
    inside = [(x, y) for x, y in q.arrows() if m.i <= x <= m.j and m.i <= y <= m.j]
    for size in range(len(supp) + 1):
        for chosen in combinations(supp, size):
            s = set(chosen)
            if all(y in s for x, y in inside if x in s):
                yield frozenset(s)


@dataclass
class MeshResult:
    vertex: IntervalModule
    start: IntervalModule
    middle: tuple
    signed_sum: dict
    exact: bool

    @property
    def ok(self) -> bool:
        return not self.signed_sum and self.exact

    @property
    def kind(self) -> str:
        return "zero" if len(self.middle) == 1 else "commutativity"


@dataclass
class MeshReport:
    quiver: QuiverA
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.ok]


def verify_mesh_relations(q: QuiverA) -> MeshReport:
    """Compose canonical maps τx -> y -> x around every mesh and sum with signs ±1."""
    ar = ar_quiver(q)
    results = []
    for x, tx in sorted(ar.tau.items()):
        middle = tuple(ar.predecessors(x))
        total: dict = {}
        for sign, y in zip((1, -1), middle):
            f = canonical_morphism(q, tx, y)
            g = canonical_morphism(q, y, x)
            if f is None or g is None or (tx, y) not in ar.arrows:
                total = {"missing": 1}
                break
            for v, c in compose(f, g).items():
                total[v] = total.get(v, 0) + sign * c
        total = {v: c for v, c in total.items() if c}
        exact = class_of(q, [tx, x]) == class_of(q, middle)
        results.append(MeshResult(x, tx, middle, total, exact))
    return MeshReport(q, results)
