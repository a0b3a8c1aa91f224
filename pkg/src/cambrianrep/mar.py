"""Maximal almost rigid representations and the Cambrian lattice they form.

Two routes are kept apart on purpose: the algebraic one (Ext, middle terms,
approximation sequences) and the geometric one (crossings, triangulations,
slope-increasing flips). The checks in :mod:`cambrianrep.checks` compare them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

import networkx as nx

from .polygon import (PolygonP, Segment, Triangulation, boundary_edges, build_polygon,
                      enumerate_triangulations, flip, slope_less)
from .quiver import QuiverA
from .reps import (IntervalModule, Shape, F_inv, F_map, ext_dim, hook_modules, injective,
                   intervals, middle_terms, projective)


@dataclass(frozen=True)
class MarRep:
    summands: frozenset

    @classmethod
    def from_triangulation(cls, t: Triangulation) -> "MarRep":
        return cls(frozenset(F_map(s) for s in t.edges))

    def triangulation(self) -> Triangulation:
        return Triangulation(frozenset(F_inv(m) for m in self.summands))

    def key(self, p: PolygonP) -> tuple:
        return self.triangulation().diagonals(p)

    def sorted_summands(self) -> list:
        return sorted(self.summands)

    def __len__(self):
        return len(self.summands)

    def __str__(self):
        return " ⊕ ".join(str(m) for m in self.sorted_summands())


@lru_cache(maxsize=None)
def _almost_rigid_pair(directions: str, a: IntervalModule, b: IntervalModule) -> bool:
    q = QuiverA(len(directions) - 1, directions)
    for quot, sub in ((a, b), (b, a)):
        if ext_dim(q, quot, sub) and middle_terms(q, sub, quot).shape is not Shape.INDECOMPOSABLE:
            return False
    return True


def almost_rigid_pair(q: QuiverA, a: IntervalModule, b: IntervalModule) -> bool:
    if a == b:
        raise ValueError("almost rigid pairs need two distinct summands")
    return _almost_rigid_pair(q.directions, a, b)


def is_almost_rigid(q: QuiverA, modules: Iterable[IntervalModule]) -> bool:
    mods = sorted(set(modules))
    return all(almost_rigid_pair(q, a, b) for k, a in enumerate(mods) for b in mods[k + 1:])


def is_mar(q: QuiverA, t: Iterable[IntervalModule]) -> bool:
    t = frozenset(t)
    if not is_almost_rigid(q, t):
        return False
    return all(any(not almost_rigid_pair(q, m, x) for x in t) for m in intervals(q) if m not in t)


def enumerate_mar(q: QuiverA, p: PolygonP | None = None) -> list[MarRep]:
    p = p or build_polygon(q)
    return [MarRep.from_triangulation(t) for t in enumerate_triangulations(p)]


def enumerate_mar_bruteforce(q: QuiverA) -> list[frozenset]:
    """Maximal almost rigid sets found as maximal cliques of the compatibility graph.

    Uses only Ext and middle terms, never the polygon.
    """
    g = nx.Graph()
    mods = intervals(q)
    g.add_nodes_from(mods)
    g.add_edges_from((a, b) for k, a in enumerate(mods) for b in mods[k + 1:]
                     if almost_rigid_pair(q, a, b))
    return sorted((frozenset(c) for c in nx.find_cliques(g)), key=sorted)


def minimal_mar(q: QuiverA) -> frozenset:
    """Projectives together with all hooks and cohooks."""
    return frozenset({projective(q, x) for x in q.vertices} | hook_modules(q))


def maximal_mar(q: QuiverA) -> frozenset:
    return frozenset({injective(q, x) for x in q.vertices} | hook_modules(q))


# -- covers ----------------------------------------------------------------

class CoverWitness(NamedTuple):
    """0 -> sub -> middle[0] ⊕ middle[1] -> quot -> 0."""
    sub: IntervalModule
    middle: tuple
    quot: IntervalModule


def covers_of(q: QuiverA, p: PolygonP, t: MarRep) -> list[tuple]:
    """Slope-increasing flips of F^{-1}(t), each with its short exact sequence."""
    tri = t.triangulation()
    bound = boundary_edges(p)
    out = []
    for d in sorted(tri.edges - bound):
        new = flip(p, tri, d)
        if not slope_less(p, d, new):
            continue
        flipped = MarRep.from_triangulation(Triangulation((tri.edges - {d}) | {new}))
        sub, quot = F_map(d), F_map(new)
        shape = middle_terms(q, sub, quot)
        corners = sorted({*new, *d})
        sides = {F_map(Segment(a, b)) for a, b in combinations(corners, 2)} - {sub, quot}
        if shape.shape is not Shape.DECOMPOSABLE or set(shape.middle) - set(sides):
            raise AssertionError(
                f"flip {d}->{new}: middle term {shape} is not a pair of quadrilateral sides")
        out.append((flipped, CoverWitness(sub, shape.middle, quot)))
    return out


def approximation_cover(q: QuiverA, t: MarRep, m1: IntervalModule) -> tuple | None:
    """Cover through ``m1`` found from exact sequences alone (no slopes, no polygon)."""
    if m1 not in t.summands:
        raise ValueError(f"{m1} is not a summand")
    rest = t.summands - {m1}
    for m2 in intervals(q):
        if m2 in t.summands or not ext_dim(q, m2, m1):
            continue
        shape = middle_terms(q, m1, m2)
        if shape.shape is not Shape.DECOMPOSABLE or not set(shape.middle) <= rest:
            continue
        new = rest | {m2}
        if is_mar(q, new):
            return MarRep(frozenset(new)), CoverWitness(m1, shape.middle, m2)
    return None


# -- lattice ---------------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class CambrianLattice:
    quiver: QuiverA
    elements: list
    covers: list
    up: list = field(repr=False)
    down: list = field(repr=False)
    bottom: int
    top: int
    violations: list

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def join(self, a: int, b: int) -> int | None:
        common = self.up[a] & self.up[b]
        # elements are indexed along a linear extension, so the lowest bit is minimal
        cand = (common & -common).bit_length() - 1
        return cand if common and self.up[cand] == common else None

    def meet(self, a: int, b: int) -> int | None:
        common = self.down[a] & self.down[b]
        cand = common.bit_length() - 1
        return cand if common and self.down[cand] == common else None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self, p: PolygonP) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "elements": [[list(d) for d in e.key(p)] for e in self.elements],
            "covers": [list(c) for c in self.covers],
            "bottom": self.bottom,
            "top": self.top,
        }


def build_lattice(q: QuiverA, p: PolygonP | None = None, check: bool = True) -> CambrianLattice:
    p = p or build_polygon(q)
    mars = enumerate_mar(q, p)
    g0 = nx.DiGraph()
    index0 = {m.key(p): k for k, m in enumerate(mars)}
    g0.add_nodes_from(range(len(mars)))
    for k, m in enumerate(mars):
        for other, _ in covers_of(q, p, m):
            g0.add_edge(k, index0[other.key(p)])
    violations = []
    if not nx.is_directed_acyclic_graph(g0):
        raise AssertionError("cover relation has a cycle")
    # re-index along a linear extension (ties broken by diagonal key)
    order = list(nx.lexicographical_topological_sort(g0, key=lambda k: mars[k].key(p)))
    pos = {old: new for new, old in enumerate(order)}
    elements = [mars[old] for old in order]
    covers = sorted((pos[a], pos[b]) for a, b in g0.edges)
    size = len(elements)
    succ = [[] for _ in range(size)]
    for a, b in covers:
        succ[a].append(b)
    up = [0] * size
    for a in reversed(range(size)):
        mask = 1 << a
        for b in succ[a]:
            mask |= up[b]
        up[a] = mask
    down = [0] * size
    for a in range(size):
        for b in _bits(up[a]):
            down[b] |= 1 << a
    minima = [a for a in range(size) if down[a] == 1 << a]
    maxima = [a for a in range(size) if up[a] == 1 << a]
    if len(minima) != 1 or len(maxima) != 1:
        violations.append(f"{len(minima)} minimal and {len(maxima)} maximal elements")
    lat = CambrianLattice(q, elements, covers, up, down,
                          minima[0] if minima else -1, maxima[0] if maxima else -1, violations)
    if check:
        for a in range(size):
            for b in range(a + 1, size):
                if lat.join(a, b) is None:
                    violations.append(f"no join for {a},{b}")
                if lat.meet(a, b) is None:
                    violations.append(f"no meet for {a},{b}")
        # covers must already be the transitive reduction
        for a, b in covers:
            if any(up[c] >> b & 1 for c in succ[a] if c != b):
                violations.append(f"cover {a}->{b} is implied by a longer chain")
    return lat


def slope_cover_keys(q: QuiverA, p: PolygonP) -> set:
    """Cover relation as pairs of diagonal sets, portable between embeddings."""
    return {(frozenset(F_inv(x) for x in m.summands), frozenset(F_inv(x) for x in o.summands))
            for m in enumerate_mar(q, p) for o, _ in covers_of(q, p, m)}
