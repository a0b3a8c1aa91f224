"""Quivers attached to a triangulation and to the endomorphism algebra of its mar.

The adjacency quiver and its tilted reduction are read off the polygon. The
Gabriel quiver of End(T) is computed from hom spaces and composites only, so
that the two can be compared.

Arrow convention for Gabriel quivers: ``a -> b`` is recorded when there is an
irreducible morphism ``T_b -> T_a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .linalg import hom_dim_general
from .mar import MarRep, enumerate_mar
from .polygon import PolygonP, Segment, Triangulation, build_polygon, seg
from .quiver import QuiverA, doubled_quiver
from .reps import (IntervalModule, F_map, as_representation, canonical_morphism,
                   compose, hom_dim, intervals)


@dataclass(frozen=True)
class AlgebraQuiver:
    vertices: tuple
    arrows: frozenset

    def __post_init__(self):
        for a, b in self.arrows:
            if a == b:
                raise ValueError(f"loop at {a}")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"arrow {a}->{b} leaves the vertex set")

    def successors(self, x) -> list:
        return sorted(b for a, b in self.arrows if a == x)

    def three_cycles(self) -> list[tuple]:
        """Oriented 3-cycles, each listed once starting from its smallest vertex."""
        out = []
        for a, b in self.arrows:
            for c in self.successors(b):
                if (c, a) in self.arrows and a < b and a < c:
                    out.append((a, b, c))
        return sorted(out)

    def map_vertices(self, f) -> "AlgebraQuiver":
        return AlgebraQuiver(tuple(sorted(f(v) for v in self.vertices)),
                             frozenset((f(a), f(b)) for a, b in self.arrows))

    def opposite(self) -> "AlgebraQuiver":
        return AlgebraQuiver(self.vertices, frozenset((b, a) for a, b in self.arrows))


def segment_label(s: Segment) -> str:
    return f"{s} / {F_map(s).label}"


# -- from the polygon ------------------------------------------------------

def triangle_cycles(p: PolygonP, t: Triangulation) -> list[tuple]:
    """Sides of each triangle in counterclockwise succession."""
    out = []
    for tri in t.triangles():
        a, b, c = sorted(tri, key=p.position.__getitem__)
        out.append((seg(a, b), seg(b, c), seg(c, a)))
    return out


def adjacency_quiver(p: PolygonP, t: Triangulation) -> AlgebraQuiver:
    arrows = set()
    for x, y, z in triangle_cycles(p, t):
        arrows |= {(x, y), (y, z), (z, x)}
    return AlgebraQuiver(tuple(sorted(t.edges)), frozenset(arrows))


def _shares_middle(a: Segment, b: Segment) -> bool:
    return a.j == b.i or b.j == a.i


def tilted_quiver(p: PolygonP, t: Triangulation) -> AlgebraQuiver:
    """Drop arrows between γ(i,j) and γ(j,k)."""
    full = adjacency_quiver(p, t)
    return AlgebraQuiver(full.vertices,
                         frozenset((a, b) for a, b in full.arrows if not _shares_middle(a, b)))


# -- from the module category ----------------------------------------------

def hom_table(q: QuiverA, modules) -> list[list[int]]:
    mods = sorted(modules)
    return [[hom_dim(q, a, b) for b in mods] for a in mods]


@lru_cache(maxsize=None)
def _nonzero_composite(directions: str, x, y, z) -> bool:
    q = QuiverA(len(directions) - 1, directions)
    f, g = canonical_morphism(q, x, y), canonical_morphism(q, y, z)
    return f is not None and g is not None and bool(compose(f, g))


def nonzero_composite(q: QuiverA, x: IntervalModule, y: IntervalModule,
                      z: IntervalModule) -> bool:
    """Is the canonical composite x -> y -> z nonzero?"""
    return _nonzero_composite(q.directions, x, y, z)


def irreducible_in(q: QuiverA, summands, x: IntervalModule, y: IntervalModule) -> bool:
    """Is the nonzero map x -> y outside rad^2 of add(summands)?"""
    if x == y or not hom_dim(q, x, y):
        return False
    return not any(nonzero_composite(q, x, c, y) for c in summands if c not in (x, y))


def gabriel_quiver_of_end(q: QuiverA, t: MarRep) -> AlgebraQuiver:
    mods = t.sorted_summands()
    for a in mods:
        for b in mods:
            if hom_dim(q, a, b) > 1:
                raise ValueError(f"Hom({a},{b}) has dimension > 1")
    arrows = frozenset((a, b) for a, b in permutations(mods, 2) if irreducible_in(q, mods, b, a))
    return AlgebraQuiver(tuple(mods), arrows)


def doubled_image(m: IntervalModule) -> IntervalModule:
    return IntervalModule(2 * m.i - 1, 2 * m.j - 1)


def hom_preserved_by_doubling(q: QuiverA, oracle: bool = False) -> list[tuple]:
    """Pairs (M, N) with hom_Q(M,N) != hom_Q̄(G M, G N); empty when G is fully faithful."""
    qq = doubled_quiver(q)
    bad = []
    for a in intervals(q):
        for b in intervals(q):
            ga, gb = doubled_image(a), doubled_image(b)
            if oracle:
                lhs = hom_dim_general(as_representation(q, a), as_representation(q, b))
                rhs = hom_dim_general(as_representation(qq, ga), as_representation(qq, gb))
            else:
                lhs, rhs = hom_dim(q, a, b), hom_dim(qq, ga, gb)
            if lhs != rhs:
                bad.append((a, b))
    return bad


# -- the structural report -------------------------------------------------

@dataclass
class RelationEcho:
    arrow: tuple
    zero: int
    commutative: int


@dataclass
class MarQuiverCheck:
    mar: MarRep
    failures: list = field(default_factory=list)
    relations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class MarQuiverReport:
    quiver: QuiverA
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list:
        return [(str(r.mar), f) for r in self.results for f in r.failures]

    def relation_kinds(self) -> dict:
        kinds = {"zero": 0, "commutativity": 0}
        for r in self.results:
            for e in r.relations:
                kinds["zero"] += e.zero
                kinds["commutativity"] += e.commutative
        return kinds


def relation_echo(q: QuiverA, g: AlgebraQuiver) -> list[RelationEcho]:
    """For each arrow, count the length-2 paths through it that carry a relation.

    A path a -> b -> c stands for maps T_c -> T_b -> T_a. It is a zero relation
    when that composite vanishes, and a commutativity relation when it is
    nonzero and another path a -> b' -> c is nonzero as well.
    """
    paths = [(a, b, c) for a, b in g.arrows for c in g.successors(b) if c != a]

    def nonzero(path):
        a, b, c = path
        return nonzero_composite(q, c, b, a)

    out = []
    for arrow in sorted(g.arrows):
        zero = comm = 0
        for path in paths:
            if arrow not in ((path[0], path[1]), (path[1], path[2])):
                continue
            if not nonzero(path):
                zero += 1
            elif any(nonzero(o) for o in paths
                     if o != path and o[0] == path[0] and o[2] == path[2]):
                comm += 1
        out.append(RelationEcho(arrow, zero, comm))
    return out


def check_mar_quivers(q: QuiverA, p: PolygonP, t: MarRep) -> MarQuiverCheck:
    res = MarQuiverCheck(t)
    tri = t.triangulation()
    adj = adjacency_quiver(p, tri)
    n = q.n
    if len(adj.vertices) != 2 * n + 3 or len(adj.arrows) != 3 * (n + 1):
        res.failures.append(f"adjacency quiver has {len(adj.vertices)} vertices, "
                            f"{len(adj.arrows)} arrows")
    cycles = adj.three_cycles()
    for arrow in adj.arrows:
        hits = sum(1 for c in cycles
                   if arrow in ((c[0], c[1]), (c[1], c[2]), (c[2], c[0])))
        if hits != 1:
            res.failures.append(f"(a) arrow {arrow} lies on {hits} 3-cycles")
    tilted = tilted_quiver(p, tri)
    if len(adj.arrows) - len(tilted.arrows) != n + 1:
        res.failures.append("tilted quiver did not remove one arrow per triangle")
    gab = gabriel_quiver_of_end(q, t)
    if tilted.map_vertices(F_map) != gab:
        res.failures.append("(b) tilted quiver differs from the Gabriel quiver of End(T)")
    qq = doubled_quiver(q)
    mods = t.sorted_summands()
    if hom_table(q, mods) != hom_table(qq, [doubled_image(m) for m in mods]):
        res.failures.append("(c) hom tables of T and G(T) differ")
    image = {m: doubled_image(m) for m in mods}
    # with equal hom tables only composable nonzero pairs can disagree
    chains = [(x, y) for x in mods for y in mods if x != y and hom_dim(q, x, y)]
    for x, y in chains:
        for z in mods:
            if z != y and hom_dim(q, y, z) and (nonzero_composite(q, x, y, z) !=
                                               nonzero_composite(qq, image[x], image[y], image[z])):
                res.failures.append(f"(c) composite {x}->{y}->{z} not preserved by G")
    res.relations = relation_echo(q, gab)
    for e in res.relations:
        if not (e.zero or e.commutative):
            res.failures.append(f"(d) arrow {e.arrow} lies on no relation")
    return res


def verify_mar_quivers(q: QuiverA, p: PolygonP | None = None) -> MarQuiverReport:
    p = p or build_polygon(q)
    return MarQuiverReport(q, [check_mar_quivers(q, p, t) for t in enumerate_mar(q, p)])

