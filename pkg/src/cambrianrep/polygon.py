"""The convex polygon P(Q), its oriented segments, pivots, rotation and triangulations.

Vertex ``k`` of the default embedding sits at ``(k, s_k * k * (n+2-k))`` where
``s_k`` is +1 for upper-barred, -1 for lower-barred and 0 for ``k in {0, n+2}``.
All predicates are exact; coordinates are ints or Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, NamedTuple

from .quiver import QuiverA, barred_partition


class Segment(NamedTuple):
    """Oriented segment from vertex ``i`` to vertex ``j`` (always ``i < j``)."""
    i: int
    j: int

    def __str__(self):
        return f"γ({self.i},{self.j})"


def seg(a: int, b: int) -> Segment:
    """Segment on the unordered pair ``{a, b}``."""
    if a == b:
        raise ValueError(f"degenerate segment at vertex {a}")
    return Segment(min(a, b), max(a, b))


Height = Callable[[int, int], "int | Fraction"]


def parabolic_height(k: int, n: int) -> int:
    return k * (n + 2 - k)


def cubic_height(k: int, n: int) -> int:
    big = n + 2
    return k * (big - k) * (big + k)


@dataclass(frozen=True)
class PolygonP:
    quiver: QuiverA
    coords: dict = field(compare=False)
    ccw_order: tuple

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def top(self) -> int:
        return self.quiver.n + 2

    @cached_property
    def position(self) -> dict:
        return {v: k for k, v in enumerate(self.ccw_order)}

    def ccw_next(self, v: int) -> int:
        """R^{-1}(v): the counterclockwise neighbour of ``v``."""
        order = self.ccw_order
        return order[(self.position[v] + 1) % len(order)]

    def cw_next(self, v: int) -> int:
        """R(v): the clockwise neighbour of ``v``."""
        order = self.ccw_order
        return order[(self.position[v] - 1) % len(order)]

    @cached_property
    def segments(self) -> tuple:
        m = self.top
        return tuple(Segment(i, j) for i in range(m + 1) for j in range(i + 1, m + 1))

    def vector(self, s: Segment) -> tuple:
        (xi, yi), (xj, yj) = self.coords[s.i], self.coords[s.j]
        return (xj - xi, yj - yi)

    def lower_path(self) -> tuple:
        lower = sorted(barred_partition(self.quiver).lower)
        return (0, *lower, self.top)

    def upper_path(self) -> tuple:
        upper = sorted(barred_partition(self.quiver).upper)
        return (0, *upper, self.top)


def build_polygon(q: QuiverA, upper_height: Height = parabolic_height,
                  lower_height: Height | None = None) -> PolygonP:
    """Embed P(Q); upper and lower chains lie on the given concave height profiles."""
    lower_height = lower_height or upper_height
    part = barred_partition(q)
    top = q.n + 2
    coords = {0: (0, 0), top: (top, 0)}
    for k in part.upper:
        coords[k] = (k, upper_height(k, q.n))
    for k in part.lower:
        coords[k] = (k, -lower_height(k, q.n))
    ccw = (0, *sorted(part.lower), top, *sorted(part.upper, reverse=True))
    p = PolygonP(q, coords, ccw)
    if not is_strictly_convex(p):
        raise ValueError("height profile does not give a strictly convex polygon")
    return p


def alternative_polygon(q: QuiverA) -> PolygonP:
    """A second strictly convex embedding with different slopes, for invariance checks."""
    return build_polygon(q, parabolic_height, cubic_height)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def is_strictly_convex(p: PolygonP) -> bool:
    pts = [p.coords[v] for v in p.ccw_order]
    m = len(pts)
    if m == 3:
        return _cross(*pts) > 0
    return all(_cross(pts[k - 1], pts[k], pts[(k + 1) % m]) > 0 for k in range(m))


def boundary_edges(p: PolygonP) -> frozenset:
    order = p.ccw_order
    return frozenset(seg(order[k - 1], order[k]) for k in range(len(order)))


def rotate(p: PolygonP, s: Segment) -> Segment | None:
    """R(s): rotate both endpoints clockwise; None when the label order flips."""
    a, b = p.cw_next(s.i), p.cw_next(s.j)
    return Segment(a, b) if a < b else None


def rotate_inverse(p: PolygonP, s: Segment) -> Segment | None:
    a, b = p.ccw_next(s.i), p.ccw_next(s.j)
    return Segment(a, b) if a < b else None


def pivots(p: PolygonP, s: Segment) -> list[Segment]:
    out = []
    a = p.ccw_next(s.i)
    if a < s.j:
        out.append(Segment(a, s.j))
    b = p.ccw_next(s.j)
    if s.i < b:
        out.append(Segment(s.i, b))
    return out


def crossing(p: PolygonP, a: Segment, b: Segment) -> bool:
    """True iff the endpoints strictly interleave around the boundary."""
    if set(a) & set(b):
        return False
    pos = p.position
    lo, hi = sorted((pos[a.i], pos[a.j]))
    inside = [lo < pos[v] < hi for v in b]
    return inside[0] != inside[1]


def slope_less(p: PolygonP, a: Segment, b: Segment) -> bool:
    (dxa, dya), (dxb, dyb) = p.vector(a), p.vector(b)
    # dx > 0 for every segment of an x-monotone embedding
    return dya * dxb < dyb * dxa


@dataclass(frozen=True)
class SegmentQuiver:
    vertices: tuple
    arrows: frozenset
    translation: dict = field(compare=False)

    def successors(self, x) -> list:
        return [b for a, b in self.arrows if a == x]

    def predecessors(self, x) -> list:
        return [a for a, b in self.arrows if b == x]

    def translation_violations(self) -> list:
        """Vertices ``x`` in dom(R) where #(y->x) != #(R(x)->y) for some y."""
        bad = []
        for x, rx in self.translation.items():
            for y in self.vertices:
                if ((y, x) in self.arrows) != ((rx, y) in self.arrows):
                    bad.append((x, y))
        return bad


def segment_quiver(p: PolygonP) -> SegmentQuiver:
    arrows = frozenset((s, t) for s in p.segments for t in pivots(p, s))
    translation = {s: r for s in p.segments if (r := rotate(p, s)) is not None}
    return SegmentQuiver(p.segments, arrows, translation)


@dataclass(frozen=True)
class Triangulation:
    """A maximal noncrossing set of segments, boundary edges included."""
    edges: frozenset

    @classmethod
    def from_diagonals(cls, p: PolygonP, diagonals: Iterable) -> "Triangulation":
        return cls(boundary_edges(p) | frozenset(seg(*d) for d in diagonals))

    def diagonals(self, p: PolygonP) -> tuple:
        return tuple(sorted(self.edges - boundary_edges(p)))

    def key(self, p: PolygonP) -> tuple:
        return self.diagonals(p)

    def triangles(self) -> list[tuple]:
        verts = sorted({v for e in self.edges for v in e})
        adj = {v: set() for v in verts}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        out = []
        for a in verts:
            for b in adj[a]:
                if b <= a:
                    continue
                for c in adj[a] & adj[b]:
                    if c > b:
                        out.append((a, b, c))
        return sorted(out)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))


def enumerate_triangulations(p: PolygonP) -> Iterator[Triangulation]:
    """Every triangulation exactly once, by recursion on the apex over a root edge.

    The root is the boundary edge joining ccw positions 0 and m-1 (vertex 0 and
    its clockwise neighbour); apexes are visited in increasing ccw position.
    """
    order = p.ccw_order
    m = len(order)
    boundary = boundary_edges(p)

    def rec(lo: int, hi: int) -> Iterator[frozenset]:
        # triangulations of the sub-polygon on ccw positions lo..hi, base edge (lo, hi)
        if hi - lo < 2:
            yield frozenset()
            return
        for apex in range(lo + 1, hi):
            new = frozenset({seg(order[lo], order[apex]), seg(order[apex], order[hi])})
            for left in rec(lo, apex):
                for right in rec(apex, hi):
                    yield new | left | right

    for edges in rec(0, m - 1):
        yield Triangulation(boundary | edges)


def flip(p: PolygonP, t: Triangulation, d: Segment) -> Segment:
    """The diagonal replacing ``d`` in ``t``."""
    quad = [tri for tri in t.triangles() if d.i in tri and d.j in tri]
    if len(quad) != 2 or d in boundary_edges(p):
        raise ValueError(f"{d} is not a diagonal of the triangulation")
    (apex1,) = set(quad[0]) - set(d)
    (apex2,) = set(quad[1]) - set(d)
    return seg(apex1, apex2)


def is_noncrossing(p: PolygonP, edges: Iterable[Segment]) -> bool:
    edges = list(edges)
    return not any(crossing(p, a, b) for k, a in enumerate(edges) for b in edges[k + 1:])


def is_triangulation(p: PolygonP, edges: Iterable[Segment]) -> bool:
    edges = frozenset(edges)
    if not is_noncrossing(p, edges):
        return False
    return all(any(crossing(p, s, e) for e in edges) for s in p.segments if s not in edges)
