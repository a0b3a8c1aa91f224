"""Central charge from segment vectors, exact phases, stability and the derived window.

Phases are never turned into angles: two phases with equal shift are compared
by the sign of a 2D cross product, which is exact for rational vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .polygon import PolygonP, Segment, SegmentQuiver, rotate
from .quiver import QuiverA
from .reps import IntervalModule, K0Class, dim_vector, intervals, subrepresentation_supports


@dataclass(frozen=True)
class CentralCharge:
    simple_vectors: dict

    @classmethod
    def from_polygon(cls, p: PolygonP) -> "CentralCharge":
        return cls({x: p.vector(Segment(x - 1, x)) for x in p.quiver.vertices})

    def __call__(self, c: K0Class) -> tuple:
        if not any(c):
            raise ValueError("the zero class has no central charge")
        if any(v < 0 for v in c):
            raise ValueError(f"central charge is defined here on effective classes, got {c}")
        x = sum(k * self.simple_vectors[v][0] for v, k in enumerate(c, start=1))
        y = sum(k * self.simple_vectors[v][1] for v, k in enumerate(c, start=1))
        return (x, y)


def charge(p: PolygonP, c: K0Class) -> tuple:
    return CentralCharge.from_polygon(p)(c)


class Phase(NamedTuple):
    vector: tuple
    shift: int = 0

    def shifted(self, k: int) -> "Phase":
        return Phase(self.vector, self.shift + k)


def phase_less(a: Phase, b: Phase) -> bool:
    if a.shift != b.shift:
        return a.shift < b.shift
    (ax, ay), (bx, by) = a.vector, b.vector
    if ax <= 0 or bx <= 0:
        raise ValueError("phases are only defined for vectors in the strict right half plane")
    return ax * by - ay * bx > 0


def module_phase(p: PolygonP, m: IntervalModule, shift: int = 0) -> Phase:
    return Phase(charge(p, dim_vector(p.quiver, m)), shift)


def support_class(q: QuiverA, support: Iterable[int]) -> K0Class:
    s = set(support)
    return tuple(int(v in s) for v in q.vertices)


def destabilising_subsupports(q: QuiverA, p: PolygonP, m: IntervalModule) -> list[frozenset]:
    """Nonzero proper subrepresentations whose phase is not strictly below that of M."""
    whole = module_phase(p, m)
    full = frozenset(m.support)
    bad = []
    for s in subrepresentation_supports(q, m):
        if not s or s == full:
            continue
        if not phase_less(Phase(charge(p, support_class(q, s))), whole):
            bad.append(s)
    return bad


def is_stable(q: QuiverA, p: PolygonP, m: IntervalModule) -> bool:
    return not destabilising_subsupports(q, p, m)


# -- derived category window -----------------------------------------------

class ShiftedSegment(NamedTuple):
    segment: Segment
    shift: int

    def __str__(self):
        return f"({self.segment},{self.shift})"


def _place(a: int, b: int, shift: int) -> ShiftedSegment | None:
    if a == b:
        return None
    if a < b:
        return ShiftedSegment(Segment(a, b), shift)
    return ShiftedSegment(Segment(b, a), shift + 1)


def generalized_pivots(p: PolygonP, s: ShiftedSegment) -> list[ShiftedSegment]:
    """Move either endpoint counterclockwise; a reversed result moves up one shift."""
    i, j = s.segment
    out = []
    for a, b in ((p.ccw_next(i), j), (i, p.ccw_next(j))):
        placed = _place(a, b, s.shift)
        if placed is not None:
            out.append(placed)
    return out


def rotate_shifted(p: PolygonP, s: ShiftedSegment) -> ShiftedSegment:
    """R^Z: rotation, dropping one shift when the label order flips."""
    r = rotate(p, s.segment)
    if r is not None:
        return ShiftedSegment(r, s.shift)
    a, b = p.cw_next(s.segment.i), p.cw_next(s.segment.j)
    return ShiftedSegment(Segment(b, a), s.shift - 1)


def derived_window(q: QuiverA, p: PolygonP, shifts: Iterable[int] = (-1, 0, 1)) -> SegmentQuiver:
    """Restriction of the Z-indexed translation quiver to a finite band of shifts."""
    shifts = sorted(set(shifts))
    verts = tuple(ShiftedSegment(s, k) for k in shifts for s in p.segments)
    inside = set(verts)
    arrows = frozenset((v, w) for v in verts for w in generalized_pivots(p, v) if w in inside)
    translation = {}
    for v in verts:
        r = rotate_shifted(p, v)
        if r in inside:
            translation[v] = r
    return SegmentQuiver(verts, arrows, translation)


def shift_zero_copy(window: SegmentQuiver) -> SegmentQuiver:
    verts = tuple(v.segment for v in window.vertices if v.shift == 0)
    arrows = frozenset((a.segment, b.segment) for a, b in window.arrows
                       if a.shift == 0 and b.shift == 0)
    translation = {a.segment: b.segment for a, b in window.translation.items()
                   if a.shift == 0 and b.shift == 0}
    return SegmentQuiver(verts, arrows, translation)


def stability_table(q: QuiverA, p: PolygonP) -> list[tuple]:
    return [(m, charge(p, dim_vector(q, m)), is_stable(q, p, m)) for m in intervals(q)]
