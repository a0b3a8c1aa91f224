"""Type A quivers, their barred partition, hooks/cohooks and the doubled quiver.

A quiver of type A_{n+2} has vertices ``1..n+2``; arrow ``l`` joins ``l`` and
``l+1`` and points right (``l -> l+1``) or left (``l <- l+1``).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

RIGHT = "R"
LEFT = "L"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class QuiverA:
    n: int
    directions: str

    def __post_init__(self):
        if self.n < 0:
            raise QuiverError(f"n must be non-negative, got {self.n}")
        if len(self.directions) != self.n + 1:
            raise QuiverError(
                f"expected {self.n + 1} direction marks for n={self.n}, got {self.directions!r}")
        if set(self.directions) - {RIGHT, LEFT}:
            raise QuiverError(f"direction marks must be R or L, got {self.directions!r}")

    @classmethod
    def from_string(cls, directions: str) -> "QuiverA":
        directions = directions.strip().upper()
        return cls(len(directions) - 1, directions)

    @classmethod
    def from_json(cls, data) -> "QuiverA":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n, directions = int(data["n"]), str(data["directions"])
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"malformed quiver JSON: {data!r}") from exc
        return cls(n, directions)

    def to_json(self) -> dict:
        return {"n": self.n, "directions": self.directions}

    @property
    def num_vertices(self) -> int:
        return self.n + 2

    @property
    def vertices(self) -> range:
        return range(1, self.n + 3)

    @property
    def arrow_indices(self) -> range:
        return range(1, self.n + 2)

    def direction(self, l: int) -> str:
        return self.directions[l - 1]

    def arrow(self, l: int) -> tuple[int, int]:
        """(source, target) of arrow ``l``."""
        if not 1 <= l <= self.n + 1:
            raise QuiverError(f"no arrow {l} in a quiver with {self.n + 1} arrows")
        return (l, l + 1) if self.direction(l) == RIGHT else (l + 1, l)

    def arrows(self) -> list[tuple[int, int]]:
        return [self.arrow(l) for l in self.arrow_indices]

    def is_linear(self) -> bool:
        return len(set(self.directions)) == 1

    def __str__(self):
        return self.directions


def all_orientations(n: int) -> Iterator[QuiverA]:
    """Every orientation of A_{n+2}, in lexicographic order of direction strings."""
    for marks in itertools.product((LEFT, RIGHT), repeat=n + 1):
        yield QuiverA(n, "".join(marks))


class BarredPartition(NamedTuple):
    upper: frozenset
    lower: frozenset


def barred_partition(q: QuiverA) -> BarredPartition:
    upper = frozenset(l for l in q.arrow_indices if q.direction(l) == RIGHT)
    lower = frozenset(l for l in q.arrow_indices if q.direction(l) == LEFT)
    return BarredPartition(upper, lower)


class PathKind(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class MonotonePath(NamedTuple):
    kind: PathKind
    start: int
    end: int

    @property
    def support(self) -> tuple[int, int]:
        return (min(self.start, self.end), max(self.start, self.end))

    def __str__(self):
        if self.start == self.end:
            return f"e{self.start}"
        step = "->" if self.kind is PathKind.INCREASING else "<-"
        lo, hi = self.support
        return step.join(str(v) for v in range(lo, hi + 1))


def _out_neighbour(q: QuiverA, x: int, skip: int | None) -> int | None:
    """The unique vertex reached from ``x`` by an arrow other than ``skip``."""
    for l in (x - 1, x):
        if l == skip or not 1 <= l <= q.n + 1:
            continue
        s, t = q.arrow(l)
        if s == x:
            return t
    return None


def _in_neighbour(q: QuiverA, y: int, skip: int | None) -> int | None:
    for l in (y - 1, y):
        if l == skip or not 1 <= l <= q.n + 1:
            continue
        s, t = q.arrow(l)
        if t == y:
            return s
    return None


def _constant_kind(q: QuiverA, x: int) -> PathKind:
    # e_x is a maximal increasing path iff no right-pointing arrow touches x
    touching = [l for l in (x - 1, x) if 1 <= l <= q.n + 1]
    if all(q.direction(l) == LEFT for l in touching):
        return PathKind.INCREASING
    return PathKind.DECREASING


def _walk(q: QuiverA, x: int, skip: int, forward: bool) -> MonotonePath:
    step = _out_neighbour if forward else _in_neighbour
    end = x
    nxt = step(q, x, skip)
    while nxt is not None:
        prev, end = end, nxt
        # the walk never turns back, so only the arrow just used must be avoided
        nxt = step(q, end, min(prev, end))
    if end == x:
        return MonotonePath(_constant_kind(q, x), x, x)
    if forward:
        kind = PathKind.INCREASING if end > x else PathKind.DECREASING
        return MonotonePath(kind, x, end)
    kind = PathKind.INCREASING if end < x else PathKind.DECREASING
    return MonotonePath(kind, end, x)


def hook(q: QuiverA, l: int) -> MonotonePath:
    """Maximal path starting at the source of arrow ``l`` and avoiding it."""
    s, _ = q.arrow(l)
    return _walk(q, s, l, forward=True)


def cohook(q: QuiverA, l: int) -> MonotonePath:
    """Maximal path ending at the target of arrow ``l`` and avoiding it."""
    _, t = q.arrow(l)
    return _walk(q, t, l, forward=False)


def _runs(q: QuiverA, mark: str) -> list[tuple[int, int]]:
    """Maximal blocks ``(first, last)`` of consecutive arrows with direction ``mark``."""
    runs = []
    for is_mark, block in itertools.groupby(q.arrow_indices, key=lambda l: q.direction(l) == mark):
        if is_mark:
            block = list(block)
            runs.append((block[0], block[-1]))
    return runs


def maximal_monotone_paths(q: QuiverA) -> list[MonotonePath]:
    """All maximal increasing paths followed by all maximal decreasing paths."""
    paths = []
    for kind, mark in ((PathKind.INCREASING, RIGHT), (PathKind.DECREASING, LEFT)):
        runs = _runs(q, mark)
        covered = set()
        found = []
        for first, last in runs:
            covered.update(range(first, last + 2))
            if kind is PathKind.INCREASING:
                found.append(MonotonePath(kind, first, last + 1))
            else:
                found.append(MonotonePath(kind, last + 1, first))
        found += [MonotonePath(kind, v, v) for v in q.vertices if v not in covered]
        paths += sorted(found, key=lambda p: p.support)
    return paths


def doubled_quiver(q: QuiverA) -> QuiverA:
    """Each arrow becomes a length-two path; vertex ``i`` is relabelled ``2i-1``."""
    return QuiverA(2 * q.n + 1, "".join(d + d for d in q.directions))
