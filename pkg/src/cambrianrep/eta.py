"""The map from permutations to triangulations, its thin-representation twin, and weak order.

``eta`` walks a path from the lower to the upper boundary of P(Q) one vertex at
a time; ``eta_rep`` does the same thing with all-ones representations, toggling
one arrow per step. The two are implemented separately and compared in checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import pairwise, permutations
from typing import Sequence

import networkx as nx

from .mar import CambrianLattice, MarRep, build_lattice
from .polygon import PolygonP, Segment, Triangulation, boundary_edges, build_polygon
from .quiver import QuiverA, barred_partition
from .reps import IntervalModule

Permutation = tuple


def as_permutation(pi, size: int | None = None) -> Permutation:
    """Parse one-line notation from a digit string or a sequence of ints."""
    if isinstance(pi, str):
        text = pi.strip()
        parts = text.replace(",", " ").split() if (" " in text or "," in text) else list(text)
        try:
            pi = tuple(int(x) for x in parts)
        except ValueError as exc:
            raise ValueError(f"not a permutation: {text!r}") from exc
    pi = tuple(int(x) for x in pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {pi}")
    if size is not None and len(pi) != size:
        raise ValueError(f"expected a permutation of 1..{size}, got length {len(pi)}")
    return pi


def perm_str(pi: Permutation) -> str:
    if len(pi) < 10:
        return "".join(map(str, pi))
    return " ".join(map(str, pi))


def lambda_paths(q: QuiverA, pi) -> list[tuple]:
    pi = as_permutation(pi, q.n + 1)
    part = barred_partition(q)
    top = q.n + 2
    path = {0, top, *part.lower}
    out = [tuple(sorted(path))]
    for v in pi:
        if v in part.upper:
            path.add(v)
        else:
            path.remove(v)
        out.append(tuple(sorted(path)))
    return out


def path_segments(path: Sequence[int]) -> list[Segment]:
    return [Segment(a, b) for a, b in pairwise(path)]


def eta(q: QuiverA, pi) -> Triangulation:
    return Triangulation(frozenset(s for path in lambda_paths(q, pi) for s in path_segments(path)))


def eta_new_diagonals(q: QuiverA, p: PolygonP, pi) -> list[Segment]:
    """Diagonals in the order the paths first reach them."""
    bound = boundary_edges(p)
    seen, out = set(), []
    for path in lambda_paths(q, pi):
        for s in path_segments(path):
            if s not in bound and s not in seen:
                seen.add(s)
                out.append(s)
    return out


# -- thin representations --------------------------------------------------

@dataclass(frozen=True)
class ThinRep:
    """All-ones dimension vector; ``values[l]`` is 0 or 1 on arrow l."""
    quiver: QuiverA
    values: tuple

    def summands(self) -> list[IntervalModule]:
        out, start = [], 1
        for l, v in enumerate(self.values, start=1):
            if v == 0:
                out.append(IntervalModule(start, l))
                start = l + 1
        out.append(IntervalModule(start, self.quiver.n + 2))
        return out

    def toggled(self, l: int) -> "ThinRep":
        vals = list(self.values)
        vals[l - 1] ^= 1
        return ThinRep(self.quiver, tuple(vals))


def lambda_reps(q: QuiverA, pi) -> list[ThinRep]:
    """Start with 0 on lower-barred arrows; step k degenerates or extends at arrow π_k."""
    pi = as_permutation(pi, q.n + 1)
    cur = ThinRep(q, tuple(int(q.direction(l) == "R") for l in q.arrow_indices))
    out = [cur]
    for v in pi:
        cur = cur.toggled(v)
        out.append(cur)
    return out


def eta_rep(q: QuiverA, pi) -> MarRep:
    return MarRep(frozenset(m for rep in lambda_reps(q, pi) for m in rep.summands()))


# -- weak order and fibers -------------------------------------------------

def all_permutations(size: int) -> list[Permutation]:
    return list(permutations(range(1, size + 1)))


def weak_order_covers(pi) -> list[Permutation]:
    """Right weak order: swap positions k, k+1 when they form an ascent."""
    pi = as_permutation(pi)
    out = []
    for k in range(len(pi) - 1):
        if pi[k] < pi[k + 1]:
            nxt = list(pi)
            nxt[k], nxt[k + 1] = nxt[k + 1], nxt[k]
            out.append(tuple(nxt))
    return out


def inversion_mask(pi: Permutation) -> int:
    """Bitmask of value pairs (a<b) with b to the left of a."""
    size = len(pi)
    where = {v: k for k, v in enumerate(pi)}
    mask, bit = 0, 0
    for a in range(1, size + 1):
        for b in range(a + 1, size + 1):
            if where[b] < where[a]:
                mask |= 1 << bit
            bit += 1
    return mask


def weak_leq(a: Permutation, b: Permutation) -> bool:
    ma = inversion_mask(a)
    return ma & inversion_mask(b) == ma


def fiber_partition(q: QuiverA, p: PolygonP | None = None) -> dict:
    """Map the diagonal tuple of each triangulation to its fiber, in lexicographic order."""
    p = p or build_polygon(q)
    parts: dict = {}
    for pi in all_permutations(q.n + 1):
        parts.setdefault(eta(q, pi).diagonals(p), []).append(pi)
    return dict(sorted(parts.items()))


def fiber(q: QuiverA, t: Triangulation) -> set:
    return {pi for pi in all_permutations(q.n + 1) if eta(q, pi) == t}


@dataclass
class QuotientReport:
    quiver: QuiverA
    permutations: int
    classes: int
    triangulations: int
    convention: str = "right weak order"
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        state = "consistent" if self.ok else f"{len(self.violations)} violations"
        return (f"{self.quiver}: {self.permutations} permutations, {self.classes} fibers, "
                f"{self.triangulations} triangulations, {self.convention}: {state}")


def _is_interval(members: list, perms: list, masks: dict) -> bool:
    inside = set(members)
    lows = [a for a in members if all(masks[a] & masks[b] == masks[a] for b in members)]
    highs = [b for b in members if all(masks[a] & masks[b] == masks[a] for a in members)]
    if len(lows) != 1 or len(highs) != 1:
        return False
    lo, hi = masks[lows[0]], masks[highs[0]]
    between = {pi for pi in perms if lo & masks[pi] == lo and masks[pi] & hi == masks[pi]}
    return between == inside


def verify_cambrian_quotient(q: QuiverA, p: PolygonP | None = None,
                             lattice: CambrianLattice | None = None) -> QuotientReport:
    p = p or build_polygon(q)
    lattice = lattice or build_lattice(q, p, check=False)
    perms = all_permutations(q.n + 1)
    masks = {pi: inversion_mask(pi) for pi in perms}
    index = {frozenset(m.summands): k for k, m in enumerate(lattice.elements)}
    image = {pi: index[MarRep.from_triangulation(eta(q, pi)).summands] for pi in perms}
    fibers: dict = {}
    for pi in perms:
        fibers.setdefault(image[pi], []).append(pi)
    rep = QuotientReport(q, len(perms), len(fibers), len(lattice.elements))
    if len(fibers) != len(lattice.elements):
        rep.violations.append(f"η hits {len(fibers)} of {len(lattice.elements)} triangulations")
    g = nx.DiGraph()
    g.add_nodes_from(range(len(lattice.elements)))
    for pi in perms:
        for nxt in weak_order_covers(pi):
            a, b = image[pi], image[nxt]
            if a != b:
                g.add_edge(a, b)
            if not lattice.leq(a, b):
                rep.violations.append(f"{perm_str(pi)} ⋖ {perm_str(nxt)} but η images not ordered")
    if not nx.is_directed_acyclic_graph(g):
        rep.violations.append("induced relation on fibers has a cycle")
    else:
        reduced = set(nx.transitive_reduction(g).edges)
        if reduced != set(lattice.covers):
            rep.violations.append(
                f"quotient covers differ from lattice covers: "
                f"{sorted(reduced ^ set(lattice.covers))}")
    for k, members in sorted(fibers.items()):
        if not _is_interval(members, perms, masks):
            rep.violations.append(f"fiber {k} is not a weak order interval")
    return rep

