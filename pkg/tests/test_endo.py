import pytest
from hypothesis import given, settings

from cambrianrep.checks import RL_CLUSTER_TILTED, RL_TILTED
from cambrianrep.endo import (AlgebraQuiver, adjacency_quiver, doubled_image,
                              gabriel_quiver_of_end, hom_preserved_by_doubling, hom_table,
                              irreducible_in, nonzero_composite, segment_label, tilted_quiver,
                              triangle_cycles, verify_mar_quivers)
from cambrianrep.mar import MarRep, enumerate_mar
from cambrianrep.polygon import Segment, build_polygon
from cambrianrep.quiver import QuiverA, doubled_quiver
from cambrianrep.reps import F_map, IntervalModule as M

from conftest import orientations

RL_MAR = frozenset({M(1, 1), M(1, 2), M(2, 2), M(2, 3), M(3, 3)})


def q_(s):
    return QuiverA.from_string(s)


def named(aq: AlgebraQuiver) -> set:
    def lab(v):
        return str(v if isinstance(v, M) else F_map(v))
    return {(lab(a), lab(b)) for a, b in aq.arrows}


@pytest.fixture
def rl():
    q = q_("RL")
    p = build_polygon(q)
    return q, p, MarRep(RL_MAR)


def test_rl_quivers(rl):
    q, p, t = rl
    tri = t.triangulation()
    assert named(adjacency_quiver(p, tri)) == RL_CLUSTER_TILTED
    assert named(tilted_quiver(p, tri)) == RL_TILTED
    assert named(gabriel_quiver_of_end(q, t)) == RL_TILTED


def test_triangle():
    q = q_("R")
    p = build_polygon(q)
    (t,) = enumerate_mar(q, p)
    adj = adjacency_quiver(p, t.triangulation())
    assert len(adj.three_cycles()) == 1 and len(adj.arrows) == 3
    expected = {("S(1)", "M(1,2)"), ("M(1,2)", "S(2)")}
    assert named(tilted_quiver(p, t.triangulation())) == expected
    assert named(gabriel_quiver_of_end(q, t)) == expected


def test_triangle_cycles_are_ccw(running_polygon):
    t = enumerate_mar(running_polygon.quiver, running_polygon)[0].triangulation()
    for cyc in triangle_cycles(running_polygon, t):
        assert len(cyc) == 3 and len(set(cyc)) == 3


def test_algebra_quiver_rejects_loops():
    with pytest.raises(ValueError):
        AlgebraQuiver((1,), frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        AlgebraQuiver((1,), frozenset({(1, 2)}))


def test_opposite_is_involution(rl):
    q, p, t = rl
    g = gabriel_quiver_of_end(q, t)
    assert g.opposite().opposite() == g
    assert named(g.opposite()) == {(b, a) for a, b in named(g)}


def test_labels():
    assert segment_label(Segment(0, 2)) == "γ(0,2) / M(1,2)"


def test_composites_and_irreducibility():
    q = q_("RR")
    # 1 -> 2 -> 3: S(3) ⊂ M(2,3) ⊂ M(1,3), composite is the inclusion
    assert nonzero_composite(q, M(3, 3), M(2, 3), M(1, 3))
    # M(2,3) ↠ S(2) ⊂ M(1,2): the composite kills S(3) but not S(2)
    assert nonzero_composite(q, M(2, 3), M(2, 2), M(1, 2))
    assert not nonzero_composite(q, M(3, 3), M(2, 3), M(2, 2))
    mods = [M(3, 3), M(2, 3), M(1, 3)]
    assert irreducible_in(q, mods, M(3, 3), M(2, 3))
    assert not irreducible_in(q, mods, M(3, 3), M(1, 3))
    assert not irreducible_in(q, mods, M(1, 3), M(3, 3))


def test_doubling():
    q = q_("RL")
    qq = doubled_quiver(q)
    assert qq.directions == "RRLL" and qq.n == 3
    assert doubled_image(M(2, 3)) == M(3, 5)
    assert doubled_image(M(1, 1)) == M(1, 1)


@pytest.mark.parametrize("word", ["R", "L", "RL", "LR", "RRL"])
def test_doubling_preserves_hom_oracle(word):
    assert hom_preserved_by_doubling(q_(word), oracle=True) == []


@given(orientations(max_n=4))
@settings(max_examples=20)
def test_doubling_preserves_hom(q):
    assert hom_preserved_by_doubling(q) == []


@pytest.mark.parametrize("word", ["R", "RL", "LR", "RRL", "LRLR"])
def test_structural_report(word):
    rep = verify_mar_quivers(q_(word))
    assert rep.ok, rep.failures()
    kinds = rep.relation_kinds()
    assert kinds["commutativity"] == 0
    for r in rep.results:
        assert all(e.zero + e.commutative == 1 for e in r.relations)


@given(orientations(max_n=3))
@settings(max_examples=15)
def test_hom_table_square(q):
    t = enumerate_mar(q)[-1]
    table = hom_table(q, t.summands)
    assert len(table) == len(t) and all(row[k] == 1 for k, row in enumerate(table))
