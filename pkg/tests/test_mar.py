import pytest
from hypothesis import given, settings

from cambrianrep.mar import (MarRep, almost_rigid_pair, approximation_cover, build_lattice,
                             covers_of, enumerate_mar, enumerate_mar_bruteforce, is_almost_rigid,
                             is_mar, maximal_mar, minimal_mar, slope_cover_keys)
from cambrianrep.polygon import (alternative_polygon, boundary_edges, build_polygon,
                                 enumerate_triangulations)
from cambrianrep.quiver import QuiverA
from cambrianrep.reps import F_map, IntervalModule as M, intervals

from conftest import orientations

CATALAN = [1, 2, 5, 14, 42, 132, 429]


def q_(s):
    return QuiverA.from_string(s)


def test_pair_examples(running):
    # 1 -> 2 -> 3: M(1,2), M(2,3) overlap, the extension middle is M(1,3) ⊕ S(2)
    assert not almost_rigid_pair(q_("RR"), M(1, 2), M(2, 3))
    assert almost_rigid_pair(q_("R"), M(1, 1), M(2, 2))
    assert almost_rigid_pair(running, M(1, 4), M(3, 5))
    assert almost_rigid_pair(running, M(3, 4), M(2, 4))
    with pytest.raises(ValueError):
        almost_rigid_pair(running, M(1, 4), M(1, 4))


def test_pair_is_symmetric(running):
    mods = intervals(running)
    for a in mods[::3]:
        for b in mods[::2]:
            if a != b:
                assert almost_rigid_pair(running, a, b) == almost_rigid_pair(running, b, a)


def test_is_mar_small():
    q = q_("R")
    assert is_mar(q, {M(1, 1), M(1, 2), M(2, 2)})
    assert is_almost_rigid(q, {M(1, 1), M(2, 2)})
    assert not is_mar(q, {M(1, 1), M(2, 2)})
    q = q_("RR")
    assert not is_almost_rigid(q, {M(1, 2), M(2, 3)})


@pytest.mark.parametrize("word,count", [("R", 1), ("RL", 2), ("RLR", 5), ("RRRLRL", 132)])
def test_enumeration_counts(word, count):
    assert len(enumerate_mar(q_(word))) == count


def test_zero_arrow_quiver_has_one_mar():
    mars = enumerate_mar(QuiverA(0, "R"))
    assert len(mars) == 1 and len(mars[0]) == 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bruteforce_matches_triangulations(n):
    from cambrianrep.quiver import all_orientations
    for q in all_orientations(n):
        geo = sorted((m.summands for m in enumerate_mar(q)), key=sorted)
        assert enumerate_mar_bruteforce(q) == geo


@given(orientations(max_n=3))
@settings(max_examples=20)
def test_every_mar_is_mar_and_has_2n_plus_3_summands(q):
    for m in enumerate_mar(q):
        assert len(m) == 2 * q.n + 3
        assert is_mar(q, m.summands)


@given(orientations(max_n=4))
@settings(max_examples=25)
def test_boundary_modules_lie_in_every_mar(q):
    p = build_polygon(q)
    bound = {F_map(s) for s in boundary_edges(p)}
    for m in enumerate_mar(q, p):
        assert bound <= m.summands


def test_rr_has_one_cover():
    q = q_("RR")
    p = build_polygon(q)
    mars = enumerate_mar(q, p)
    covers = [(m, c) for m in mars for c in covers_of(q, p, m)]
    assert len(covers) == 1
    (src, (dst, w)), = covers
    assert src.summands == minimal_mar(q) and dst.summands == maximal_mar(q)
    # 0 -> M(2,3) -> M(1,3) ⊕ S(2) -> M(1,2) -> 0
    assert w.sub == M(2, 3) and w.quot == M(1, 2) and set(w.middle) == {M(1, 3), M(2, 2)}


def test_running_quadrilateral_cover(running, running_polygon):
    # the crossing pair M(3,4) ⊂ M(1,4) ⊕ M(3,5) ↠ M(1,5)
    found = []
    for m in enumerate_mar(running, running_polygon):
        for other, w in covers_of(running, running_polygon, m):
            if (w.sub, w.quot) == (M(3, 4), M(1, 5)):
                found.append(w)
    assert found and all(set(w.middle) == {M(1, 4), M(3, 5)} for w in found)


@given(orientations(max_n=3, min_n=1))
@settings(max_examples=20)
def test_approximation_cover_agrees_with_flips(q):
    p = build_polygon(q)
    for m in enumerate_mar(q, p):
        geo = {(w.sub, other.summands) for other, w in covers_of(q, p, m)}
        alg = set()
        for m1 in m.summands:
            hit = approximation_cover(q, m, m1)
            if hit is not None:
                alg.add((m1, hit[0].summands))
        assert alg == geo


def test_approximation_cover_rejects_foreign_summand():
    q = q_("RL")
    m = enumerate_mar(q)[0]
    outside = next(x for x in intervals(q) if x not in m.summands)
    with pytest.raises(ValueError):
        approximation_cover(q, m, outside)


@pytest.mark.parametrize("word", ["R", "RL", "RR", "RLR", "RRL", "RRRLRL"])
def test_lattice_extremes(word):
    q = q_(word)
    lat = build_lattice(q)
    assert lat.ok, lat.violations
    assert lat.elements[lat.bottom].summands == minimal_mar(q)
    assert lat.elements[lat.top].summands == maximal_mar(q)
    assert len(lat.elements) == CATALAN[q.n]


def test_join_meet_laws():
    lat = build_lattice(q_("RLR"))
    size = len(lat.elements)
    for a in range(size):
        assert lat.join(a, a) == a and lat.meet(a, a) == a
        assert lat.join(a, lat.bottom) == a and lat.meet(a, lat.top) == a
        for b in range(size):
            j, m = lat.join(a, b), lat.meet(a, b)
            assert j == lat.join(b, a) and m == lat.meet(b, a)
            assert lat.leq(a, j) and lat.leq(b, j) and lat.leq(m, a) and lat.leq(m, b)
            assert lat.join(a, m) == a and lat.meet(a, j) == a


def test_linear_extension_indexing():
    lat = build_lattice(q_("RRL"))
    assert all(a < b for a, b in lat.covers)


def test_lattice_json_is_keyed_by_diagonals(running, running_polygon):
    lat = build_lattice(running, running_polygon, check=False)
    data = lat.to_json(running_polygon)
    assert len(data["elements"]) == 132
    assert data["elements"][data["bottom"]] is not None
    assert all(len(e) == running.n for e in data["elements"])


@pytest.mark.parametrize("word", ["RL", "RRL", "LRLR"])
def test_covers_survive_another_embedding(word):
    q = q_(word)
    assert slope_cover_keys(q, build_polygon(q)) == slope_cover_keys(q, alternative_polygon(q))


def test_mar_round_trip(running_polygon):
    for t in list(enumerate_triangulations(running_polygon))[:10]:
        m = MarRep.from_triangulation(t)
        assert m.triangulation() == t
        assert " ⊕ " in str(m)
