import pytest
from hypothesis import given, settings, strategies as st

from cambrianrep.checks import (RUNNING_DIAGONALS, RUNNING_FIBER, RUNNING_LAMBDA,
                                RUNNING_LAMBDA_REPS, RUNNING_PERM)
from cambrianrep.eta import (ThinRep, all_permutations, as_permutation, eta, eta_new_diagonals,
                             eta_rep, fiber, fiber_partition, inversion_mask, lambda_paths,
                             lambda_reps, perm_str, verify_cambrian_quotient, weak_leq,
                             weak_order_covers)
from cambrianrep.mar import MarRep
from cambrianrep.polygon import build_polygon, enumerate_triangulations, is_triangulation
from cambrianrep.quiver import QuiverA
from cambrianrep.reps import IntervalModule as M

from conftest import orientations


def q_(s):
    return QuiverA.from_string(s)


def test_parse_permutations():
    assert as_permutation("453126") == (4, 5, 3, 1, 2, 6)
    assert as_permutation("4 5 3 1 2 6") == (4, 5, 3, 1, 2, 6)
    assert as_permutation([2, 1]) == (2, 1)
    assert perm_str((4, 5, 3, 1, 2, 6)) == "453126"
    for bad in ("4531", "112", "abc", "0"):
        with pytest.raises(ValueError):
            as_permutation(bad, 3)


def test_single_arrow_paths():
    assert lambda_paths(q_("R"), "1") == [(0, 2), (0, 1, 2)]
    assert lambda_paths(q_("L"), "1") == [(0, 1, 2), (0, 2)]


def test_running_paths(running, running_polygon):
    assert lambda_paths(running, RUNNING_PERM) == RUNNING_LAMBDA
    t = eta(running, RUNNING_PERM)
    assert {tuple(d) for d in t.diagonals(running_polygon)} == RUNNING_DIAGONALS
    assert [tuple(d) for d in eta_new_diagonals(running, running_polygon, RUNNING_PERM)] == [
        (0, 6), (0, 5), (5, 6), (0, 3), (1, 3)]


def test_running_fiber(running):
    found = fiber(running, eta(running, RUNNING_PERM))
    assert {perm_str(pi) for pi in found} == RUNNING_FIBER


def test_running_thin_reps(running):
    reps = lambda_reps(running, RUNNING_PERM)
    assert [[str(m) for m in r.summands()] for r in reps] == RUNNING_LAMBDA_REPS


def test_thin_rep_toggle():
    r = ThinRep(q_("RR"), (1, 1))
    assert r.summands() == [M(1, 3)]
    assert r.toggled(1).summands() == [M(1, 1), M(2, 3)]
    assert r.toggled(1).toggled(1) == r


@pytest.mark.parametrize("word", ["R", "L", "RLL", "RRL", "LRLR"])
def test_eta_rep_is_F_of_eta(word):
    q = q_(word)
    for pi in all_permutations(q.n + 1):
        assert eta_rep(q, pi) == MarRep.from_triangulation(eta(q, pi))


def test_weak_order_covers():
    assert set(weak_order_covers("123")) == {(2, 1, 3), (1, 3, 2)}
    assert weak_order_covers("321") == []


@given(st.permutations(range(1, 7)))
def test_cover_count_is_ascent_count(pi):
    ascents = sum(a < b for a, b in zip(pi, pi[1:]))
    covers = weak_order_covers(tuple(pi))
    assert len(covers) == ascents
    mask = inversion_mask(tuple(pi))
    for c in covers:
        assert weak_leq(tuple(pi), c) and not weak_leq(c, tuple(pi))
        assert bin(inversion_mask(c)).count("1") == bin(mask).count("1") + 1


@given(orientations(max_n=4))
@settings(max_examples=25)
def test_eta_lands_on_triangulations(q):
    p = build_polygon(q)
    parts = fiber_partition(q, p)
    assert sum(len(v) for v in parts.values()) == len(all_permutations(q.n + 1))
    every = {t.diagonals(p) for t in enumerate_triangulations(p)}
    assert set(parts) == every
    for pi in parts[next(iter(parts))][:3]:
        assert is_triangulation(p, eta(q, pi).edges)


@pytest.mark.parametrize("word", ["R", "RL", "RLR", "RRL", "LRLR", "RRRL"])
def test_quotient_small(word):
    rep = verify_cambrian_quotient(q_(word))
    assert rep.ok, rep.violations
    assert rep.classes == rep.triangulations
    assert "consistent" in rep.summary()


def test_fiber_partition_is_sorted(running):
    keys = list(fiber_partition(q_("RLR")))
    assert keys == sorted(keys)
