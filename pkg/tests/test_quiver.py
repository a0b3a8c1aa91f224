import json

import pytest
from hypothesis import given

from cambrianrep.polygon import boundary_edges, build_polygon
from cambrianrep.quiver import (PathKind, QuiverA, QuiverError, all_orientations,
                                barred_partition, cohook, doubled_quiver, hook,
                                maximal_monotone_paths)
from cambrianrep.reps import F_inv, IntervalModule

from conftest import orientations


def test_json_round_trip():
    q = QuiverA.from_json('{"n": 5, "directions": "RRRLRL"}')
    assert q == QuiverA.from_string("rrrlrl")
    assert QuiverA.from_json(json.dumps(q.to_json())) == q
    assert q.arrows() == [(1, 2), (2, 3), (3, 4), (5, 4), (5, 6), (7, 6)]


@pytest.mark.parametrize("payload", [
    {"n": 2, "directions": "RL"},
    {"n": -1, "directions": ""},
    {"n": 1, "directions": "RX"},
    {"directions": "RL"},
])
def test_rejects_malformed_quivers(payload):
    with pytest.raises(QuiverError):
        QuiverA.from_json(payload)


def test_orientation_count():
    assert [len(list(all_orientations(n))) for n in range(5)] == [2, 4, 8, 16, 32]


@pytest.mark.parametrize("directions, upper, lower", [
    ("RRRLRL", {1, 2, 3, 5}, {4, 6}),
    ("R", {1}, set()),
    ("LL", set(), {1, 2}),
])
def test_barred_partition(directions, upper, lower):
    part = barred_partition(QuiverA.from_string(directions))
    assert part.upper == upper and part.lower == lower


def test_hooks_on_running_example(running):
    # arrow 2: 2 -> 3, arrow 4: 4 <- 5, arrow 1: 1 -> 2, arrow 6: 6 <- 7
    assert hook(running, 2).support == (2, 2)
    assert hook(running, 4).support == (5, 6)
    assert cohook(running, 1).support == (2, 2)
    assert cohook(running, 6).support == (5, 6)


def test_hooks_on_single_arrow():
    q = QuiverA.from_string("R")
    assert hook(q, 1).support == (1, 1)
    assert cohook(q, 1).support == (2, 2)


def test_monotone_paths_small():
    paths = maximal_monotone_paths(QuiverA.from_string("R"))
    assert [(p.kind, p.start, p.end) for p in paths] == [
        (PathKind.INCREASING, 1, 2), (PathKind.DECREASING, 1, 1), (PathKind.DECREASING, 2, 2)]
    mirror = maximal_monotone_paths(QuiverA.from_string("L"))
    assert sorted((p.kind.value, p.support) for p in mirror) == [
        ("decreasing", (1, 2)), ("increasing", (1, 1)), ("increasing", (2, 2))]
    assert len(maximal_monotone_paths(QuiverA.from_string("RRRLRL"))) == 8


@given(orientations(7))
def test_n_plus_three_monotone_paths(q):
    assert len(maximal_monotone_paths(q)) == q.n + 3


@given(orientations(7))
def test_hooks_are_maximal_paths(q):
    hooks = {p.support for l in q.arrow_indices for p in (hook(q, l), cohook(q, l))}
    maximal = {p.support for p in maximal_monotone_paths(q)}
    if q.is_linear():
        assert hooks == {(v, v) for v in q.vertices}
    else:
        assert hooks == maximal


@given(orientations(7))
def test_boundary_edges_match_monotone_paths(q):
    p = build_polygon(q)
    lower = {(a, b) for a, b in zip(p.lower_path(), p.lower_path()[1:])}
    upper = {(a, b) for a, b in zip(p.upper_path(), p.upper_path()[1:])}
    assert lower | upper == set(boundary_edges(p))
    paths = maximal_monotone_paths(q)
    inc = {tuple(F_inv(IntervalModule(*x.support))) for x in paths if x.kind is PathKind.INCREASING}
    dec = {tuple(F_inv(IntervalModule(*x.support))) for x in paths if x.kind is PathKind.DECREASING}
    assert inc == lower and dec == upper


def test_doubled_quiver():
    assert doubled_quiver(QuiverA.from_string("RL")).directions == "RRLL"
    assert doubled_quiver(QuiverA.from_string("R")).directions == "RR"
    big = doubled_quiver(QuiverA.from_string("RRRLRL"))
    assert big.num_vertices == 13 and big.directions == "RRRRRRLLRRLL"


@given(orientations(6))
def test_doubled_quiver_sizes(q):
    qq = doubled_quiver(q)
    assert len(qq.arrows()) == 2 * (q.n + 1) and qq.num_vertices == 2 * q.n + 3
