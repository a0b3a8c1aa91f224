"""Property sweeps behind the ``check`` subcommand and the acceptance tests.

Each criterion function takes an upper bound on n and returns a
:class:`CheckResult`. Sweeps over orientations can be fanned out to worker
processes; results are merged in sorted orientation order so output does not
depend on scheduling.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable

from . import endo, eta as eta_mod, mar, polygon as poly, reps, stability
from .linalg import ext_dim_general
from .quiver import QuiverA, all_orientations

RUNNING_EXAMPLE = "RRRLRL"
RUNNING_PERM = "453126"
RUNNING_DIAGONALS = {(0, 6), (0, 5), (5, 6), (0, 3), (1, 3)}
RUNNING_LAMBDA = [
    (0, 4, 6, 7), (0, 6, 7), (0, 5, 6, 7), (0, 3, 5, 6, 7), (0, 1, 3, 5, 6, 7),
    (0, 1, 2, 3, 5, 6, 7), (0, 1, 2, 3, 5, 7),
]
RUNNING_FIBER = {"453126", "453162", "453612", "456312"}
RUNNING_LAMBDA_REPS = [
    ["M(1,4)", "M(5,6)", "S(7)"],
    ["M(1,6)", "S(7)"],
    ["M(1,5)", "S(6)", "S(7)"],
    ["M(1,3)", "M(4,5)", "S(6)", "S(7)"],
    ["S(1)", "M(2,3)", "M(4,5)", "S(6)", "S(7)"],
    ["S(1)", "S(2)", "S(3)", "M(4,5)", "S(6)", "S(7)"],
    ["S(1)", "S(2)", "S(3)", "M(4,5)", "M(6,7)"],
]
# the two short exact sequences drawn for the running example
SEQUENCE_SHARED_ENDPOINT = "0→M(3,4)→M(2,4)→S(2)→0"
SEQUENCE_CROSSING = "0→M(3,4)→M(1,4)⊕M(3,5)→M(1,5)→0"
# quivers of End(T) for Q = RL and T = S(1) ⊕ M(1,2) ⊕ S(2) ⊕ M(2,3) ⊕ S(3)
RL_TILTED = {("S(3)", "M(2,3)"), ("M(2,3)", "S(2)"), ("M(1,2)", "S(2)"), ("S(1)", "M(1,2)")}
RL_CLUSTER_TILTED = RL_TILTED | {("S(2)", "S(3)"), ("S(2)", "S(1)")}


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        state = "PASS" if self.ok else "FAIL"
        return f"[{state}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _orientation_keys(n_max: int, n_min: int = 0) -> list[str]:
    return [q.directions for n in range(n_min, n_max + 1) for q in all_orientations(n)]


def _sweep(fn: Callable[[str], list], keys: list[str], jobs: int = 1) -> dict:
    """Run ``fn`` per orientation; returns {directions: problems} for the failures."""
    if jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(fn, keys, chunksize=max(1, len(keys) // (4 * jobs))))
    else:
        out = [fn(k) for k in keys]
    return {k: v for k, v in sorted(zip(keys, out)) if v}


def _summarise(bad: dict, total: int, what: str) -> tuple[bool, str]:
    if not bad:
        return True, f"{total} orientations, {what}"
    first = next(iter(bad))
    return False, f"{len(bad)}/{total} orientations fail; {first}: {bad[first][:3]}"


def _q(directions: str) -> QuiverA:
    return QuiverA.from_string(directions)


# -- 1, 2: the running example ---------------------------------------------

def criterion_1(n_max: int | None = None, **_) -> tuple[bool, str]:
    q = _q(RUNNING_EXAMPLE)
    p = poly.build_polygon(q)
    paths = eta_mod.lambda_paths(q, RUNNING_PERM)
    diags = {tuple(d) for d in eta_mod.eta(q, RUNNING_PERM).diagonals(p)}
    ok = paths == RUNNING_LAMBDA and diags == RUNNING_DIAGONALS
    return ok, f"diagonals {sorted(diags)}, {len(paths)} λ-paths"


def criterion_2(n_max: int | None = None, **_) -> tuple[bool, str]:
    q = _q(RUNNING_EXAMPLE)
    t = eta_mod.eta(q, RUNNING_PERM)
    found = {eta_mod.perm_str(pi) for pi in eta_mod.fiber(q, t)}
    return found == RUNNING_FIBER, f"fiber {sorted(found)} from a sweep of S_6"


# -- 3: Catalan counts -----------------------------------------------------

def _c3_one(directions: str, brute_max: int = 3, geometry_max: int = 4) -> list:
    q = _q(directions)
    n = q.n
    p = poly.build_polygon(q)
    tris = list(poly.enumerate_triangulations(p))
    problems = []
    catalan = comb(2 * n + 2, n + 1) // (n + 2)
    if len(tris) != catalan or len(set(tris)) != catalan:
        problems.append(f"{len(tris)} triangulations, expected {catalan}")
    if any(len(t) != 2 * n + 3 for t in tris):
        problems.append("a mar without 2n+3 summands")
    if n <= geometry_max and not all(poly.is_triangulation(p, t.edges) for t in tris):
        problems.append("enumerated edge set is not a triangulation")
    if n <= brute_max:
        geo = {frozenset(m.summands) for m in mar.enumerate_mar(q, p)}
        brute = set(mar.enumerate_mar_bruteforce(q))
        if geo != brute:
            problems.append(f"triangulations and brute force differ by {len(geo ^ brute)} sets")
    return problems


def criterion_3(n_max: int = 6, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    bad = _sweep(_c3_one, keys, jobs)
    return _summarise(bad, len(keys), f"Catalan counts n≤{n_max}, brute force n≤{min(3, n_max)}")


# -- 4, 5: AR quiver and meshes --------------------------------------------

def _c4_one(directions: str) -> list:
    q = _q(directions)
    p = poly.build_polygon(q)
    sq = poly.segment_quiver(p)
    ar = reps.ar_quiver(q)
    problems = []
    if {reps.F_map(s) for s in sq.vertices} != set(ar.vertices):
        problems.append("vertex sets differ")
    image = frozenset((reps.F_map(a), reps.F_map(b)) for a, b in sq.arrows)
    if image != ar.arrows:
        problems.append(f"arrows differ: {sorted(image ^ ar.arrows)[:3]}")
    moved = {reps.F_map(s): reps.F_map(r) for s, r in sq.translation.items()}
    if moved != ar.tau:
        problems.append("F∘R differs from τ∘F")
    undefined = {reps.F_map(s) for s in sq.vertices if s not in sq.translation}
    if undefined != {reps.projective(q, x) for x in q.vertices}:
        problems.append("R undefined off the projectives")
    if sq.translation_violations():
        problems.append("segment quiver is not a translation quiver")
    return problems


def criterion_4(n_max: int = 5, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c4_one, keys, jobs), len(keys), f"segment quiver = AR quiver, n≤{n_max}")


def _c5_one(directions: str) -> list:
    rep = reps.verify_mesh_relations(_q(directions))
    return [f"mesh at {r.vertex}: {r.signed_sum}, exact={r.exact}" for r in rep.failures()]


def criterion_5(n_max: int = 5, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c5_one, keys, jobs), len(keys), f"all mesh sums vanish, n≤{n_max}")


# -- 6: stability ----------------------------------------------------------

def _c6_one(directions: str) -> list:
    q = _q(directions)
    p = poly.build_polygon(q)
    return [str(m) for m in reps.intervals(q) if not stability.is_stable(q, p, m)]


def criterion_6(n_max: int = 6, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c6_one, keys, jobs), len(keys),
                      f"every interval module stable, n≤{n_max}")


# -- 7: extensions ---------------------------------------------------------

def sequence_string(sub, shape, quot) -> str:
    middle = "⊕".join(str(m) for m in shape.middle)
    return f"0→{sub}→{middle}→{quot}→0"


def _c7_one(directions: str, oracle: bool = True) -> list:
    q = _q(directions)
    p = poly.build_polygon(q)
    mods = reps.intervals(q)
    problems = []
    for a in mods:
        for b in mods:
            e = reps.ext_dim(q, a, b)
            shape = reps.middle_terms(q, b, a)
            if (e == 0) != (shape.shape is reps.Shape.NONE) or e > 1:
                problems.append(f"Ext({a},{b})={e} but middle term {shape}")
                continue
            if e and reps.class_of(q, shape.middle) != reps.class_of(q, [a, b]):
                problems.append(f"middle term of {b}->?->{a} has the wrong class")
            if oracle:
                if e != ext_dim_general(reps.as_representation(q, a), reps.as_representation(q, b)):
                    problems.append(f"Ext({a},{b}) disagrees with the linear-system oracle")
                if e and reps.extension_middle_oracle(q, b, a) != {m: 1 for m in shape.middle}:
                    problems.append(f"middle term of {b}->?->{a} disagrees with the oracle")
            if a != b:
                cross = poly.crossing(p, reps.F_inv(a), reps.F_inv(b))
                if mar.almost_rigid_pair(q, a, b) == cross:
                    problems.append(f"almost rigid({a},{b}) vs crossing={cross}")
    return problems


def _c7_oracle(directions: str) -> list:
    return _c7_one(directions, True)


def _c7_plain(directions: str) -> list:
    return _c7_one(directions, False)


def criterion_7(n_max: int = 5, jobs: int = 1, oracle: bool = True, **_) -> tuple[bool, str]:
    q = _q(RUNNING_EXAMPLE)
    m = reps.IntervalModule
    seqs = [sequence_string(m(3, 4), reps.middle_terms(q, m(3, 4), m(2, 2)), m(2, 2)),
            sequence_string(m(3, 4), reps.middle_terms(q, m(3, 4), m(1, 5)), m(1, 5))]
    examples_ok = seqs == [SEQUENCE_SHARED_ENDPOINT, SEQUENCE_CROSSING]
    keys = _orientation_keys(n_max)
    ok, detail = _summarise(_sweep(_c7_oracle if oracle else _c7_plain, keys, jobs), len(keys),
                            f"all ordered pairs n≤{n_max}, oracle {'on' if oracle else 'off'}")
    return ok and examples_ok, f"{detail}; {seqs[0]}; {seqs[1]}"


# -- 8, 9: covers and the lattice ------------------------------------------

def _c8_one(directions: str) -> list:
    q = _q(directions)
    p = poly.build_polygon(q)
    problems = []
    for t in mar.enumerate_mar(q, p):
        slope = {frozenset(o.summands) for o, _ in mar.covers_of(q, p, t)}
        approx = set()
        for m1 in t.sorted_summands():
            found = mar.approximation_cover(q, t, m1)
            if found is not None:
                approx.add(frozenset(found[0].summands))
        if slope != approx:
            problems.append(f"{t}: {len(slope)} slope covers vs {len(approx)} approximation covers")
    return problems


def criterion_8(n_max: int = 4, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c8_one, keys, jobs), len(keys),
                      f"slope covers = approximation covers, n≤{n_max}")


def _c9_one(directions: str) -> list:
    q = _q(directions)
    p = poly.build_polygon(q)
    lat = mar.build_lattice(q, p)
    problems = list(lat.violations)
    if lat.ok:
        if lat.elements[lat.bottom].summands != mar.minimal_mar(q):
            problems.append("minimum is not projectives + hooks/cohooks")
        if lat.elements[lat.top].summands != mar.maximal_mar(q):
            problems.append("maximum is not injectives + hooks/cohooks")
    problems += eta_mod.verify_cambrian_quotient(q, p, lat).violations
    return problems


def criterion_9(n_max: int = 5, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c9_one, keys, jobs), len(keys),
                      f"lattice with expected min/max and weak order quotient, n≤{n_max}")


# -- 10: η^rep -------------------------------------------------------------

def _c10_one(directions: str) -> list:
    q = _q(directions)
    return [eta_mod.perm_str(pi) for pi in eta_mod.all_permutations(q.n + 1)
            if eta_mod.eta_rep(q, pi) != mar.MarRep.from_triangulation(eta_mod.eta(q, pi))]


def criterion_10(n_max: int = 4, jobs: int = 1, **_) -> tuple[bool, str]:
    q = _q(RUNNING_EXAMPLE)
    lists = [[str(m) for m in r.summands()] for r in eta_mod.lambda_reps(q, RUNNING_PERM)]
    keys = _orientation_keys(n_max)
    ok, detail = _summarise(_sweep(_c10_one, keys, jobs), len(keys), f"η^rep = F∘η, n≤{n_max}")
    lists_ok = lists == RUNNING_LAMBDA_REPS
    return ok and lists_ok, f"{detail}; running example lists {'match' if lists_ok else 'differ'}"


# -- 11: endomorphism quivers ----------------------------------------------

def _c11_one(directions: str) -> list:
    q = _q(directions)
    problems = [f"{m}: {f}" for m, f in endo.verify_mar_quivers(q).failures()]
    if endo.hom_preserved_by_doubling(q):
        problems.append("doubling does not preserve hom dimensions")
    return problems


def _named(aq: endo.AlgebraQuiver) -> set:
    return {(str(a), str(b)) for a, b in aq.arrows}


def criterion_11(n_max: int = 4, jobs: int = 1, **_) -> tuple[bool, str]:
    q = _q("RL")
    p = poly.build_polygon(q)
    t = poly.Triangulation.from_diagonals(p, [(1, 2)])
    adj = _named(endo.adjacency_quiver(p, t).map_vertices(reps.F_map))
    til = _named(endo.tilted_quiver(p, t).map_vertices(reps.F_map))
    gab = _named(endo.gabriel_quiver_of_end(q, mar.MarRep.from_triangulation(t)))
    examples_ok = adj == RL_CLUSTER_TILTED and til == RL_TILTED and gab == RL_TILTED
    keys = _orientation_keys(n_max)
    ok, detail = _summarise(_sweep(_c11_one, keys, jobs), len(keys),
                            f"3-cycles, Gabriel = tilted, G preserves End, n≤{n_max}")
    return ok and examples_ok, f"{detail}; RL quivers {'match' if examples_ok else 'differ'}"


# -- 12: embedding independence --------------------------------------------

def _c12_one(directions: str) -> list:
    q = _q(directions)
    a = mar.slope_cover_keys(q, poly.build_polygon(q))
    b = mar.slope_cover_keys(q, poly.alternative_polygon(q))
    return [] if a == b else [f"{len(a ^ b)} covers differ"]


def criterion_12(n_max: int = 4, jobs: int = 1, **_) -> tuple[bool, str]:
    keys = _orientation_keys(n_max)
    return _summarise(_sweep(_c12_one, keys, jobs), len(keys),
                      f"cover set unchanged under a second embedding, n≤{n_max}")


CRITERIA = [
    (1, "running example η", criterion_1, None),
    (2, "fiber of the running example", criterion_2, None),
    (3, "Catalan counts", criterion_3, 6),
    (4, "AR quiver from segments", criterion_4, 5),
    (5, "mesh relations", criterion_5, 5),
    (6, "total stability", criterion_6, 6),
    (7, "extension shapes", criterion_7, 5),
    (8, "cover equivalence", criterion_8, 4),
    (9, "Cambrian lattice", criterion_9, 5),
    (10, "η^rep equivalence", criterion_10, 4),
    (11, "endomorphism quivers", criterion_11, 4),
    (12, "embedding independence", criterion_12, 4),
]


def run_criterion(number: int, n_max: int | None = None, jobs: int = 1,
                  oracle: bool = True) -> CheckResult:
    _, title, fn, bound = CRITERIA[number - 1]
    kwargs = {"jobs": jobs, "oracle": oracle}
    if bound is not None:
        kwargs["n_max"] = bound if n_max is None else min(bound, n_max)
    start = time.perf_counter()
    try:
        ok, detail = fn(**kwargs)
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(number, title, ok, detail, time.perf_counter() - start)


def run_all(n_max: int | None = None, jobs: int = 1, oracle: bool = True) -> list[CheckResult]:
    return [run_criterion(k, n_max, jobs, oracle) for k, *_ in CRITERIA]
