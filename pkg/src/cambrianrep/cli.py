"""Command line entry point: ``cambrian <subcommand> --quiver ...``.

Exit status is 0 on success, 1 on invalid input (bad quiver, permutation,
index, or a size beyond the subcommand's budget) and 2 when ``check`` finds a
property violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks, endo, eta as eta_mod, export, mar, reps, stability
from .polygon import build_polygon
from .quiver import QuiverA, QuiverError

# largest n each subcommand accepts; beyond this the run is refused, never truncated
BUDGET = {
    "polygon": 60, "ar": 30, "eta": 9, "fibers": 7, "mar": 9, "lattice": 6,
    "stability": 14, "endo": 9, "check": 6,
}
FORMATS = {
    "polygon": ("text", "json", "svg"),
    "ar": ("dot", "json", "text"),
    "eta": ("text", "json"),
    "fibers": ("json",),
    "mar": ("text", "json"),
    "lattice": ("dot", "json"),
    "stability": ("text", "json", "svg"),
    "endo": ("text", "json", "dot"),
    "check": ("text", "json"),
}


class InputError(Exception):
    pass


def parse_quiver(source: str) -> QuiverA:
    """Inline JSON, a path to a JSON file, or a bare direction string such as ``RRL``."""
    text = source.strip()
    try:
        if text.startswith("{"):
            return QuiverA.from_json(text)
        path = Path(text)
        if path.is_file():
            return QuiverA.from_json(path.read_text(encoding="utf-8"))
        if text and set(text.upper()) <= {"R", "L"}:
            return QuiverA.from_string(text)
    except (QuiverError, json.JSONDecodeError) as exc:
        raise InputError(f"invalid quiver: {exc}") from exc
    raise InputError(f"cannot read a quiver from {source!r}")


def _output_path(out: str | None) -> str | None:
    if out is None:
        return None
    base = os.environ.get("CAMBRIAN_OUT_DIR")
    if base and not os.path.isabs(out):
        return os.path.join(base, out)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help="inline JSON, JSON file, or direction string (e.g. RRL)")
    common.add_argument("--format", help="output format (depends on the subcommand)")
    common.add_argument("--out", help="write output to this file (relative to $CAMBRIAN_OUT_DIR)")
    common.add_argument("--oracle", choices=("on", "off"), default="on",
                        help="also run the slow linear-algebra cross-checks")

    parser = argparse.ArgumentParser(prog="cambrian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("polygon", parents=[common], help="vertex coordinates of P(Q)") \
        .add_argument("--mar-index", type=int, help="draw this triangulation as well")
    sub.add_parser("ar", parents=[common], help="AR quiver with translation")
    p_eta = sub.add_parser("eta", parents=[common], help="η and η^rep of a permutation")
    p_eta.add_argument("--perm", help="permutation in one-line notation, e.g. 453126")
    p_eta.add_argument("--fibers", action="store_true", help="dump the fiber partition instead")
    sub.add_parser("fibers", parents=[common], help="fiber partition of S_{n+1} under η")
    sub.add_parser("mar", parents=[common], help="maximal almost rigid representations") \
        .add_argument("--count", action="store_true", help="print only the number")
    sub.add_parser("lattice", parents=[common], help="Hasse diagram of the Cambrian lattice") \
        .add_argument("--labels", choices=("diagonals", "summands"), default="diagonals")
    sub.add_parser("stability", parents=[common], help="central charges and stability")
    sub.add_parser("endo", parents=[common], help="quivers attached to one mar") \
        .add_argument("--mar-index", type=int, default=0)
    p_check = sub.add_parser("check", parents=[common], help="run the acceptance properties")
    p_check.add_argument("--n-max", type=int, default=None, help="cap every sweep at this n")
    p_check.add_argument("--jobs", type=int, default=1, help="worker processes per sweep")
    p_check.add_argument("--only", type=int, action="append", help="run only these criteria")
    return parser


def _need_quiver(args) -> QuiverA:
    if not args.quiver:
        raise InputError(f"{args.command} needs --quiver")
    q = parse_quiver(args.quiver)
    if q.n > BUDGET[args.command]:
        raise InputError(f"{args.command} supports n ≤ {BUDGET[args.command]}, got n={q.n}")
    return q


def _mar_at(q: QuiverA, p, index: int) -> mar.MarRep:
    mars = mar.enumerate_mar(q, p)
    ordered = sorted(mars, key=lambda m: m.key(p))
    if not 0 <= index < len(ordered):
        raise InputError(f"--mar-index must be in 0..{len(ordered) - 1}")
    return ordered[index]


def sorted_mars(q: QuiverA, p) -> list:
    return sorted(mar.enumerate_mar(q, p), key=lambda m: m.key(p))


def cmd_polygon(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    t = _mar_at(q, p, args.mar_index).triangulation() if args.mar_index is not None else None
    if fmt == "svg":
        return export.polygon_svg(p, t)
    data = export.polygon_json(p)
    if t is not None:
        data["diagonals"] = [export.pair(d) for d in t.diagonals(p)]
    if fmt == "json":
        return export.dumps(data)
    lines = [f"P(Q) for {q}: counterclockwise order {' '.join(map(str, p.ccw_order))}"]
    lines += [f"  {v['label']}: ({v['x']}, {v['y']})" for v in data["vertices"]]
    if t is not None:
        lines.append("diagonals: " + " ".join(str(d) for d in t.diagonals(p)))
    return "\n".join(lines) + "\n"


def cmd_ar(args, fmt):
    q = _need_quiver(args)
    ar = reps.ar_quiver(q)
    if fmt == "dot":
        return export.ar_dot(q, ar)
    if fmt == "json":
        return export.dumps(export.ar_json(q, ar))
    lines = [f"AR quiver of {q}: {len(ar.vertices)} vertices, {len(ar.arrows)} arrows"]
    lines += [f"  {a.label} -> {b.label}" for a, b in sorted(ar.arrows)]
    lines += [f"  τ {x.label} = {tx.label}" for x, tx in sorted(ar.tau.items())]
    return "\n".join(lines) + "\n"


def _fibers(q: QuiverA, p) -> str:
    parts = eta_mod.fiber_partition(q, p)
    return export.dumps({
        "quiver": q.to_json(),
        "fibers": [{"diagonals": [export.pair(d) for d in key],
                    "permutations": [eta_mod.perm_str(pi) for pi in sorted(perms)]}
                   for key, perms in parts.items()],
    })


def cmd_eta(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    if args.fibers:
        if q.n > BUDGET["fibers"]:
            raise InputError(f"--fibers supports n ≤ {BUDGET['fibers']}")
        return _fibers(q, p)
    if not args.perm:
        raise InputError("eta needs --perm or --fibers")
    try:
        pi = eta_mod.as_permutation(args.perm, q.n + 1)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    paths = eta_mod.lambda_paths(q, pi)
    diagonals = eta_mod.eta_new_diagonals(q, p, pi)
    steps = [[str(m) for m in r.summands()] for r in eta_mod.lambda_reps(q, pi)]
    final = eta_mod.eta_rep(q, pi)
    if fmt == "json":
        return export.dumps({
            "quiver": q.to_json(), "permutation": list(pi),
            "lambda_paths": [list(x) for x in paths],
            "diagonals": [export.pair(d) for d in diagonals],
            "lambda_reps": [[export.pair(m) for m in r.summands()]
                            for r in eta_mod.lambda_reps(q, pi)],
            "mar": export.mar_json(final),
        })
    lines = ["diagonals: " + ", ".join(f"({a},{b})" for a, b in diagonals)]
    lines += [f"λ{k}: ({','.join(map(str, x))})" for k, x in enumerate(paths)]
    lines += [f"λ{k}^rep: [{', '.join(s)}]" for k, s in enumerate(steps)]
    lines.append(f"mar: {final}")
    return "\n".join(lines) + "\n"


def cmd_fibers(args, fmt):
    q = _need_quiver(args)
    return _fibers(q, build_polygon(q))


def cmd_mar(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    mars = sorted_mars(q, p)
    if args.count:
        return f"{len(mars)}\n"
    if fmt == "json":
        return export.dumps({"quiver": q.to_json(),
                             "mars": [{"diagonals": [export.pair(d) for d in m.key(p)],
                                       "summands": export.mar_json(m)} for m in mars]})
    return "".join(f"{k}: {m}\n" for k, m in enumerate(mars))


def cmd_lattice(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    lat = mar.build_lattice(q, p)
    if fmt == "json":
        return export.dumps(export.lattice_json(lat, p))
    return export.hasse_dot(lat, p, args.labels)


def cmd_stability(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    rows = stability.stability_table(q, p)
    if fmt == "svg":
        return export.charge_svg(rows)
    if fmt == "json":
        return export.dumps({"quiver": q.to_json(),
                             "modules": [{"module": export.pair(m), "charge": list(z),
                                          "stable": s} for m, z, s in rows]})
    return "".join(f"{m.label:>9}  Z = {z}  {'stable' if s else 'UNSTABLE'}\n"
                   for m, z, s in rows)


def cmd_endo(args, fmt):
    q = _need_quiver(args)
    p = build_polygon(q)
    t = _mar_at(q, p, args.mar_index)
    tri = t.triangulation()
    quivers = {
        "adjacency": endo.adjacency_quiver(p, tri),
        "tilted": endo.tilted_quiver(p, tri),
        "gabriel": endo.gabriel_quiver_of_end(q, t).map_vertices(reps.F_inv),
    }
    if fmt == "dot":
        return "".join(export.algebra_quiver_dot(aq, name) for name, aq in quivers.items())
    if fmt == "json":
        return export.dumps({"quiver": q.to_json(), "mar": export.mar_json(t),
                             **{k: export.algebra_quiver_json(v) for k, v in quivers.items()}})
    lines = [f"mar {args.mar_index}: {t}"]
    for name, aq in quivers.items():
        lines.append(f"{name} quiver ({len(aq.arrows)} arrows):")
        lines += [f"  {endo.segment_label(a)} -> {endo.segment_label(b)}"
                  for a, b in sorted(aq.arrows)]
    return "\n".join(lines) + "\n"


def cmd_check(args, fmt):
    if args.n_max is not None and not 0 <= args.n_max <= BUDGET["check"]:
        raise InputError(f"--n-max must be in 0..{BUDGET['check']}")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    numbers = args.only or [k for k, *_ in checks.CRITERIA]
    if any(not 1 <= k <= len(checks.CRITERIA) for k in numbers):
        raise InputError(f"--only takes criterion numbers 1..{len(checks.CRITERIA)}")
    results = [checks.run_criterion(k, args.n_max, args.jobs, args.oracle == "on")
               for k in numbers]
    if fmt == "json":
        text = export.dumps([{"criterion": r.number, "title": r.title, "ok": r.ok,
                              "detail": r.detail} for r in results])
    else:
        text = "".join(r.line() + "\n" for r in results)
    return text, all(r.ok for r in results)


COMMANDS = {
    "polygon": cmd_polygon, "ar": cmd_ar, "eta": cmd_eta, "fibers": cmd_fibers,
    "mar": cmd_mar, "lattice": cmd_lattice, "stability": cmd_stability, "endo": cmd_endo,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    fmt = args.format or FORMATS[args.command][0]
    try:
        if fmt not in FORMATS[args.command]:
            raise InputError(f"{args.command} supports --format {', '.join(FORMATS[args.command])}")
        result = COMMANDS[args.command](args, fmt)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text, ok = result if isinstance(result, tuple) else (result, True)
    path = export.write_text(text, _output_path(args.out))
    if path is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {path}", file=sys.stderr)
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
