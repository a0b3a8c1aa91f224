"""Deterministic JSON, DOT and SVG emitters.

Segments serialize as ``[i, j]`` pairs and modules as ``[i, j]`` intervals in
JSON; human-facing labels use ``γ(i,j)`` and ``M(i,j)``. JSON is written with
sorted keys, and every list is emitted in a canonical order, so equal inputs
give byte-identical output.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .endo import AlgebraQuiver, segment_label
from .mar import CambrianLattice, MarRep
from .polygon import PolygonP, Segment, Triangulation, is_triangulation
from .quiver import QuiverA
from .reps import ARQuiver, IntervalModule, ar_quiver, ext_dim, hom_dim, intervals


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else [x.numerator, x.denominator]
    return x


def pair(x) -> list[int]:
    return [int(x[0]), int(x[1])]


# -- JSON ------------------------------------------------------------------

def polygon_json(p: PolygonP) -> dict:
    return {
        "quiver": p.quiver.to_json(),
        "ccw_order": list(p.ccw_order),
        "vertices": [{"label": v, "x": _num(p.coords[v][0]), "y": _num(p.coords[v][1])}
                     for v in sorted(p.coords)],
    }


def triangulation_json(p: PolygonP, t: Triangulation) -> dict:
    return {"quiver": p.quiver.to_json(), "diagonals": [pair(d) for d in t.diagonals(p)]}


def triangulation_from_json(p: PolygonP, data) -> Triangulation:
    if isinstance(data, str):
        data = json.loads(data)
    t = Triangulation.from_diagonals(p, [tuple(d) for d in data["diagonals"]])
    if not is_triangulation(p, t.edges):
        raise ValueError("diagonals do not form a triangulation")
    return t


def mar_json(m: MarRep) -> list:
    return [pair(x) for x in m.sorted_summands()]


def hom_ext_json(q: QuiverA) -> dict:
    mods = intervals(q)
    return {
        "quiver": q.to_json(),
        "modules": [pair(m) for m in mods],
        "hom": [[hom_dim(q, a, b) for b in mods] for a in mods],
        "ext": [[ext_dim(q, a, b) for b in mods] for a in mods],
    }


def ar_json(q: QuiverA, ar: ARQuiver | None = None) -> dict:
    ar = ar or ar_quiver(q)
    return {
        "quiver": q.to_json(),
        "vertices": [pair(v) for v in ar.vertices],
        "arrows": [[pair(a), pair(b)] for a, b in sorted(ar.arrows)],
        "tau": [[pair(x), pair(tx)] for x, tx in sorted(ar.tau.items())],
    }


def lattice_json(lat: CambrianLattice, p: PolygonP) -> dict:
    return lat.to_json(p)


def algebra_quiver_json(aq: AlgebraQuiver) -> dict:
    return {"vertices": [pair(v) for v in aq.vertices],
            "arrows": [[pair(a), pair(b)] for a, b in sorted(aq.arrows)]}


# -- DOT -------------------------------------------------------------------

def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_id(x) -> str:
    return _q(f"{x[0]},{x[1]}")


def ar_dot(q: QuiverA, ar: ARQuiver | None = None) -> str:
    ar = ar or ar_quiver(q)
    lines = [f"digraph AR_{q.directions} {{", "  rankdir=LR;", "  node [shape=plaintext];"]
    for v in ar.vertices:
        lines.append(f"  {_node_id(v)} [label={_q(v.label)}];")
    for a, b in sorted(ar.arrows):
        lines.append(f"  {_node_id(a)} -> {_node_id(b)};")
    for x, tx in sorted(ar.tau.items()):
        lines.append(f"  {_node_id(x)} -> {_node_id(tx)} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(lat: CambrianLattice, p: PolygonP, labels: str = "diagonals") -> str:
    if labels not in ("diagonals", "summands"):
        raise ValueError("labels must be 'diagonals' or 'summands'")
    lines = [f"digraph Cambrian_{lat.quiver.directions} {{", "  rankdir=BT;",
             "  node [shape=box, fontsize=10];"]
    for k, m in enumerate(lat.elements):
        if labels == "diagonals":
            text = " ".join(str(d) for d in m.key(p)) or "(no diagonals)"
        else:
            text = "\\n".join(x.label for x in m.sorted_summands())
        lines.append(f"  {k} [label=\"{text}\"];")
    for a, b in lat.covers:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def algebra_quiver_dot(aq: AlgebraQuiver, name: str) -> str:
    """Vertices are segments or modules; both get the label ``γ(i,j) / M(i+1,j)``."""
    def seg_of(v):
        return v if isinstance(v, Segment) else Segment(v.i - 1, v.j)
    lines = [f"digraph {name} {{", "  node [shape=plaintext];"]
    for v in aq.vertices:
        lines.append(f"  {_node_id(v)} [label={_q(segment_label(seg_of(v)))}];")
    for a, b in sorted(aq.arrows):
        lines.append(f"  {_node_id(a)} -> {_node_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- SVG -------------------------------------------------------------------

def _svg_frame(points: list[tuple[float, float]], margin: float = 1.0, scale: float = 40.0):
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    x0, x1 = min(xs) - margin, max(xs) + margin
    y0, y1 = min(ys) - margin, max(ys) + margin

    def to_px(x, y):
        return (round((x - x0) * scale, 2), round((y1 - y) * scale, 2))
    size = (round((x1 - x0) * scale, 2), round((y1 - y0) * scale, 2))
    return to_px, size


def polygon_svg(p: PolygonP, t: Triangulation | None = None) -> str:
    pts = {v: (float(x), float(y) / max(1, p.top)) for v, (x, y) in p.coords.items()}
    to_px, (w, h) = _svg_frame(list(pts.values()))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    ring = " ".join("{},{}".format(*to_px(*pts[v])) for v in p.ccw_order)
    out.append(f'  <polygon points="{ring}" fill="none" stroke="black" stroke-width="1.5"/>')
    if t is not None:
        for a, b in t.diagonals(p):
            (xa, ya), (xb, yb) = to_px(*pts[a]), to_px(*pts[b])
            out.append(f'  <line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" '
                       f'stroke="seagreen" stroke-width="1.2"/>')
    for v in sorted(pts):
        x, y = to_px(*pts[v])
        out.append(f'  <circle cx="{x}" cy="{y}" r="3"/>')
        out.append(f'  <text x="{x + 5}" y="{y - 5}" font-size="12">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def charge_svg(rows: list[tuple]) -> str:
    """Arrows from the origin to Z(M) for each ``(module, vector, stable)`` row."""
    vecs = [(float(x), float(y)) for _, (x, y), _ in rows]
    span = max([1.0] + [abs(c) for v in vecs for c in v])
    pts = [(x / span * 10, y / span * 10) for x, y in vecs] + [(0.0, 0.0)]
    to_px, (w, h) = _svg_frame(pts)
    ox, oy = to_px(0.0, 0.0)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    for (m, _, stable), (x, y) in zip(rows, pts):
        px, py = to_px(x, y)
        colour = "black" if stable else "crimson"
        out.append(f'  <line x1="{ox}" y1="{oy}" x2="{px}" y2="{py}" stroke="{colour}"/>')
        out.append(f'  <text x="{px}" y="{py}" font-size="9">{m}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_text(text: str, out: str | None) -> Path | None:
    if out is None:
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path


def interval_from_pair(data) -> IntervalModule:
    i, j = data
    return IntervalModule(int(i), int(j))


__all__ = [
    "dumps", "polygon_json", "triangulation_json", "triangulation_from_json", "mar_json",
    "hom_ext_json", "ar_json", "lattice_json", "algebra_quiver_json", "ar_dot", "hasse_dot",
    "algebra_quiver_dot", "polygon_svg", "charge_svg", "write_text", "interval_from_pair",
]
