"""File formats (drawings, sweep words, crossing sets, reports) and SVG output.

All rationals are written as ``"num/den"`` strings (``"num"`` when the
denominator is one). JSON output is canonical: sorted keys, fixed
separators, edges sorted by label, so equal objects serialize to equal bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from .cylinder import Cross, SweepWord, Vert
from .drawing import (CrossingSet, Drawing, DrawingError, Edge, Mode, crossing_points,
                      edge, edge_str, triangle_edges)
from .exactgeom import Pt, RationalParseError, parse_rat, rat_str


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _schema(path: str, message: str) -> DrawingError:
    return DrawingError("SCHEMA_ERROR", f"{path}: {message}", path)


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingError("SCHEMA_ERROR", f"line {exc.lineno}: {exc.msg}", exc.lineno) from exc


def _field(obj, key: str, path: str, kind):
    if not isinstance(obj, dict):
        raise _schema(path, "expected an object")
    if key not in obj:
        raise _schema(f"{path}.{key}", "missing")
    value = obj[key]
    # bool is an int subclass; never accept it where a number is wanted
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise _schema(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


def _rat(value, path: str):
    if not isinstance(value, str):
        raise _schema(path, "rationals must be strings")
    try:
        return parse_rat(value)
    except RationalParseError as exc:
        raise DrawingError("RATIONAL_PARSE_ERROR", f"{path}: {exc}", path) from exc


def _point(value, path: str) -> Pt:
    if not isinstance(value, list) or len(value) != 2:
        raise _schema(path, "expected [x, y]")
    return Pt(_rat(value[0], f"{path}[0]"), _rat(value[1], f"{path}[1]"))


def _edge_label(text, path: str) -> Edge:
    if not isinstance(text, str) or text.count("-") != 1:
        raise _schema(path, "expected an edge label 'u-v'")
    u, _, v = text.partition("-")
    try:
        a, b = int(u), int(v)
    except ValueError:
        raise _schema(path, f"bad edge label {text!r}") from None
    if a == b:
        raise _schema(path, f"loop {text!r}")
    return edge(a, b)


# --------------------------------------------------------------------------
# drawings

def drawing_to_json(d: Drawing) -> dict:
    edges = []
    for e in sorted(d.arcs):
        item = {"u": e[0], "v": e[1],
                "polyline": [[rat_str(p.x), rat_str(p.y)] for p in d.arcs[e]]}
        if e in d.wrap:
            item["wrap"] = bool(d.wrap[e])
        edges.append(item)
    return {
        "n": d.n,
        "mode": d.mode.value,
        "vertices": [{"id": i, "x": rat_str(p.x), "y": rat_str(p.y)}
                     for i, p in sorted(d.vertices.items())],
        "edges": edges,
    }


def serialize_drawing(d: Drawing) -> str:
    return _dumps(drawing_to_json(d))


def drawing_from_json(obj) -> Drawing:
    n = _field(obj, "n", "$", int)
    mode_name = _field(obj, "mode", "$", str)
    try:
        mode = Mode(mode_name)
    except ValueError:
        raise _schema("$.mode", f"unknown mode {mode_name!r}") from None
    vertices = {}
    for k, item in enumerate(_field(obj, "vertices", "$", list)):
        path = f"$.vertices[{k}]"
        i = _field(item, "id", path, int)
        if i in vertices:
            raise _schema(path, f"duplicate vertex {i}")
        vertices[i] = Pt(_rat(_field(item, "x", path, str), f"{path}.x"),
                         _rat(_field(item, "y", path, str), f"{path}.y"))
    arcs, wrap = {}, {}
    for k, item in enumerate(_field(obj, "edges", "$", list)):
        path = f"$.edges[{k}]"
        u = _field(item, "u", path, int)
        v = _field(item, "v", path, int)
        if u == v:
            raise _schema(path, f"loop at {u}")
        e = edge(u, v)
        if e in arcs:
            raise _schema(path, f"duplicate edge {edge_str(e)}")
        poly = _field(item, "polyline", path, list)
        arcs[e] = tuple(_point(p, f"{path}.polyline[{j}]") for j, p in enumerate(poly))
        if "wrap" in item:
            wrap[e] = _field(item, "wrap", path, bool)
    return Drawing(n, mode, vertices, arcs, wrap)


def parse_drawing(text: str) -> Drawing:
    """Inverse of :func:`serialize_drawing`; raises ``DrawingError`` on bad input."""
    return drawing_from_json(_load(text))


# --------------------------------------------------------------------------
# sweep words

def word_to_json(w: SweepWord) -> dict:
    events = []
    for ev in w.events:
        if isinstance(ev, Cross):
            events.append({"cross": [edge_str(ev.e), edge_str(ev.f)]})
        else:
            item = {"vert": ev.i, "depart": [edge_str(e) for e in ev.depart]}
            if ev.rank is not None:
                item["rank"] = ev.rank
            events.append(item)
    return {"n": w.n, "pi0": [edge_str(e) for e in w.pi0], "events": events}


def serialize_word(w: SweepWord) -> str:
    return _dumps(word_to_json(w))


def word_from_json(obj) -> SweepWord:
    n = _field(obj, "n", "$", int)
    pi0 = tuple(_edge_label(s, f"$.pi0[{k}]") for k, s in enumerate(_field(obj, "pi0", "$", list)))
    events = []
    for k, item in enumerate(_field(obj, "events", "$", list)):
        path = f"$.events[{k}]"
        if isinstance(item, dict) and "cross" in item:
            pair = _field(item, "cross", path, list)
            if len(pair) != 2:
                raise _schema(f"{path}.cross", "expected two edges")
            events.append(Cross(_edge_label(pair[0], f"{path}.cross[0]"),
                                _edge_label(pair[1], f"{path}.cross[1]")))
            continue
        i = _field(item, "vert", path, int)
        depart = tuple(_edge_label(s, f"{path}.depart[{j}]")
                       for j, s in enumerate(_field(item, "depart", path, list)))
        rank = _field(item, "rank", path, int) if "rank" in item else None
        events.append(Vert(i, depart, rank))
    return SweepWord(n, pi0, tuple(events))


def parse_word(text: str) -> SweepWord:
    return word_from_json(_load(text))


# --------------------------------------------------------------------------
# crossing sets and reports

def export_crossings(cs: CrossingSet) -> str:
    return cs.export()


def parse_crossings(text: str) -> CrossingSet:
    return CrossingSet.parse(text)


def serialize_report(report) -> str:
    """Suite report as JSON keyed by check id."""
    return _dumps(report.to_json())


def triangle_report_json(rep) -> dict:
    out = {
        "triangle": list(rep.triangle),
        "side_a": sorted(rep.side_a),
        "side_b": sorted(rep.side_b),
        "empty_side": rep.empty_side.value,
        "star_at": sorted(rep.star_at),
    }
    if rep.o_side_empty is not None:
        out["o_side_empty"] = rep.o_side_empty
    return out


def dumps(obj) -> str:
    """Canonical JSON text for report dictionaries."""
    return _dumps(obj)


# --------------------------------------------------------------------------
# SVG

@dataclass(frozen=True)
class RenderStyle:
    width: int = 640
    height: int = 640
    vertex_radius: float = 4.0
    edge_width: float = 1.0
    highlight_width: float = 5.0
    show_O_Z_regions: bool = True
    highlight_empty_triangles: bool = True
    unroll: bool = False  # strip view instead of the polar view

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image dimensions must be positive")
        if self.vertex_radius <= 0 or self.edge_width <= 0 or self.highlight_width <= 0:
            raise ValueError("radii and stroke widths must be positive")


def _num(v: float) -> str:
    return f"{v:.9g}"


class _Frame:
    """Maps drawing coordinates to SVG pixels."""

    MARGIN = 24

    def __init__(self, d: Drawing, style: RenderStyle):
        self.d = d
        self.style = style
        ys = [float(p.y) for pts in d.arcs.values() for p in pts]
        xs = [float(p.x) for pts in d.arcs.values() for p in pts]
        self.polar = d.mode is Mode.CYLINDER and not style.unroll
        if d.mode is Mode.CYLINDER:
            self.x0, self.x1 = 0.0, 1.0
            self.y0, self.y1 = 0.0, max(ys) * 1.1
        else:
            self.x0, self.x1 = min(xs), max(xs)
            self.y0, self.y1 = min(ys), max(ys)
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1
        if self.y1 == self.y0:
            self.y1 = self.y0 + 1

    def __call__(self, x: float, y: float):
        w, h, m = self.style.width, self.style.height, self.MARGIN
        if self.polar:
            radius = (min(w, h) / 2 - m) * (y / self.y1)
            ang = 2 * math.pi * x
            return w / 2 + radius * math.cos(ang), h / 2 - radius * math.sin(ang)
        px = m + (w - 2 * m) * (x - self.x0) / (self.x1 - self.x0)
        py = h - m - (h - 2 * m) * (y - self.y0) / (self.y1 - self.y0)
        return px, py

    def path(self, pts: Sequence[Pt]) -> List[str]:
        """SVG path data; in cylinder views the polyline is cut at the ray."""
        runs: List[List[tuple]] = []
        cur: List[tuple] = []
        for a, b in zip(pts, pts[1:]):
            for p, q in self._pieces(a, b):
                if cur and cur[-1] != p:
                    runs.append(cur)
                    cur = []
                if not cur:
                    cur.append(p)
                cur.append(q)
        if cur:
            runs.append(cur)
        out = []
        for run in runs:
            steps = []
            for k, (x, y) in enumerate(run):
                px, py = self(x, y)
                steps.append(f"{'M' if k == 0 else 'L'}{_num(px)} {_num(py)}")
            out.append(" ".join(steps))
        return out

    def _pieces(self, a: Pt, b: Pt):
        ax, ay, bx, by = float(a.x), float(a.y), float(b.x), float(b.y)
        if self.d.mode is Mode.PLANE:
            yield (ax, ay), (bx, by)
            return
        # cut at integer angles, then sample so polar spirals look smooth
        cuts = sorted({ax, bx} | {float(k) for k in range(math.floor(min(ax, bx)) + 1,
                                                             math.ceil(max(ax, bx)))})
        if ax > bx:
            cuts.reverse()
        for u, v in zip(cuts, cuts[1:]):
            t0 = 0.0 if bx == ax else (u - ax) / (bx - ax)
            t1 = 1.0 if bx == ax else (v - ax) / (bx - ax)
            shift = math.floor(min(u, v))
            samples = 8 if self.polar else 1
            prev = None
            for s in range(samples + 1):
                t = t0 + (t1 - t0) * s / samples
                pt = (ax + t * (bx - ax) - shift, ay + t * (by - ay))
                if prev is not None:
                    yield prev, pt
                prev = pt


def render_svg(d: Drawing, reports: Optional[Iterable] = None,
               style: Optional[RenderStyle] = None) -> str:
    """Deterministic SVG picture of *d*.

    Crossings are dotted, the ray at angle 0 is dashed in cylinder mode and
    the edges of empty triangles are underlaid with a wide translucent
    stroke when triangle reports are given.
    """
    style = style or RenderStyle()
    frame = _Frame(d, style)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    if reports is not None and style.highlight_empty_triangles:
        for rep in reports:
            if not rep.empty:
                continue
            tag = "-".join(map(str, rep.triangle))
            for e in triangle_edges(rep.triangle):
                for data in frame.path(d.arcs[e]):
                    out.append(f'<path class="empty" data-triangle="{tag}" d="{data}" fill="none" '
                               f'stroke="#f4b400" stroke-opacity="0.35" '
                               f'stroke-width="{_num(style.highlight_width)}"/>')
    if d.mode is Mode.CYLINDER:
        ray_end = frame(0.0, frame.y1)
        start = frame(0.0, 0.0)
        out.append(f'<line class="ray" x1="{_num(start[0])}" y1="{_num(start[1])}" '
                   f'x2="{_num(ray_end[0])}" y2="{_num(ray_end[1])}" stroke="gray" '
                   f'stroke-dasharray="6 4"/>')
        if style.show_O_Z_regions:
            ox, oy = frame(0.5, 0.0) if not frame.polar else start
            zx, zy = frame(0.5, frame.y1) if not frame.polar else (style.width - 16, 16)
            out.append(f'<text class="O" x="{_num(ox)}" y="{_num(oy)}" font-size="14">O</text>')
            out.append(f'<text class="Z" x="{_num(zx)}" y="{_num(zy)}" font-size="14">Z</text>')
    for e in sorted(d.arcs):
        for data in frame.path(d.arcs[e]):
            out.append(f'<path class="edge" data-edge="{edge_str(e)}" d="{data}" fill="none" '
                       f'stroke="black" stroke-width="{_num(style.edge_width)}"/>')
    for p, e, f in crossing_points(d):
        cx, cy = frame(float(p.x), float(p.y))
        out.append(f'<circle class="crossing" data-pair="{edge_str(e)} x {edge_str(f)}" '
                   f'cx="{_num(cx)}" cy="{_num(cy)}" r="2" fill="red"/>')
    for i, p in sorted(d.vertices.items()):
        cx, cy = frame(float(p.x), float(p.y))
        out.append(f'<circle class="vertex" cx="{_num(cx)}" cy="{_num(cy)}" '
                   f'r="{_num(style.vertex_radius)}" fill="black"/>')
        out.append(f'<text x="{_num(cx + 6)}" y="{_num(cy - 6)}" font-size="12">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
