"""Simple drawings of complete graphs as exact polylines.

A :class:`Drawing` lives either in the plane or on a cylinder. In cylinder
mode a point ``(x, y)`` means angle parameter ``x`` (one full turn is ``1``)
and radius ``y > 0``; arcs are stored *unrolled*, so an arc that passes the
angle origin continues with ``x > 1`` and carries ``wrap=True``. The centre
``O`` is the radius-0 end of the cylinder and ``Z`` the radius-infinity end.
"""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .exactgeom import Contact, Pt, Seg, angle_key, seg_intersect

Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]


class Mode(enum.Enum):
    PLANE = "plane"
    CYLINDER = "cylinder"


class DrawingError(Exception):
    """Raised for malformed or non-simple input.

    ``code`` is one of the violation codes (``SCHEMA_ERROR``,
    ``DOUBLE_CROSSING``, ``MODE_MISMATCH`` ...) and ``witness`` carries the
    offending items.
    """

    def __init__(self, code: str, message: str = "", witness=None):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.witness = witness


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_str(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def all_edges(n: int) -> List[Edge]:
    return list(itertools.combinations(range(1, n + 1), 2))


def triangles(n: int) -> List[Triangle]:
    return list(itertools.combinations(range(1, n + 1), 3))


def triangle_edges(t: Triangle) -> Tuple[Edge, Edge, Edge]:
    a, b, c = t
    return (edge(a, b), edge(a, c), edge(b, c))


@dataclass(frozen=True)
class Drawing:
    n: int
    mode: Mode
    vertices: Dict[int, Pt]
    arcs: Dict[Edge, Tuple[Pt, ...]]
    wrap: Dict[Edge, bool] = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        check_structure(self)

    def segments(self, e: Edge) -> List[Seg]:
        pts = self.arcs[e]
        return [Seg(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]


def check_structure(d: Drawing) -> None:
    if d.n < 2:
        raise DrawingError("SCHEMA_ERROR", "n must be at least 2")
    if sorted(d.vertices) != list(range(1, d.n + 1)):
        raise DrawingError("SCHEMA_ERROR", "vertices must be labelled 1..n")
    if sorted(d.arcs) != all_edges(d.n):
        raise DrawingError("SCHEMA_ERROR", "edges must be exactly those of K_n")
    positions = [_norm(d, p) for p in d.vertices.values()]
    if len(set(positions)) != len(positions):
        raise DrawingError("SCHEMA_ERROR", "vertices are not distinct points")
    cyl = d.mode is Mode.CYLINDER
    for e, pts in d.arcs.items():
        if len(pts) < 2:
            raise DrawingError("SCHEMA_ERROR", f"arc {edge_str(e)} has fewer than 2 points", e)
        if any(pts[i] == pts[i + 1] for i in range(len(pts) - 1)):
            raise DrawingError("SCHEMA_ERROR", f"arc {edge_str(e)} repeats a point", e)
        u, v = e
        if not cyl:
            if d.wrap.get(e, False):
                raise DrawingError("SCHEMA_ERROR", "wrap flag outside cylinder mode", e)
            if {pts[0], pts[-1]} != {d.vertices[u], d.vertices[v]}:
                raise DrawingError("SCHEMA_ERROR", f"arc {edge_str(e)} does not join its endpoints", e)
            continue
        shift = 1 if d.wrap.get(e, False) else 0
        ends_ok = any(
            pts[0] == d.vertices[a] and pts[-1] == Pt(d.vertices[b].x + shift, d.vertices[b].y)
            for a, b in ((u, v), (v, u)))
        if not ends_ok:
            raise DrawingError("SCHEMA_ERROR", f"arc {edge_str(e)} does not join its endpoints", e)
    if cyl:
        for i, p in d.vertices.items():
            if not (0 <= p.x < 1) or p.y <= 0:
                raise DrawingError("SCHEMA_ERROR", f"vertex {i} outside the cylinder strip", i)
        for e, pts in d.arcs.items():
            if any(p.y <= 0 for p in pts):
                raise DrawingError("SCHEMA_ERROR", f"arc {edge_str(e)} reaches radius <= 0", e)


def _norm(d: Drawing, p: Pt) -> Pt:
    """Canonical key of a point: angles are reduced mod one turn on the cylinder."""
    if d.mode is Mode.CYLINDER:
        return Pt(p.x - (p.x.numerator // p.x.denominator), p.y)
    return p


# --------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    code: str
    items: Tuple
    point: Optional[Pt] = None


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]

    def raise_if_failed(self):
        if self.violations:
            v = self.violations[0]
            raise DrawingError(v.code, f"{v.items}", v.items)


@dataclass(frozen=True)
class _Loc:
    """Position of a point on an arc: start of segment ``k`` or inside it."""

    k: int
    p: Pt  # unrolled coordinates
    interior: bool


@dataclass
class _Contacts:
    crossings: List[Tuple[Pt, Edge, Edge, _Loc, _Loc]]
    report: ValidationReport


def _strip_pieces(d: Drawing):
    """Segments in the fundamental strip, tagged (edge, segment index, shift)."""
    out = []
    cyl = d.mode is Mode.CYLINDER
    for e in d.arcs:
        for k, (a, b) in enumerate(d.segments(e)):
            if not cyl:
                out.append((e, k, 0, a, b))
                continue
            lo, hi = (a, b) if a.x <= b.x else (b, a)
            s = lo.x.numerator // lo.x.denominator
            while True:
                cut_lo = max(lo.x, mpq(s))
                cut_hi = min(hi.x, mpq(s + 1))
                if cut_lo < cut_hi or (lo.x == hi.x and s <= lo.x < s + 1):
                    pa = _at_x(lo, hi, cut_lo)
                    pb = _at_x(lo, hi, cut_hi)
                    out.append((e, k, s, Pt(pa.x - s, pa.y), Pt(pb.x - s, pb.y)))
                s += 1
                if s >= hi.x:
                    break
    return out


def _at_x(a: Pt, b: Pt, x) -> Pt:
    if a.x == b.x:
        return a
    if x == a.x:
        return a
    if x == b.x:
        return b
    t = (x - a.x) / (b.x - a.x)
    return Pt(x, a.y + t * (b.y - a.y))


def _loc(d: Drawing, e: Edge, k: int, p: Pt) -> _Loc:
    pts = d.arcs[e]
    a, b = pts[k], pts[k + 1]
    if p == a:
        return _Loc(k, p, False)
    if p == b:
        return _Loc(k + 1, p, False)
    return _Loc(k, p, True)


def _dirs(d: Drawing, e: Edge, loc: _Loc) -> Tuple[Optional[Pt], Optional[Pt]]:
    """Backward and forward direction vectors of arc *e* at *loc*."""
    pts = d.arcs[e]
    if loc.interior:
        a, b = pts[loc.k], pts[loc.k + 1]
        return a - loc.p, b - loc.p
    back = pts[loc.k - 1] - loc.p if loc.k > 0 else None
    fwd = pts[loc.k + 1] - loc.p if loc.k + 1 < len(pts) else None
    return back, fwd


def _transversal(da: Sequence[Pt], db: Sequence[Pt]) -> Optional[bool]:
    """Do two curves through a point cross? ``None`` if they touch tangentially."""
    keyed = sorted([(angle_key(v), 0) for v in da] + [(angle_key(v), 1) for v in db])
    if len({k for k, _ in keyed}) < 4:
        return None
    tags = [t for _, t in keyed]
    return tags in ([0, 1, 0, 1], [1, 0, 1, 0])


def _contacts(d: Drawing) -> _Contacts:
    def compute():
        pieces = []
        for e, k, s, a, b in _strip_pieces(d):
            box = (min(a.x, b.x), max(a.x, b.x), min(a.y, b.y), max(a.y, b.y))
            pieces.append((box, (e, k, s, a, b)))
        pieces.sort(key=lambda r: r[0][0])
        report = ValidationReport()
        hits: Dict[Pt, Dict[Edge, set]] = defaultdict(lambda: defaultdict(set))
        active: List[tuple] = []
        horizon = None  # smallest right end among active pieces
        for box, cur in pieces:
            e, k, s, a, b = cur
            xmin, _, ylo, yhi = box
            if horizon is not None and horizon < xmin:
                active = [q for q in active if q[0][1] >= xmin]
                horizon = min((q[0][1] for q in active), default=None)
            for qbox, q in active:
                if qbox[3] < ylo or qbox[2] > yhi:
                    continue
                f, kf, sf, c, dd = q
                if f == e and (k == kf or abs(k - kf) == 1):
                    # neighbouring segments of one arc meet at their joint only
                    r = seg_intersect(Seg(a, b), Seg(c, dd))
                    if r.kind is Contact.OVERLAP:
                        report.violations.append(Violation("NONSIMPLE_ARC", (e,)))
                    continue
                r = seg_intersect(Seg(a, b), Seg(c, dd))
                if r.kind is Contact.NONE:
                    continue
                if r.kind is Contact.OVERLAP:
                    code = "NONSIMPLE_ARC" if f == e else "DEGENERATE_CONTACT"
                    report.violations.append(Violation(code, tuple(sorted({e, f}))))
                    continue
                if f == e:
                    report.violations.append(Violation("NONSIMPLE_ARC", (e,), r.point))
                    continue
                key = _norm(d, r.point)
                hits[key][e].add(_loc(d, e, k, Pt(r.point.x + s, r.point.y)))
                hits[key][f].add(_loc(d, f, kf, Pt(r.point.x + sf, r.point.y)))
            active.append((box, cur))
            horizon = box[1] if horizon is None else min(horizon, box[1])

        vkeys = {_norm(d, p): i for i, p in d.vertices.items()}
        crossings = []
        for key in sorted(hits):
            arcs = hits[key]
            if key in vkeys:
                v = vkeys[key]
                bad = sorted(e for e in arcs if v not in e)
                for e in bad:
                    report.violations.append(Violation("VERTEX_ON_ARC", (v, e), key))
                continue
            if len(arcs) >= 3:
                report.violations.append(Violation("TRIPLE_POINT", tuple(sorted(arcs)), key))
                continue
            (e, le), (f, lf) = sorted(arcs.items())
            if len(le) > 1 or len(lf) > 1:
                report.violations.append(Violation("NONSIMPLE_ARC", (e, f), key))
                continue
            le, lf = next(iter(le)), next(iter(lf))
            tv = _transversal(_dirs(d, e, le), _dirs(d, f, lf))
            if tv is None or not tv:
                report.violations.append(Violation("DEGENERATE_CONTACT", (e, f), key))
                continue
            crossings.append((key, e, f, le, lf))

        per_pair: Dict[Tuple[Edge, Edge], int] = defaultdict(int)
        for _, e, f, _, _ in crossings:
            per_pair[(e, f)] += 1
        for (e, f), cnt in sorted(per_pair.items()):
            if set(e) & set(f):
                report.violations.append(Violation("ADJACENT_CROSSING", (e, f)))
            elif cnt > 1:
                report.violations.append(Violation("DOUBLE_CROSSING", (e, f)))
        return _Contacts(crossings, report)

    return d.cached("contacts", compute)


def validate_simple(d: Drawing) -> ValidationReport:
    """Check that *d* is a simple drawing in general position."""
    return _contacts(d).report


def _require_simple(d: Drawing) -> None:
    validate_simple(d).raise_if_failed()


# --------------------------------------------------------------------------
# crossings and rotations

class CrossingSet(frozenset):
    """Unordered pairs of vertex-disjoint edges whose arcs cross."""

    def __new__(cls, pairs: Iterable[Tuple[Edge, Edge]] = ()):
        norm = []
        for e, f in pairs:
            e, f = edge(*e), edge(*f)
            if set(e) & set(f):
                raise ValueError(f"crossing pair {e}, {f} shares a vertex")
            norm.append((e, f) if e < f else (f, e))
        return super().__new__(cls, norm)

    def sorted_pairs(self) -> List[Tuple[Edge, Edge]]:
        return sorted(self)

    def export(self) -> str:
        return "".join(f"{edge_str(e)} x {edge_str(f)}\n" for e, f in self.sorted_pairs())

    @classmethod
    def parse(cls, text: str) -> "CrossingSet":
        pairs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            a, _, b = line.partition(" x ")
            pairs.append((_parse_edge(a), _parse_edge(b)))
        return cls(pairs)

    def crossed_by(self) -> Dict[Edge, FrozenSet[Edge]]:
        out: Dict[Edge, set] = defaultdict(set)
        for e, f in self:
            out[e].add(f)
            out[f].add(e)
        return {k: frozenset(v) for k, v in out.items()}


def _parse_edge(s: str) -> Edge:
    u, _, v = s.strip().partition("-")
    return edge(int(u), int(v))


def crossing_set(d: Drawing) -> CrossingSet:
    def compute():
        _require_simple(d)
        return CrossingSet((e, f) for _, e, f, _, _ in _contacts(d).crossings)
    return d.cached("crossing_set", compute)


def crossing_points(d: Drawing) -> List[Tuple[Pt, Edge, Edge]]:
    """Crossings with their location (cylinder points reduced into the strip)."""
    _require_simple(d)
    return [(key, e, f) for key, e, f, _, _ in _contacts(d).crossings]


RotationSystem = Dict[int, Tuple[int, ...]]


def _initial_dir(d: Drawing, e: Edge, v: int) -> Pt:
    pts = d.arcs[e]
    if _norm(d, pts[0]) == _norm(d, d.vertices[v]):
        return pts[1] - pts[0]
    return pts[-2] - pts[-1]


def rotation_system(d: Drawing) -> RotationSystem:
    """Counterclockwise order of neighbours around each vertex.

    On the cylinder the order is the counterclockwise one of the polar
    picture (angle counterclockwise, radius outward), which reverses the
    orientation of the unrolled strip.
    """
    def compute():
        _require_simple(d)
        rot = {}
        for v in range(1, d.n + 1):
            nbrs = [u for u in range(1, d.n + 1) if u != v]
            keys = {u: angle_key(_initial_dir(d, edge(u, v), v)) for u in nbrs}
            if len(set(keys.values())) < len(nbrs):
                raise DrawingError("AMBIGUOUS_ROTATION", f"vertex {v}", v)
            order = sorted(nbrs, key=keys.__getitem__)
            if d.mode is Mode.CYLINDER:
                order.reverse()
            rot[v] = _rotate_min(order)
        return rot
    return d.cached("rotation", compute)


def _rotate_min(order: Sequence[int]) -> Tuple[int, ...]:
    if not order:
        return ()
    i = order.index(min(order))
    return tuple(order[i:]) + tuple(order[:i])


def consecutive_in_rotation(rot: RotationSystem, x: int, y: int, z: int) -> bool:
    cyc = rot[x]
    i, j = cyc.index(y), cyc.index(z)
    return (i - j) % len(cyc) in (1, len(cyc) - 1)


# --------------------------------------------------------------------------
# planarization

@dataclass
class Arrangement:
    """Cells of a planarized drawing.

    Nodes are the drawing's vertices followed by its crossing points. Each
    arc is cut at its nodes into *pieces*; half-edge ``2*i`` runs along piece
    ``i`` in arc direction, ``2*i + 1`` against it, and ``face_of[h]`` is
    the cell on the left of half-edge ``h``.
    """

    drawing: Drawing
    node_pos: List[Pt]
    node_vertex: List[Optional[int]]
    piece_arc: List[Edge]
    piece_nodes: List[Tuple[int, int]]
    face_of: List[int]
    faces: List[List[int]]  # boundary half-edges per cell
    outer: int  # unbounded cell (plane) or the radius-infinity cell (cylinder)
    o_cell: Optional[int]
    _strip: list = field(repr=False, default_factory=list)

    @property
    def num_cells(self) -> int:
        return len(self.faces)

    def cell_vertices(self, c: int) -> FrozenSet[int]:
        out = set()
        for h in self.faces[c]:
            node = self.piece_nodes[h // 2][h % 2]
            if self.node_vertex[node] is not None:
                out.add(self.node_vertex[node])
        return frozenset(out)

    def vertex_cells(self, v: int) -> FrozenSet[int]:
        out = set()
        for p, (a, b) in enumerate(self.piece_nodes):
            if self.node_vertex[a] == v:
                out.add(self.face_of[2 * p])
            if self.node_vertex[b] == v:
                out.add(self.face_of[2 * p + 1])
        return frozenset(out)

    def euler_ok(self) -> bool:
        return len(self.node_pos) - len(self.piece_arc) + len(self.faces) == 2

    def locate(self, p: Pt) -> int:
        """Cell containing *p* (strip coordinates on the cylinder)."""
        d = self.drawing
        if d.mode is Mode.CYLINDER:
            p = _norm(d, p)
        best = None
        top = None
        for a, b, piece, rightward in self._strip:
            if not (min(a.x, b.x) <= p.x < max(a.x, b.x)):
                continue
            y = _at_x(a, b, p.x).y if a.x < b.x else _at_x(b, a, p.x).y
            slope = (b.y - a.y) / (b.x - a.x)
            if y == p.y:
                raise DrawingError("DEGENERATE_QUERY", "query point lies on the drawing", p)
            if y > p.y and (best is None or (y, slope) < best[0]):
                best = ((y, slope), piece, rightward)
            if top is None or (y, slope) > top[0]:
                top = ((y, slope), piece, rightward)
        if best is not None:
            _, piece, rightward = best
            return self.face_of[2 * piece + (1 if rightward else 0)]
        if d.mode is Mode.PLANE or top is None:
            return self.outer if d.mode is Mode.PLANE else self.o_cell
        _, piece, rightward = top
        return self.face_of[2 * piece + (0 if rightward else 1)]

    def adjacency(self):
        """(cell, cell, arc) for every piece, one entry per piece."""
        return [(self.face_of[2 * p], self.face_of[2 * p + 1], self.piece_arc[p])
                for p in range(len(self.piece_arc))]


def planarize(d: Drawing) -> Arrangement:
    return d.cached("arrangement", lambda: _planarize(d))


def _planarize(d: Drawing) -> Arrangement:
    _require_simple(d)
    node_pos: List[Pt] = []
    node_vertex: List[Optional[int]] = []
    node_id: Dict[Pt, int] = {}
    for v in range(1, d.n + 1):
        key = _norm(d, d.vertices[v])
        node_id[key] = len(node_pos)
        node_pos.append(key)
        node_vertex.append(v)
    on_arc: Dict[Edge, List[Tuple[_Loc, int]]] = defaultdict(list)
    for key, e, f, le, lf in _contacts(d).crossings:
        node_id[key] = len(node_pos)
        node_pos.append(key)
        node_vertex.append(None)
        on_arc[e].append((le, node_id[key]))
        on_arc[f].append((lf, node_id[key]))

    piece_arc: List[Edge] = []
    piece_nodes: List[Tuple[int, int]] = []
    piece_dirs: List[Tuple[Pt, Pt]] = []
    piece_segs: List[List[Seg]] = []
    for e in sorted(d.arcs):
        pts = d.arcs[e]
        segs = d.segments(e)
        start = node_id[_norm(d, pts[0])]
        end = node_id[_norm(d, pts[-1])]

        def along(item):
            loc = item[0]
            if loc.k >= len(segs):
                return (loc.k, mpq(0))
            a, b = segs[loc.k]
            return (loc.k, (loc.p.x - a.x) * (b.x - a.x) + (loc.p.y - a.y) * (b.y - a.y))

        stops = sorted(on_arc[e], key=along)
        cuts = [(_Loc(0, pts[0], False), start)] + stops + [(_Loc(len(segs), pts[-1], False), end)]
        for (la, na), (lb, nb) in zip(cuts, cuts[1:]):
            corners = [pts[i] for i in range(la.k + 1, lb.k + (1 if lb.interior else 0))]
            chain = [la.p] + corners + [lb.p]
            piece_arc.append(e)
            piece_nodes.append((na, nb))
            piece_dirs.append((chain[1] - chain[0], chain[-2] - chain[-1]))
            piece_segs.append([Seg(chain[i], chain[i + 1]) for i in range(len(chain) - 1)])

    out_edges: Dict[int, List[int]] = defaultdict(list)
    hdir: Dict[int, Pt] = {}
    for p, (a, b) in enumerate(piece_nodes):
        out_edges[a].append(2 * p)
        out_edges[b].append(2 * p + 1)
        hdir[2 * p] = piece_dirs[p][0]
        hdir[2 * p + 1] = piece_dirs[p][1]
    pos_in: Dict[int, Tuple[int, int]] = {}
    for node, hs in out_edges.items():
        hs.sort(key=lambda h: angle_key(hdir[h]))
        for i, h in enumerate(hs):
            pos_in[h] = (node, i)

    def nxt(h: int) -> int:
        twin = h ^ 1
        node, i = pos_in[twin]
        hs = out_edges[node]
        return hs[(i - 1) % len(hs)]

    face_of = [-1] * (2 * len(piece_arc))
    faces: List[List[int]] = []
    for h0 in range(len(face_of)):
        if face_of[h0] != -1:
            continue
        cyc = []
        h = h0
        while face_of[h] == -1:
            face_of[h] = len(faces)
            cyc.append(h)
            h = nxt(h)
        faces.append(cyc)

    strip = []
    cyl = d.mode is Mode.CYLINDER
    for p, segs in enumerate(piece_segs):
        for a, b in segs:
            if a.x == b.x:
                continue
            rightward = a.x < b.x
            lo, hi = (a, b) if rightward else (b, a)
            if not cyl:
                strip.append((a, b, p, rightward))
                continue
            s = lo.x.numerator // lo.x.denominator
            while s < hi.x:
                cl, ch = max(lo.x, mpq(s)), min(hi.x, mpq(s + 1))
                if cl < ch:
                    pa, pb = _at_x(lo, hi, cl), _at_x(lo, hi, ch)
                    pa, pb = Pt(pa.x - s, pa.y), Pt(pb.x - s, pb.y)
                    strip.append((pa, pb, p, True) if rightward else (pb, pa, p, False))
                s += 1

    arr = Arrangement(d, node_pos, node_vertex, piece_arc, piece_nodes, face_of, faces,
                      outer=-1, o_cell=None, _strip=strip)
    x0 = min(min(a.x, b.x) for a, b, _, _ in strip)
    if cyl:
        ymax = max(max(a.y, b.y) for a, b, _, _ in strip)
        arr.o_cell = arr.locate(Pt(x0, mpq(0)))
        arr.outer = arr.locate(Pt(x0, ymax + 1))
    else:
        ymin = min(min(a.y, b.y) for a, b, _, _ in strip)
        arr.outer = arr.locate(Pt(x0, ymin - 1))
    if not arr.euler_ok():
        raise AssertionError("Euler relation violated by planarization")
    return arr


def triangle_coloring(arr: Arrangement, t: Triangle) -> List[int]:
    """Two-colour the cells by side of triangle *t*; the outer cell gets 1."""
    key = ("coloring", t)
    d = arr.drawing

    def compute():
        bnd = set(triangle_edges(t))
        nbrs: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for f, g, e in arr.adjacency():
            flip = 1 if e in bnd else 0
            nbrs[f].append((g, flip))
            nbrs[g].append((f, flip))
        color = [-1] * arr.num_cells
        color[arr.outer] = 1
        todo = deque([arr.outer])
        while todo:
            f = todo.popleft()
            for g, flip in nbrs[f]:
                c = color[f] ^ flip
                if color[g] == -1:
                    color[g] = c
                    todo.append(g)
                elif color[g] != c:
                    raise AssertionError(f"inconsistent side colouring for triangle {t}")
        return color

    return d.cached(key, compute)


def side_partition(d: Drawing, arr: Arrangement, t: Triangle) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Split the vertices outside *t* by side; the second set is the outer side."""
    color = triangle_coloring(arr, t)
    side_a, side_b = set(), set()
    for w in range(1, d.n + 1):
        if w in t:
            continue
        cols = {color[c] for c in arr.vertex_cells(w)}
        if len(cols) != 1:
            raise AssertionError(f"vertex {w} touches both sides of {t}")
        (side_b if cols.pop() == 1 else side_a).add(w)
    return frozenset(side_a), frozenset(side_b)


def side_cells(arr: Arrangement, t: Triangle, outer_side: bool) -> FrozenSet[int]:
    color = triangle_coloring(arr, t)
    want = 1 if outer_side else 0
    return frozenset(c for c, col in enumerate(color) if col == want)
