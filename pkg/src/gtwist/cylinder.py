"""Generalized twisted drawings as sweep words around the centre O.

A ray rotating counterclockwise around ``O`` meets the vertices one at a time
(they are labelled in that order) and in between sees pairs of radially
adjacent edges swap. Along the distinguished ray at angle 0 every edge is
present; edge ``{k, i}`` with ``k < i`` leaves vertex ``i``, passes the ray
and ends at vertex ``k``.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from gmpy2 import mpq

from .drawing import (Drawing, DrawingError, Edge, Mode, Triangle, ValidationReport,
                      Violation, _contacts, all_edges, edge, edge_str, triangle_edges,
                      validate_simple)
from .exactgeom import Pt


@dataclass(frozen=True)
class Vert:
    i: int
    depart: Tuple[Edge, ...]  # innermost first
    rank: Optional[int] = None  # edges below the inserted block, when nothing arrives


@dataclass(frozen=True)
class Cross:
    e: Edge
    f: Edge


Event = Union[Vert, Cross]


@dataclass(frozen=True)
class SweepWord:
    n: int
    pi0: Tuple[Edge, ...]
    events: Tuple[Event, ...]

    def cross_pairs(self):
        from .drawing import CrossingSet
        return CrossingSet((ev.e, ev.f) for ev in self.events if isinstance(ev, Cross))


class SweepError(DrawingError):
    pass


def arriving(i: int, n: int) -> List[Edge]:
    return [(i, j) for j in range(i + 1, n + 1)]


def departing(i: int) -> List[Edge]:
    return [(k, i) for k in range(1, i)]


def replay(w: SweepWord) -> Iterator[Tuple[int, Event, Tuple[Edge, ...], Tuple[Edge, ...], int]]:
    """Yield ``(index, event, order_before, order_after, block_start)``.

    ``block_start`` is the position of the arriving/departing block for
    vertex events and the lower swap position for crossings. Raises
    :class:`SweepError` at the first violated invariant.
    """
    if sorted(w.pi0) != all_edges(w.n):
        raise SweepError("SCHEMA_ERROR", "pi0 is not a permutation of the edges")
    order = list(w.pi0)
    crossed = set()
    next_vertex = 1
    for idx, ev in enumerate(w.events):
        before = tuple(order)
        if isinstance(ev, Cross):
            e, f = edge(*ev.e), edge(*ev.f)
            if set(e) & set(f):
                raise SweepError("ADJACENT_PAIR_CROSSES", f"event {idx}", (idx, e, f))
            if (min(e, f), max(e, f)) in crossed:
                raise SweepError("PAIR_CROSSES_TWICE", f"event {idx}", (idx, e, f))
            if e not in order or f not in order:
                raise SweepError("NONADJACENT_SWAP", f"event {idx}: inactive edge", (idx, e, f))
            a, b = order.index(e), order.index(f)
            if abs(a - b) != 1:
                raise SweepError("NONADJACENT_SWAP", f"event {idx}", (idx, e, f))
            order[a], order[b] = order[b], order[a]
            crossed.add((min(e, f), max(e, f)))
            yield idx, ev, before, tuple(order), min(a, b)
            continue
        i = ev.i
        if i != next_vertex:
            raise SweepError("VERTEX_ORDER", f"event {idx}: expected vertex {next_vertex}", (idx, i))
        next_vertex += 1
        arr = arriving(i, w.n)
        if sorted(ev.depart) != departing(i):
            raise SweepError("BAD_DEPART", f"event {idx}", (idx, i))
        if arr:
            pos = sorted(order.index(e) for e in arr)
            if pos != list(range(pos[0], pos[0] + len(arr))):
                raise SweepError("NONCONTIGUOUS_ARRIVAL", f"event {idx}", (idx, i))
            start = pos[0]
            if ev.rank is not None and ev.rank != start:
                raise SweepError("BAD_RANK", f"event {idx}", (idx, i))
            del order[start:start + len(arr)]
        else:
            if ev.rank is None or not (0 <= ev.rank <= len(order)):
                raise SweepError("BAD_RANK", f"event {idx}", (idx, i))
            start = ev.rank
        order[start:start] = list(ev.depart)
        yield idx, ev, before, tuple(order), start
    if next_vertex != w.n + 1:
        raise SweepError("VERTEX_ORDER", "missing vertex events", (len(w.events),))
    if tuple(order) != tuple(w.pi0):
        raise SweepError("CLOSURE_MISMATCH", "final order differs from pi0", (len(w.events),))


def validate_sweep_word(w: SweepWord) -> ValidationReport:
    report = ValidationReport()
    try:
        for _ in replay(w):
            pass
    except SweepError as exc:
        report.violations.append(Violation(exc.code, tuple(exc.witness or ())))
    return report


# --------------------------------------------------------------------------
# realization

def realize(w: SweepWord) -> Drawing:
    """Exact cylinder drawing of a valid sweep word.

    Event ``k`` (1-based, of ``m``) sits at angle ``k/(m+1)``. Radii are the
    1-based radial ranks; each event changes ranks only between angles
    ``k/(m+1) -+ 1/(3(m+1))``, and a vertex whose block starts above ``b``
    other edges sits at radius ``b + 1/2``.
    """
    steps = list(replay(w))
    m = len(steps)
    unit = mpq(1, m + 1)
    third = unit / 3
    vpos: Dict[int, Pt] = {}
    ev_at: List[Tuple[Dict[Edge, int], Dict[Edge, int]]] = []
    for k, (_, ev, before, after, start) in enumerate(steps, 1):
        ev_at.append(({e: r + 1 for r, e in enumerate(before)}, {e: r + 1 for r, e in enumerate(after)}))
        if isinstance(ev, Vert):
            vpos[ev.i] = Pt(k * unit, mpq(2 * start + 1, 2))
    vert_step = {ev.i: k for k, (_, ev, _, _, _) in enumerate(steps, 1) if isinstance(ev, Vert)}

    arcs: Dict[Edge, Tuple[Pt, ...]] = {}
    wrap: Dict[Edge, bool] = {}
    for e in all_edges(w.n):
        lo, hi = e
        ks, kt = vert_step[hi], vert_step[lo]
        pts = [vpos[hi]]
        r_after = ev_at[ks - 1][1][e]
        pts.append(Pt(ks * unit + third, mpq(r_after)))
        seq = [(k, 0) for k in range(ks + 1, m + 1)] + [(k, 1) for k in range(1, kt)]
        for k, turn in seq:
            rb, ra = ev_at[k - 1][0][e], ev_at[k - 1][1][e]
            if rb != ra:
                c = k * unit + turn
                pts.append(Pt(c - third, mpq(rb)))
                pts.append(Pt(c + third, mpq(ra)))
        rb = ev_at[kt - 1][0][e]
        c = kt * unit + 1
        pts.append(Pt(c - third, mpq(rb)))
        pts.append(Pt(c, vpos[lo].y))
        arcs[e] = tuple(_drop_collinear(pts))
        wrap[e] = True
    return Drawing(w.n, Mode.CYLINDER, vpos, arcs, wrap)


def _drop_collinear(pts: List[Pt]) -> List[Pt]:
    out = [pts[0]]
    for i in range(1, len(pts) - 1):
        a, b, c = out[-1], pts[i], pts[i + 1]
        if (b.x - a.x) * (c.y - a.y) != (b.y - a.y) * (c.x - a.x):
            out.append(b)
    out.append(pts[-1])
    return out


# --------------------------------------------------------------------------
# gt validation and radial geometry

@dataclass(frozen=True)
class GtReport:
    is_c_monotone: bool
    crosses_ray: Dict[Edge, bool]

    @property
    def verdict(self) -> bool:
        return self.is_c_monotone and all(self.crosses_ray.values())


def _require_cylinder(d: Drawing) -> None:
    if d.mode is not Mode.CYLINDER:
        raise DrawingError("MODE_MISMATCH", "operation needs a cylinder drawing")


def validate_gt(d: Drawing) -> GtReport:
    """Report c-monotonicity around O and which arcs pass the angle-0 ray."""
    _require_cylinder(d)
    mono = True
    ray = {}
    for e, pts in d.arcs.items():
        xs = [p.x for p in pts]
        inc = all(xs[i] < xs[i + 1] for i in range(len(xs) - 1))
        dec = all(xs[i] > xs[i + 1] for i in range(len(xs) - 1))
        lo, hi = min(xs), max(xs)
        if not (inc or dec) or hi - lo >= 1:
            mono = False
        k = hi.numerator // hi.denominator
        if k == hi:
            k -= 1
        ray[e] = lo < k < hi
    return GtReport(mono, ray)


def radius_at(d: Drawing, e: Edge, theta) -> Optional[mpq]:
    """Radius of angle-monotone arc *e* at angle *theta* (mod one turn)."""
    pts = d.arcs[e]
    if pts[0].x > pts[-1].x:
        pts = pts[::-1]
    xs = [p.x for p in pts]
    base = theta - (theta.numerator // theta.denominator)
    for k in range(int(xs[0]) - 1, int(xs[-1]) + 2):
        t = base + k
        if xs[0] <= t <= xs[-1]:
            j = bisect_right(xs, t) - 1
            if j >= len(xs) - 1:
                return pts[-1].y
            a, b = pts[j], pts[j + 1]
            return a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x)
    return None


class Side(enum.Enum):
    O_SIDE = "O"
    Z_SIDE = "Z"


def radial_side(d: Drawing, t: Triangle, w: int) -> Side:
    """Side of triangle *t* holding vertex *w*, by parity along the ray O->w."""
    _require_cylinder(d)
    if w in t:
        raise ValueError("vertex belongs to the triangle")
    p = d.vertices[w]
    below = 0
    for e in triangle_edges(t):
        r = radius_at(d, e, p.x)
        if r is None:
            continue
        if r == p.y:
            raise DrawingError("DEGENERATE_RADIUS", f"arc {edge_str(e)} meets vertex {w}", (e, w))
        if r < p.y:
            below += 1
    return Side.O_SIDE if below % 2 == 0 else Side.Z_SIDE


def z_side(d: Drawing, t: Triangle, w: int) -> bool:
    """Whether *w* is on the same side of *t* as the radius-infinity region."""
    p = d.vertices[w]
    above = 0
    for e in triangle_edges(t):
        r = radius_at(d, e, p.x)
        if r is None:
            continue
        if r == p.y:
            raise DrawingError("DEGENERATE_RADIUS", f"arc {edge_str(e)} meets vertex {w}", (e, w))
        if r > p.y:
            above += 1
    return above % 2 == 0


def generic_angle(d: Drawing):
    """An angle carrying no vertex: 0 unless a vertex sits on the ray."""
    angles = sorted({p.x for p in d.vertices.values()})
    if angles[0] != 0:
        return mpq(0)
    return (angles[0] + (angles[1] if len(angles) > 1 else 1)) / 2


def separates_o_z(d: Drawing, t: Triangle) -> bool:
    """Whether the boundary of *t* separates the radius-0 and radius-infinity ends."""
    theta = generic_angle(d)
    hits = sum(1 for e in triangle_edges(t) if radius_at(d, e, theta) is not None)
    return hits % 2 == 1


# --------------------------------------------------------------------------
# extraction

def extract_sweep_word(d: Drawing) -> SweepWord:
    """Read the sweep word off a gt cylinder drawing."""
    _require_cylinder(d)
    validate_simple(d).raise_if_failed()
    if not validate_gt(d).verdict:
        raise DrawingError("NOT_GT", "drawing is not generalized twisted")
    events: List[Tuple[mpq, object]] = []
    for i, p in d.vertices.items():
        events.append((p.x, ("V", i)))
    for key, e, f, _, _ in _contacts(d).crossings:
        events.append((key.x, ("X", e, f)))
    events.sort(key=lambda r: r[0])
    angles = [a for a, _ in events]
    if len(set(angles)) != len(angles) or (angles and angles[0] == 0):
        raise DrawingError("COINCIDENT_ANGLES", "two events share an angle")
    vorder = [ev[1] for _, ev in events if ev[0] == "V"]
    if vorder != list(range(1, d.n + 1)):
        raise DrawingError("VERTEX_ORDER", "vertices are not labelled by angle")

    zero = mpq(0)
    pi0 = tuple(sorted(all_edges(d.n), key=lambda e: radius_at(d, e, zero)))
    order = list(pi0)
    out: List[Event] = []
    for ang, ev in events:
        if ev[0] == "X":
            out.append(Cross(*sorted((ev[1], ev[2]))))
            continue
        i = ev[1]
        arr = set(arriving(i, d.n))
        below = [e for e in order if e not in arr and radius_at(d, e, ang) < d.vertices[i].y]
        dep = sorted(departing(i), key=lambda e: _slope_from(d, e, i))
        rank = len(below) if not arr else None
        out.append(Vert(i, tuple(dep), rank))
        order = [e for e in order if e not in arr]
        order[len(below):len(below)] = dep
    w = SweepWord(d.n, pi0, tuple(out))
    for _ in replay(w):
        pass
    return w


def _slope_from(d: Drawing, e: Edge, v: int):
    pts = d.arcs[e]
    if pts[0].x > pts[-1].x:
        pts = pts[::-1]
    a, b = pts[0], pts[1]
    return (b.y - a.y) / (b.x - a.x)
