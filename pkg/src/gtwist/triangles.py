"""Empty and star triangles, and the executable lemma suite."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence

from .cylinder import separates_o_z, validate_gt, z_side
from .drawing import (Drawing, DrawingError, Mode, Triangle, consecutive_in_rotation,
                      crossing_set, edge, planarize, rotation_system, side_cells,
                      side_partition, triangle_coloring, triangle_edges, triangles,
                      validate_simple)


class EmptySide(enum.Enum):
    NONE = "none"
    A = "A"
    B = "B"
    BOTH = "both"


@dataclass(frozen=True)
class TriangleReport:
    triangle: Triangle
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]  # side of the outer reference (unbounded cell / Z)
    empty_side: EmptySide
    star_at: FrozenSet[int]
    o_side_empty: Optional[bool] = None

    @property
    def empty(self) -> bool:
        return self.empty_side is not EmptySide.NONE


def star_vertices(d: Drawing, t: Triangle) -> FrozenSet[int]:
    """Vertices x of *t* whose opposite edge no edge at x crosses."""
    crossed = d.cached("crossed_by", lambda: crossing_set(d).crossed_by())
    out = set()
    for x in t:
        y, z = (v for v in t if v != x)
        hits = crossed.get(edge(y, z), frozenset())
        if not any(x in f for f in hits):
            out.add(x)
    return frozenset(out)


def analyze_triangles(d: Drawing) -> List[TriangleReport]:
    """One report per triangle, sides from the cell colouring (plane) or radial parity (cylinder)."""
    def compute():
        validate_simple(d).raise_if_failed()
        cyl = d.mode is Mode.CYLINDER
        arr = None if cyl else planarize(d)
        reports = []
        for t in triangles(d.n):
            if cyl:
                rest = [w for w in range(1, d.n + 1) if w not in t]
                side_b = frozenset(w for w in rest if z_side(d, t, w))
                side_a = frozenset(rest) - side_b
            else:
                side_a, side_b = side_partition(d, arr, t)
            if not side_a and not side_b:
                es = EmptySide.BOTH
            elif not side_a:
                es = EmptySide.A
            elif not side_b:
                es = EmptySide.B
            else:
                es = EmptySide.NONE
            o_empty = None
            if cyl:
                o_in_a = separates_o_z(d, t)
                o_empty = es is EmptySide.BOTH or es is (EmptySide.A if o_in_a else EmptySide.B)
            reports.append(TriangleReport(t, side_a, side_b, es, star_vertices(d, t), o_empty))
        return reports
    return d.cached("triangle_reports", compute)


def count_empty(d: Drawing) -> int:
    return sum(1 for r in analyze_triangles(d) if r.empty)


def empty_triangles(d: Drawing) -> List[TriangleReport]:
    return [r for r in analyze_triangles(d) if r.empty]


def empty_star_triangles_at(d: Drawing, x: int) -> List[Triangle]:
    return [r.triangle for r in analyze_triangles(d) if r.empty and x in r.star_at]


def double_star_empty(d: Drawing) -> List[Triangle]:
    return [r.triangle for r in analyze_triangles(d) if r.empty and len(r.star_at) == 2]


def counting_identity(d: Drawing) -> Dict[str, int]:
    """Quantities of the double-counting argument for the 2n-4 count."""
    reps = empty_triangles(d)
    return {
        "star_incidences": sum(len(empty_star_triangles_at(d, x)) for x in range(1, d.n + 1)),
        "single_star": sum(1 for r in reps if len(r.star_at) == 1),
        "double_star": sum(1 for r in reps if len(r.star_at) == 2),
        "other_star": sum(1 for r in reps if len(r.star_at) not in (1, 2)),
        "empty": len(reps),
    }


# --------------------------------------------------------------------------
# verification suite

SIMPLE_CHECKS = ("S1", "S2", "S3", "S4", "S5", "S6", "S7")
GT_CHECKS = ("G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8")


class Level(enum.Enum):
    SIMPLE = "simple"
    GT = "gt"


@dataclass
class CheckResult:
    passed: Optional[bool]  # None: not applicable
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out: dict = {"pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    results: Dict[str, CheckResult] = field(default_factory=dict)
    # arcs of a c-monotone drawing that miss the ray (GT level only)
    missed_ray: List = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missed_ray and all(r.passed is not False for r in self.results.values())

    def first_failure(self):
        for key, r in self.results.items():
            if r.passed is False:
                return key, r
        if self.missed_ray:
            return "GT", CheckResult(False, {"edges_missing_ray": self.missed_ray})
        return None

    def to_json(self) -> dict:
        return {k: r.to_json() for k, r in self.results.items()}


def _crossings_in(cs, quad) -> list:
    a, b, c, e = quad
    pairs = [((a, b), (c, e)), ((a, c), (b, e)), ((a, e), (b, c))]
    return [p for p in pairs if p in cs]


def _s1(d):
    cs = crossing_set(d)
    for quad in itertools.combinations(range(1, d.n + 1), 4):
        if len(_crossings_in(cs, quad)) > 1:
            return CheckResult(False, {"vertices": list(quad)})
    return CheckResult(True)


def _s2(d):
    for x in range(1, d.n + 1):
        found = empty_star_triangles_at(d, x)
        if len(found) < 2:
            return CheckResult(False, {"vertex": x, "empty_star": [list(t) for t in found]})
    return CheckResult(True)


def _s3(d):
    rot = rotation_system(d)
    for r in analyze_triangles(d):
        for x in r.star_at:
            y, z = (v for v in r.triangle if v != x)
            if r.empty != consecutive_in_rotation(rot, x, y, z):
                return CheckResult(False, {"triangle": list(r.triangle), "vertex": x})
    return CheckResult(True)


def _s4(d):
    cs = crossing_set(d)
    arr = planarize(d)
    by_t = {r.triangle: r for r in analyze_triangles(d)}
    for x in range(1, d.n + 1):
        for t1, t2 in itertools.combinations(empty_star_triangles_at(d, x), 2):
            for e1 in triangle_edges(t1):
                for e2 in triangle_edges(t2):
                    if (min(e1, e2), max(e1, e2)) in cs:
                        return CheckResult(False, {"vertex": x, "triangles": [list(t1), list(t2)],
                                                   "crossing": [list(e1), list(e2)]})
            c1 = _empty_cells(arr, by_t[t1])
            c2 = _empty_cells(arr, by_t[t2])
            if c1 & c2:
                return CheckResult(False, {"vertex": x, "triangles": [list(t1), list(t2)],
                                           "shared_cell": min(c1 & c2)})
    return CheckResult(True)


def _empty_cells(arr, rep: TriangleReport) -> FrozenSet[int]:
    if rep.empty_side is EmptySide.BOTH:
        return side_cells(arr, rep.triangle, False)
    return side_cells(arr, rep.triangle, rep.empty_side is EmptySide.B)


def _s5(d):
    cs = crossing_set(d)

    def crosses(e, f):
        e, f = edge(*e), edge(*f)
        return (min(e, f), max(e, f)) in cs

    for r in analyze_triangles(d):
        for v in r.triangle:
            u, w = (a for a in r.triangle if a != v)
            for side in (r.side_a, r.side_b):
                for x, y in itertools.permutations(sorted(side), 2):
                    if crosses((x, v), (u, w)) and crosses((x, y), (v, u)) and crosses((x, y), (v, w)):
                        return CheckResult(False, {"triangle": [u, v, w], "x": x, "y": y})
    return CheckResult(True)


def _s6(d):
    for x in range(1, d.n + 1):
        k = sum(1 for r in empty_triangles(d) if x in r.triangle)
        if k < 2:
            return CheckResult(False, {"vertex": x, "empty_incident": k})
    return CheckResult(True)


def _s7(d):
    k = count_empty(d)
    return CheckResult(k >= d.n, None if k >= d.n else {"empty": k, "n": d.n})


def _g1(d):
    arr = planarize(d)
    for t in triangles(d.n):
        color = triangle_coloring(arr, t)
        if color[arr.o_cell] == color[arr.outer] or not separates_o_z(d, t):
            return CheckResult(False, {"triangle": list(t)})
    return CheckResult(True)


def _g2(d, exhaustive_max: int = 7, samples: int = 20000, seed: int = 0):
    arr = planarize(d)
    tris = triangles(d.n)
    inner = {t: side_cells(arr, t, False) for t in tris}
    disjoint = {t: set() for t in tris}
    for s, t in itertools.combinations(tris, 2):
        if not inner[s] & inner[t]:
            disjoint[s].add(t)
            disjoint[t].add(s)
    if d.n <= exhaustive_max:
        for s in tris:
            for t in disjoint[s]:
                if t <= s:
                    continue
                common = [u for u in disjoint[s] & disjoint[t] if u > t]
                if common:
                    return CheckResult(False, {"triangles": [list(s), list(t), list(common[0])]})
        return CheckResult(True)
    rng = random.Random(seed)
    for _ in range(samples):
        s, t, u = rng.sample(tris, 3)
        if t in disjoint[s] and u in disjoint[s] and u in disjoint[t]:
            return CheckResult(False, {"triangles": [list(s), list(t), list(u)]})
    return CheckResult(True)


def _g3(d):
    arr = planarize(d)
    vo, vz = arr.cell_vertices(arr.o_cell), arr.cell_vertices(arr.outer)
    if vo and vz:
        return CheckResult(True)
    return CheckResult(False, {"o_cell_vertices": sorted(vo), "z_cell_vertices": sorted(vz)})


def _g4(d):
    cs = crossing_set(d)
    for quad in itertools.combinations(range(1, d.n + 1), 4):
        if len(_crossings_in(cs, quad)) != 1:
            return CheckResult(False, {"vertices": list(quad)})
    return CheckResult(True)


def _g5(d):
    by_t = {r.triangle: r for r in analyze_triangles(d)}
    for x in range(1, d.n + 1):
        found = empty_star_triangles_at(d, x)
        sides = sorted(bool(by_t[t].o_side_empty) for t in found)
        if sides != [False, True]:
            return CheckResult(False, {"vertex": x, "empty_star": [list(t) for t in found]})
    return CheckResult(True)


def _g6(d):
    arr = planarize(d)
    crossed = crossing_set(d).crossed_by()
    boundary = sorted(arr.cell_vertices(arr.o_cell))
    for r in empty_triangles(d):
        if not r.o_side_empty:
            continue
        for v in boundary:
            if v not in r.triangle:
                return CheckResult(False, {"triangle": list(r.triangle), "o_cell_vertex": v,
                                           "reason": "boundary vertex missing"})
            x, y = (a for a in r.triangle if a != v)
            stars = r.star_at & {x, y}
            if not stars:
                return CheckResult(False, {"triangle": list(r.triangle), "o_cell_vertex": v,
                                           "reason": "not star at x or y"})
            if stars == {x, y}:
                opp = crossed.get(edge(x, y), frozenset())
                for w in range(1, d.n + 1):
                    if w not in r.triangle and edge(v, w) not in opp:
                        return CheckResult(False, {"triangle": list(r.triangle), "o_cell_vertex": v,
                                                   "edge": [v, w], "reason": "edge from v misses xy"})
    return CheckResult(True)


def _g7(d):
    by_t = {r.triangle: r for r in analyze_triangles(d)}
    dbl = double_star_empty(d)
    n_o = sum(1 for t in dbl if by_t[t].o_side_empty)
    ok = len(dbl) == 4 and n_o == 2
    return CheckResult(ok, None if ok else {"double_star": [list(t) for t in dbl], "o_side": n_o})


def _g8(d):
    k = count_empty(d)
    ok = k == 2 * d.n - 4
    return CheckResult(ok, None if ok else {"empty": k, "expected": 2 * d.n - 4})


CHECKS: Dict[str, Callable[[Drawing], CheckResult]] = {
    "S1": _s1, "S2": _s2, "S3": _s3, "S4": _s4, "S5": _s5, "S6": _s6, "S7": _s7,
    "G1": _g1, "G2": _g2, "G3": _g3, "G4": _g4, "G5": _g5, "G6": _g6, "G7": _g7, "G8": _g8,
}


def verify_suite(d: Drawing, level: Level = Level.SIMPLE,
                 checks: Optional[Sequence[str]] = None) -> SuiteReport:
    """Run the lemma checks on *d*.

    ``GT`` additionally runs G1-G8 on a cylinder drawing whose arcs are
    monotone in angle. Arcs that miss the ray make the report fail, but the
    G checks still run so that a broken drawing gets concrete witnesses.
    At level ``SIMPLE`` the G checks are reported as not applicable. The
    S checks need ``n >= 4`` except S1 and S3.
    """
    level = Level(level)
    validate_simple(d).raise_if_failed()
    report = SuiteReport()
    if level is Level.GT:
        if d.mode is not Mode.CYLINDER:
            raise DrawingError("MODE_MISMATCH", "gt suite needs a cylinder drawing")
        gt = validate_gt(d)
        if not gt.is_c_monotone:
            raise DrawingError("NOT_GT", "arcs are not monotone in angle")
        report.missed_ray = sorted(e for e, hit in gt.crosses_ray.items() if not hit)
    wanted = list(checks) if checks is not None else list(SIMPLE_CHECKS + GT_CHECKS)
    for key in SIMPLE_CHECKS + GT_CHECKS:
        if key not in wanted:
            continue
        applicable = key.startswith("S") or level is Level.GT
        if d.n < 4 and key not in ("S1", "S3"):
            applicable = False
        report.results[key] = CHECKS[key](d) if applicable else CheckResult(None)
    return report
