"""Independent brute-force oracles used by the tests."""

import itertools

from gtwist.cylinder import Cross, SweepWord, Vert, arriving, departing
from gtwist.drawing import all_edges, edge


def brute_force_words(n):
    """Every valid sweep word of K_n by trying every pi0 and every event sequence."""
    edges = all_edges(n)
    found = []

    def dfs(pi0, order, nxt, crossed, path):
        if nxt > n:
            if tuple(order) == pi0:
                found.append(SweepWord(n, pi0, tuple(path)))
        else:
            arr = arriving(nxt, n)
            idx = [order.index(e) for e in arr]
            if not arr or max(idx) - min(idx) == len(arr) - 1:
                rest = [e for e in order if e not in arr]
                starts = [min(idx)] if arr else range(len(rest) + 1)
                for s in starts:
                    for dep in itertools.permutations(departing(nxt)):
                        new = rest[:s] + list(dep) + rest[s:]
                        ev = Vert(nxt, tuple(dep), None if arr else s)
                        dfs(pi0, new, nxt + 1, crossed, path + [ev])
        for i in range(len(order) - 1):
            e, f = order[i], order[i + 1]
            pair = (min(e, f), max(e, f))
            if set(e) & set(f) or pair in crossed:
                continue
            new = order[:i] + [f, e] + order[i + 2:]
            dfs(pi0, new, nxt, crossed | {pair}, path + [Cross(*pair)])

    for pi0 in itertools.permutations(edges):
        dfs(pi0, list(pi0), 1, frozenset(), [])
    return found


def nested_pairs(n):
    """Crossing pairs of Harborth's twisted drawing: {i,j} and {k,l} with i<k<l<j."""
    out = set()
    for i, k, l, j in itertools.combinations(range(1, n + 1), 4):
        out.add(((i, j), (k, l)) if (i, j) < (k, l) else ((k, l), (i, j)))
    return out


def path_parity_side(d, t, w):
    """Side of triangle t holding w, by a vertex-avoiding path to the outer reference.

    Walks from w straight up (plane: +y; cylinder: outward in radius, a tiny
    angular offset away from w) and counts crossings with the boundary arcs
    of t. Even means w is on the outer side.
    """
    from gtwist.drawing import Mode, triangle_edges
    from gtwist.exactgeom import Pt
    from fractions import Fraction as F
    p = d.vertices[w]
    top = max(q.y for pts in d.arcs.values() for q in pts) + 1
    corners = {(F(int(q.x.numerator), int(q.x.denominator)),
                F(int(q.y.numerator), int(q.y.denominator)))
               for e in triangle_edges(t) for q in d.arcs[e]}
    # tilt the ray slightly until it avoids every corner of the boundary
    for k in range(50):
        tilt = F(k, 10007)
        count, clean = 0, True
        for e in triangle_edges(t):
            pts = d.arcs[e]
            for shift in ((0, 1) if d.mode is Mode.CYLINDER else (0,)):
                lo, hi = Pt(p.x + shift, p.y), Pt(p.x + shift + tilt, top)
                for a, b in zip(pts, pts[1:]):
                    kind, q = parametric_intersection(lo, hi, a, b)
                    if kind == "point" and q not in corners:
                        count += 1
                    elif kind != "none":
                        clean = False
        if clean:
            return count % 2 == 0
    raise ValueError("no generic oracle ray found")


def parametric_intersection(a, b, c, d):
    """Classify two closed segments with plain fractions and Cramer's rule.

    Returns ("none" | "point" | "shared_endpoint" | "overlap", point or None).
    Written without any of the package predicates.
    """
    from fractions import Fraction as F
    a, b, c, d = [(F(int(p[0].numerator), int(p[0].denominator)),
                   F(int(p[1].numerator), int(p[1].denominator))) for p in (a, b, c, d)]
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    qx, qy = c[0] - a[0], c[1] - a[1]
    if den != 0:
        t = (qx * sy - qy * sx) / den
        u = (qx * ry - qy * rx) / den
        if not (0 <= t <= 1 and 0 <= u <= 1):
            return "none", None
        p = (a[0] + t * rx, a[1] + t * ry)
        if t in (0, 1) and u in (0, 1):
            return "shared_endpoint", p
        return "point", p
    if qx * ry - qy * rx != 0:
        return "none", None  # parallel, distinct lines
    # collinear: project on the dominant axis of the first segment
    axis = 0 if rx != 0 else 1
    if rx == 0 and ry == 0:
        raise ValueError("degenerate segment")
    lo1, hi1 = sorted((a, b), key=lambda p: p[axis])
    lo2, hi2 = sorted((c, d), key=lambda p: p[axis])
    lo = max(lo1, lo2, key=lambda p: p[axis])
    hi = min(hi1, hi2, key=lambda p: p[axis])
    if lo[axis] > hi[axis]:
        return "none", None
    if lo[axis] == hi[axis]:
        kind = "shared_endpoint" if lo in (a, b) and lo in (c, d) else "point"
        return kind, lo
    return "overlap", None


def straight_crossings(d):
    """Crossing pairs of a straight-line plane drawing, by direct segment tests."""
    out = set()
    edges = sorted(d.arcs)
    for e, f in itertools.combinations(edges, 2):
        if set(e) & set(f):
            continue
        kind, _ = parametric_intersection(*d.arcs[e], *d.arcs[f])
        if kind == "point":
            out.add((e, f))
    return out


def brute_empty_triangles(d):
    """Empty triangles via the ray-parity side of every other vertex."""
    out = []
    for t in itertools.combinations(range(1, d.n + 1), 3):
        rest = [w for w in range(1, d.n + 1) if w not in t]
        sides = {path_parity_side(d, t, w) for w in rest}
        if len(sides) <= 1:
            out.append(t)
    return out


def brute_canonical(pairs, n):
    """Least sorted crossing-pair list over all n! relabelings."""
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        lab = dict(zip(range(1, n + 1), perm))
        cand = []
        for e, f in pairs:
            e2, f2 = edge(lab[e[0]], lab[e[1]]), edge(lab[f[0]], lab[f[1]])
            cand.append((e2, f2) if e2 < f2 else (f2, e2))
        cand = tuple(sorted(cand))
        if best is None or cand < best:
            best = cand
    return best
