"""Constructors: Harborth's twisted drawings, random gt drawings, enumeration."""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from gmpy2 import mpq

from .cylinder import Cross, SweepWord, Vert, realize, replay
from .drawing import (CrossingSet, Drawing, Edge, Mode, all_edges, crossing_set, edge,
                      edge_str)
from .exactgeom import Pt


def twisted(n: int) -> Drawing:
    """Twisted drawing T_n as straight segments in the unrolled strip.

    Vertex ``i`` sits at angle ``i/(n+1)`` and radius ``i + 1/(i+2)**2``;
    edge ``{i, j}`` runs from vertex ``j`` once past the ray down to vertex
    ``i``. Integer radii would make three edges concurrent from n = 6 on.
    """
    if n < 3:
        raise ValueError("twisted drawings need n >= 3")
    delta = mpq(1, n + 1)
    verts = {i: Pt(i * delta, i + mpq(1, (i + 2) ** 2)) for i in range(1, n + 1)}
    arcs = {(i, j): (verts[j], Pt(verts[i].x + 1, verts[i].y)) for i, j in all_edges(n)}
    return Drawing(n, Mode.CYLINDER, verts, arcs, {e: True for e in arcs})


# --------------------------------------------------------------------------
# sweep-word search
#
# Every gt drawing of K_n arises from one of K_{n-1} by adding a vertex just
# after the ray: relabel the old vertices 2..n, let the new edges {1, j} be
# born at the old vertex events and route them through the old crossings
# until they meet again, contiguously, in front of vertex 1. Old events are
# replayed as a partial order (two events commute when they touch disjoint
# wires) and sibling moves are reduced with sleep sets.


class SearchExhausted(RuntimeError):
    """The node budget ran out before the search finished."""


@dataclass
class _Budget:
    limit: Optional[int]
    used: int = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchExhausted(f"node budget {self.limit} exceeded")


def _wires_of(ev, before, start) -> frozenset:
    """Wires an event touches; vertex events include the wires flanking the block."""
    if isinstance(ev, Cross):
        return frozenset((ev.e, ev.f))
    arr = [e for e in before if e[0] == ev.i]
    touched = set(arr) | set(ev.depart)
    if start > 0:
        touched.add(before[start - 1])
    if start + len(arr) < len(before):
        touched.add(before[start + len(arr)])
    return frozenset(touched)


def _event_wires(w: SweepWord) -> List[frozenset]:
    return [_wires_of(ev, before, start) for _, ev, before, _, start in replay(w)]


def _event_sort_key(ev):
    if isinstance(ev, Vert):
        return (0, ev.i, ev.depart, -1 if ev.rank is None else ev.rank)
    return (1, min(ev.e, ev.f), max(ev.e, ev.f))


def normal_form(w: SweepWord) -> SweepWord:
    """Lexicographically least event order among the commutation-equivalent ones."""
    wires = _event_wires(w)
    m = len(w.events)
    preds = [set() for _ in range(m)]
    last_on: Dict = {}
    for k in range(m):
        for x in wires[k]:
            if x in last_on:
                preds[k].add(last_on[x])
        for x in wires[k]:
            last_on[x] = k
    # wire-sharing events are ordered through the chain of last users
    succ = [[] for _ in range(m)]
    indeg = [0] * m
    for k in range(m):
        for p in preds[k]:
            succ[p].append(k)
            indeg[k] += 1
    ready = [k for k in range(m) if indeg[k] == 0]
    out = []
    while ready:
        ready.sort(key=lambda k: _event_sort_key(w.events[k]))
        k = ready.pop(0)
        out.append(w.events[k])
        for s in succ[k]:
            indeg[s] -= 1
            if indeg[s] == 0:
                ready.append(s)
    return SweepWord(w.n, w.pi0, tuple(out))


def word_key(w: SweepWord):
    nf = normal_form(w)
    return (nf.n, nf.pi0, nf.events)


def _relabel_event(ev):
    if isinstance(ev, Cross):
        return Cross((ev.e[0] + 1, ev.e[1] + 1), (ev.f[0] + 1, ev.f[1] + 1))
    return Vert(ev.i + 1, tuple((a + 1, b + 1) for a, b in ev.depart), ev.rank)


class _Extender:
    """Depth-first completion of one old word by a new first vertex.

    The new vertex ends up in some gap of the old ray order; fixing that gap
    fixes, for every new edge and every old edge that stays until the ray,
    on which side the new edge must finish. Crossings that would leave a
    wire on the wrong side for good are pruned.
    """

    def __init__(self, old: SweepWord, budget: _Budget, rng: Optional[random.Random] = None):
        self.n = old.n + 1
        self.events = [_relabel_event(ev) for ev in old.events]
        self.start = tuple((a + 1, b + 1) for a, b in old.pi0)
        wires = [frozenset((a + 1, b + 1) for a, b in ws) for ws in _event_wires(old)]
        m = len(self.events)
        self.preds = []
        for k in range(m):
            mask = 0
            for j in range(k):
                if wires[j] & wires[k]:
                    mask |= 1 << j
            self.preds.append(mask)
        self.succ = [[k for k in range(m) if self.preds[k] >> j & 1] for j in range(m)]
        self.vert_event = {ev.i: k for k, ev in enumerate(self.events) if isinstance(ev, Vert)}
        self.settle_bit = {i: 1 << k for i, k in self.vert_event.items()}
        self.full = (1 << m) - 1
        self.budget = budget
        self.rng = rng

    def _settled(self, x, done) -> bool:
        """Old wire *x* is present from now until the ray."""
        return bool(done & self.settle_bit[x[1]])

    def _misplaced(self, done, order, crossed):
        """Count settled wrong-side pairs; None if one of them can never be fixed."""
        news = [i for i, e in enumerate(order) if e[0] == 1]
        if not news:
            return 0
        count = 0
        for p, x in enumerate(order):
            if x[0] == 1 or not done & self.settle_bit[x[1]]:
                continue
            want_below = self.below[x]
            for i in news:
                if (p < i) != want_below:
                    wv = order[i]
                    if wv[1] in x or (wv, x) in crossed:
                        return None
                    count += 1
        return count

    def moves(self, order, crossed, ready, done):
        out = []
        pos = {e: i for i, e in enumerate(order)}
        for k in ready:
            ev = self.events[k]
            if isinstance(ev, Cross):
                a, b = pos[ev.e], pos[ev.f]
                if abs(a - b) == 1:
                    lo = min(a, b)
                    new = order[:lo] + (order[lo + 1], order[lo]) + order[lo + 2:]
                    out.append((("o", k), frozenset((ev.e, ev.f)), k, new, crossed, ev))
                continue
            out.extend(self._vertex_moves(k, ev, order, pos, crossed))
        for i, wv in enumerate(order):
            if wv[0] != 1:
                continue
            for j in (i - 1, i + 1):
                if not 0 <= j < len(order):
                    continue
                x = order[j]
                if x[0] == 1 or wv[1] in x or (wv, x) in crossed:
                    continue
                if self._settled(x, done) and (j < i) == self.below[x]:
                    continue
                lo = min(i, j)
                new = order[:lo] + (order[lo + 1], order[lo]) + order[lo + 2:]
                ev = Cross(*sorted((wv, x)))
                out.append((("x", wv, x), frozenset((wv, x)), None, new, crossed | {(wv, x)}, ev))
        return out

    def _vertex_moves(self, k, ev, order, pos, crossed):
        i = ev.i
        arr = [e for e in order if e[0] == i]
        new_wire = (1, i)
        out = []
        if arr:
            ps = sorted(pos[e] for e in arr)
            if ps[-1] - ps[0] != len(ps) - 1:
                return out
            gaps = [ps[0]]
        else:
            # old rank counts old wires below; new wires may share that gap
            olds = [idx for idx, e in enumerate(order) if e[0] != 1]
            r = ev.rank
            lo = olds[r - 1] + 1 if r > 0 else 0
            hi = olds[r] if r < len(olds) else len(order)
            gaps = list(range(lo, hi + 1))
        # departing edges at i keep their order until the ray
        p = sum(1 for e in ev.depart if self.below[e])
        dep = ev.depart[:p] + (new_wire,) + ev.depart[p:]
        for g in gaps:
            rest = order[:g] + order[g + len(arr):]
            flank = set(arr)
            if g > 0:
                flank.add(order[g - 1])
            if g + len(arr) < len(order):
                flank.add(order[g + len(arr)])
            new = rest[:g] + dep + rest[g:]
            vev = Vert(i, dep, None if arr else g)
            key = ("v", k, order[g - 1] if g > 0 else None)
            out.append((key, frozenset(flank | set(dep)), k, new, crossed, vev))
        return out

    def _greedy_order(self, moves, order):
        """Random order biased towards crossings that head for the target gap."""
        pos = {e: i for i, e in enumerate(order)}

        def rank(mv):
            key = mv[0]
            if key[0] != "x":
                return 1
            _, wv, x = key
            return 0 if (pos[x] < pos[wv]) != self.below[x] else 2

        return sorted(moves, key=lambda mv: (rank(mv), self.rng.random()))

    def _word(self, order, path) -> SweepWord:
        return SweepWord(self.n, tuple(order), (Vert(1, (), None),) + tuple(path))

    def run(self, gaps=None) -> Iterator[SweepWord]:
        """Yield completions landing in *gaps* (default: every gap)."""
        if gaps is None:
            gaps = list(range(len(self.start) + 1))
        for g in gaps:
            self.below = {x: idx < g for idx, x in enumerate(self.start)}
            yield from self._run_gap()

    def _run_gap(self) -> Iterator[SweepWord]:
        path: List = []

        def dfs(done, order, crossed, sleep, ready):
            self.budget.tick()
            bad = self._misplaced(done, order, crossed)
            if bad is None:
                return
            if done == self.full and bad == 0:
                # every old wire is settled and on the right side of every new one
                yield self._word(order, path)
            moves = self.moves(order, crossed, ready, done)
            if self.rng is not None:
                moves = self._greedy_order(moves, order)
            explored = []
            for key, wires, k, new, ncrossed, ev in moves:
                if key in sleep:
                    continue
                child_sleep = {kk: ww for kk, ww in list(sleep.items()) + explored
                               if not (ww & wires)}
                path.append(ev)
                ndone, nready = done, ready
                if k is not None:
                    ndone = done | (1 << k)
                    fresh = [j for j in self.succ[k] if not self.preds[j] & ~ndone]
                    nready = tuple(sorted([j for j in ready if j != k] + fresh))
                yield from dfs(ndone, new, ncrossed, child_sleep, nready)
                path.pop()
                explored.append((key, wires))

        ready = tuple(k for k, mask in enumerate(self.preds) if not mask)
        yield from dfs(0, self.start, frozenset(), {}, ready)


BASE_WORD = SweepWord(1, (), (Vert(1, (), 0),))


def _rotation_moves(w: SweepWord):
    """Crossings that may be moved from the end of *w* to its front.

    Returns the movable event indices and, for each event, the set of later
    events sharing a wire with it (these have to move first).
    """
    wires = _event_wires(w)
    m = len(w.events)
    reach: List[set] = [set() for _ in range(m)]
    for j in reversed(range(m)):
        for k in range(j + 1, m):
            if wires[j] & wires[k]:
                reach[j] |= {k} | reach[k]
    movable = [k for k in range(m) if isinstance(w.events[k], Cross)
               and not any(isinstance(w.events[s], Vert) for s in reach[k])]
    return movable, reach


def _rotate(w: SweepWord, chosen) -> SweepWord:
    m = len(w.events)
    rest = [w.events[k] for k in range(m) if k not in chosen]
    tail = [w.events[k] for k in range(m) if k in chosen]
    steps = list(replay(SweepWord(w.n, w.pi0, tuple(rest + tail))))
    return SweepWord(w.n, steps[len(rest) - 1][3], tuple(tail + rest))


def rotations(w: SweepWord) -> List[SweepWord]:
    """Words of the same drawing with the ray moved back past trailing crossings."""
    movable, reach = _rotation_moves(w)
    out = []
    seen = set()

    def grow(chosen: frozenset):
        if chosen in seen:
            return
        seen.add(chosen)
        if chosen:
            out.append(_rotate(w, chosen))
        for k in movable:
            if k not in chosen and reach[k] <= chosen:
                grow(chosen | {k})

    grow(frozenset())
    return out


def random_rotation(w: SweepWord, rng: random.Random) -> SweepWord:
    """Move the ray back past a random admissible set of trailing crossings."""
    movable, reach = _rotation_moves(w)
    chosen: set = set()
    while rng.random() < 0.75:
        ready = [k for k in movable if k not in chosen and reach[k] <= chosen]
        if not ready:
            break
        chosen.add(rng.choice(ready))
    return _rotate(w, chosen) if chosen else w


# --------------------------------------------------------------------------
# weak isomorphism

@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Least sorted crossing-pair list over all vertex relabelings."""

    n: int
    pairs: Tuple[Tuple[Edge, Edge], ...]

    def encode(self) -> bytes:
        body = ";".join(f"{edge_str(e)}x{edge_str(f)}" for e, f in self.pairs)
        return f"{self.n}|{body}".encode()

    def digest(self) -> str:
        return hashlib.sha1(self.encode()).hexdigest()[:12]


def _vertex_invariant(cs: CrossingSet, n: int) -> Dict[int, tuple]:
    # number of crossings on the edges at v
    at = {v: 0 for v in range(1, n + 1)}
    for e, f in cs:
        for v in e + f:
            at[v] += 1
    return {v: (at[v],) for v in at}


def canonical_key(cs: CrossingSet, n: int) -> CanonicalKey:
    """Canonical form of a crossing set under relabeling.

    Vertices are first grouped by an invariant (crossings on their incident
    edges); only relabelings that list the groups in invariant order are
    scanned, which leaves the minimum well defined and cuts the n! scan.
    """
    inv = _vertex_invariant(cs, n)
    groups: Dict[tuple, List[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(inv[v], []).append(v)
    ordered = [groups[k] for k in sorted(groups)]
    best = None
    pairs = list(cs)
    for combo in itertools.product(*(itertools.permutations(g) for g in ordered)):
        seq = [v for part in combo for v in part]
        label = {v: i + 1 for i, v in enumerate(seq)}
        cand = []
        for e, f in pairs:
            e2, f2 = edge(label[e[0]], label[e[1]]), edge(label[f[0]], label[f[1]])
            cand.append((e2, f2) if e2 < f2 else (f2, e2))
        cand.sort()
        t = tuple(cand)
        if best is None or t < best:
            best = t
    return CanonicalKey(n, best if best is not None else ())


def weakly_isomorphic(d1: Drawing, d2: Drawing) -> bool:
    if d1.n != d2.n:
        raise ValueError("drawings have different vertex counts")
    return canonical_key(crossing_set(d1), d1.n) == canonical_key(crossing_set(d2), d2.n)


# --------------------------------------------------------------------------
# random sampling and exhaustive enumeration

DEFAULT_NODE_BUDGET = 2_000_000


def random_gt_word(n: int, seed: int, budget: int = DEFAULT_NODE_BUDGET) -> SweepWord:
    """Sweep word of a random gt drawing of K_n, deterministic in ``(n, seed)``.

    Vertices are added one at a time by randomized depth-first completion,
    each followed by a random move of the ray past trailing crossings.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(seed)
    total = _Budget(budget)
    word = BASE_WORD
    while word.n < n:
        word = random_rotation(_random_extension(word, rng, total), rng)
    return word


def _random_extension(word: SweepWord, rng: random.Random, total: _Budget) -> SweepWord:
    m = len(word.pi0)
    inner = list(range(1, m))
    rng.shuffle(inner)
    ends = [0, m] if m else [0]
    rng.shuffle(ends)
    # Interior gaps are often infeasible and costly to refute, so they get a
    # few cheap attempts; the two extreme gaps are the reliable fallback.
    attempts = [(g, 3 * m + 20) for g in inner[:2]] + [(g, None) for g in ends]
    for g, limit in attempts:
        local = _Budget(limit)
        ext = _Extender(word, local, rng=random.Random(rng.getrandbits(64)))
        try:
            found = next(ext.run([g]), None)
        except SearchExhausted:
            found = None
        total.used += local.used
        if total.limit is not None and total.used > total.limit:
            raise SearchExhausted(f"no gt completion within {total.limit} nodes")
        if found is not None:
            return found
    raise SearchExhausted("no gt completion exists")  # pragma: no cover


def random_gt(n: int, seed: int, budget: int = DEFAULT_NODE_BUDGET) -> Drawing:
    return realize(random_gt_word(n, seed, budget))


@dataclass
class EnumResult:
    n: int
    classes: List[Tuple[CanonicalKey, SweepWord]]
    exhaustive: bool
    nodes: int = 0
    # completions found per class (words up to commuting independent events)
    sizes: Dict[CanonicalKey, int] = field(default_factory=dict)


def sweep_words(n: int, budget: Optional[int] = None) -> List[SweepWord]:
    """Every sweep word of K_n, one per commutation class of its events.

    Exponential in n; meant for small n and for cross-checking.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    b = _Budget(budget)
    level = [BASE_WORD]
    for _ in range(2, n + 1):
        words: Dict = {}
        for w in level:
            for w2 in _Extender(w, b).run():
                for r in [w2] + rotations(w2):
                    words.setdefault(word_key(r), r)
        level = list(words.values())
    return level


def enumerate_gt(n: int, budget: Optional[int] = None, verify: bool = True) -> EnumResult:
    """All gt drawings of K_n up to weak isomorphism, one witness word each.

    Words of K_m (m < n) are kept up to commutation of independent events
    and every placement of the ray; only crossing-set classes are kept at
    the last level. With a node budget the result may be partial.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    b = _Budget(budget)
    level = [BASE_WORD]
    classes: Dict[CanonicalKey, SweepWord] = {}
    sizes: Dict[CanonicalKey, int] = {}
    exhaustive = True
    try:
        for m in range(2, n + 1):
            words: Dict = {}
            for w in level:
                for w2 in _Extender(w, b).run():
                    if m == n:
                        key = canonical_key(w2.cross_pairs(), n)
                        classes.setdefault(key, w2)
                        sizes[key] = sizes.get(key, 0) + 1
                    else:
                        for r in [w2] + rotations(w2):
                            words.setdefault(word_key(r), r)
            level = list(words.values())
        if n == 1:
            key = canonical_key(CrossingSet(), 1)
            classes[key], sizes[key] = BASE_WORD, 1
    except SearchExhausted:
        exhaustive = False
    result = EnumResult(n, sorted(classes.items(), key=lambda kv: kv[0]), exhaustive, b.used,
                        sizes)
    if verify and n >= 4:
        from .triangles import Level, verify_suite
        for key, w in result.classes:
            rep = verify_suite(realize(w), Level.GT)
            if not rep.passed:
                raise AssertionError(f"class {key.digest()} fails {rep.first_failure()}")
    return result
