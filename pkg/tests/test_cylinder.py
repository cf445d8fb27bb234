from dataclasses import replace

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from conftest import convex
from gtwist.construct import random_gt_word, twisted
from gtwist.cylinder import (Cross, Side, SweepError, SweepWord, Vert, extract_sweep_word,
                             radial_side, radius_at, realize, replay, separates_o_z,
                             validate_gt, validate_sweep_word, z_side)
from gtwist.exactgeom import Pt
from gtwist.drawing import (Drawing, DrawingError, crossing_set, planarize,
                            side_partition, triangles, validate_simple)
from oracles import brute_force_words, nested_pairs, path_parity_side


def codes(w):
    return validate_sweep_word(w).codes()


@pytest.fixture
def w4():
    return extract_sweep_word(twisted(4))


def test_twisted_word_is_valid(w4):
    assert codes(w4) == []
    assert [ev.i for ev in w4.events if isinstance(ev, Vert)] == [1, 2, 3, 4]
    assert set(w4.cross_pairs()) == nested_pairs(4)


def test_replay_reports_final_order(w4):
    steps = list(replay(w4))
    assert len(steps) == len(w4.events)
    assert steps[-1][3] == w4.pi0


def test_error_codes(w4):
    evs = list(w4.events)
    cross_at = next(k for k, ev in enumerate(evs) if isinstance(ev, Cross))
    vert_at = [k for k, ev in enumerate(evs) if isinstance(ev, Vert)]

    adj = replace(w4, events=tuple(evs[:cross_at] + [Cross((1, 2), (2, 3))] + evs[cross_at:]))
    assert codes(adj) == ["ADJACENT_PAIR_CROSSES"]

    twice = replace(w4, events=tuple(evs[:cross_at + 1] + [evs[cross_at]] + evs[cross_at + 1:]))
    assert codes(twice)[0] in ("PAIR_CROSSES_TWICE",)

    order = replace(w4, events=tuple(e for k, e in enumerate(evs) if k != vert_at[1]))
    assert codes(order) == ["VERTEX_ORDER"]

    bad_pi0 = replace(w4, pi0=w4.pi0[:-1])
    assert codes(bad_pi0) == ["SCHEMA_ERROR"]

    v1 = evs[vert_at[-1]]
    bad_dep = replace(w4, events=tuple(evs[:vert_at[-1]] + [Vert(4, ((1, 4), (2, 4)))]
                                       + evs[vert_at[-1] + 1:]))
    assert codes(bad_dep) == ["BAD_DEPART"]
    assert v1.i == 4


def k3_word(rank):
    pi0 = ((1, 2), (1, 3), (2, 3))
    return SweepWord(3, pi0, (Vert(1, ()), Vert(2, ((1, 2),)), Vert(3, ((1, 3), (2, 3)), rank)))


def test_k3_words():
    assert codes(k3_word(1)) == []
    # the departing block of 3 lands below 1-2, so the sweep does not close
    assert codes(k3_word(0)) == ["CLOSURE_MISMATCH"]
    assert codes(k3_word(5)) == ["BAD_RANK"]
    assert codes(k3_word(None)) == ["BAD_RANK"]


def test_nonadjacent_swap(w4):
    bad = SweepWord(4, w4.pi0, (Cross((1, 2), (3, 4)),) + w4.events)
    assert codes(bad) == ["NONADJACENT_SWAP"]


def test_brute_force_words_all_validate():
    for w in brute_force_words(4)[:40]:
        assert codes(w) == []
        d = realize(w)
        assert validate_simple(d).ok
        assert validate_gt(d).verdict


@pytest.mark.parametrize("seed", range(8))
def test_realize_extract_round_trip(seed):
    n = 4 + seed % 4
    w = random_gt_word(n, seed)
    d = realize(w)
    assert validate_simple(d).ok
    assert validate_gt(d).verdict
    w2 = extract_sweep_word(d)
    assert set(w2.cross_pairs()) == set(w.cross_pairs()) == set(crossing_set(d))
    assert realize(w2) == d or set(crossing_set(realize(w2))) == set(crossing_set(d))


def test_twisted_crossings_are_nested_pairs():
    for n in range(3, 9):
        assert set(crossing_set(twisted(n))) == nested_pairs(n)


def test_gt_requires_cylinder():
    with pytest.raises(DrawingError) as err:
        validate_gt(convex(4))
    assert err.value.code == "MODE_MISMATCH"
    with pytest.raises(DrawingError):
        radial_side(convex(4), (1, 2, 3), 4)
    with pytest.raises(DrawingError):
        extract_sweep_word(convex(4))


def test_not_gt_extract():
    d = twisted(4)
    # 1-2 goes the short way round and never meets the ray
    arcs = dict(d.arcs)
    arcs[(1, 2)] = (d.vertices[1], d.vertices[2])
    bad = Drawing(d.n, d.mode, d.vertices, arcs, {**d.wrap, (1, 2): False})
    assert validate_simple(bad).ok
    rep = validate_gt(bad)
    assert rep.is_c_monotone and not rep.verdict
    assert [e for e, hit in rep.crosses_ray.items() if not hit] == [(1, 2)]
    with pytest.raises(DrawingError) as err:
        extract_sweep_word(bad)
    assert err.value.code == "NOT_GT"


def test_radius_at_periodic():
    d = twisted(5)
    for e in d.arcs:
        r = radius_at(d, e, mpq(1, 1000))
        assert r is not None
        assert radius_at(d, e, mpq(1001, 1000)) == r


@settings(max_examples=15, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10_000))
def test_radial_side_matches_cells(n, seed):
    d = realize(random_gt_word(n, seed))
    arr = planarize(d)
    for t in triangles(n):
        side_a, side_z = side_partition(d, arr, t)
        for w in range(1, n + 1):
            if w in t:
                continue
            assert z_side(d, t, w) == (w in side_z)
            o_side = radial_side(d, t, w) is Side.O_SIDE
            assert o_side == ((w in side_z) != separates_o_z(d, t))
            assert path_parity_side(d, t, w) == (w in side_z)


def test_radial_side_rejects_own_vertex():
    with pytest.raises(ValueError):
        radial_side(twisted(4), (1, 2, 3), 2)


def test_sweep_error_is_drawing_error():
    assert issubclass(SweepError, DrawingError)
    with pytest.raises(SweepError):
        list(replay(SweepWord(3, (), ())))


def test_arc_turning_back_is_not_c_monotone():
    d = twisted(3)
    a, b = d.vertices[1], d.vertices[2]
    arcs = dict(d.arcs)
    # 1-2 runs past vertex 1's angle and comes back, so one ray meets it twice
    mid = Pt(a.x + 1 + mpq(1, 20), mpq(1, 10))
    arcs[(1, 2)] = (b, mid, Pt(a.x + 1, a.y))
    back = Drawing(3, d.mode, d.vertices, arcs, dict(d.wrap))
    assert validate_simple(back).ok
    rep = validate_gt(back)
    assert not rep.is_c_monotone and not rep.verdict
