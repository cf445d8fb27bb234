import itertools
import random
from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import assume, given, settings, strategies as st

from conftest import convex, straight_plane
from gtwist.construct import twisted
from gtwist.drawing import (CrossingSet, Drawing, DrawingError, Mode, all_edges,
                            consecutive_in_rotation, crossing_points, crossing_set, edge,
                            edge_str, planarize, rotation_system, side_partition,
                            triangle_edges, triangles, validate_simple)
from gtwist.exactgeom import Pt
from oracles import path_parity_side, straight_crossings


def P(x, y):
    return Pt(mpq(x), mpq(y))


def with_arc(d, e, pts):
    arcs = dict(d.arcs)
    arcs[e] = tuple(pts)
    return Drawing(d.n, d.mode, d.vertices, arcs, dict(d.wrap))


def test_labels():
    assert edge(3, 1) == (1, 3)
    assert edge_str((2, 5)) == "2-5"
    assert len(all_edges(6)) == 15
    assert len(triangles(5)) == 10
    assert triangle_edges((1, 2, 3)) == ((1, 2), (1, 3), (2, 3))


def test_structure_errors(convex_k4):
    arcs = dict(convex_k4.arcs)
    del arcs[(1, 2)]
    with pytest.raises(DrawingError) as err:
        Drawing(4, Mode.PLANE, convex_k4.vertices, arcs, {})
    assert err.value.code == "SCHEMA_ERROR"
    with pytest.raises(DrawingError):
        with_arc(convex_k4, (1, 2), [P(0, 0), P(3, 0)])  # misses vertex 2
    verts = dict(convex_k4.vertices)
    verts[2] = verts[1]
    with pytest.raises(DrawingError):
        Drawing(4, Mode.PLANE, verts, convex_k4.arcs, {})


def test_convex_k4(convex_k4):
    assert validate_simple(convex_k4).ok
    assert set(crossing_set(convex_k4)) == {((1, 3), (2, 4))}
    (p, e, f), = crossing_points(convex_k4)
    assert p == P(2, 2) and (e, f) == ((1, 3), (2, 4))
    assert rotation_system(convex_k4)[1] == (2, 3, 4)
    arr = planarize(convex_k4)
    # 5 nodes, 8 pieces: 4 bounded cells and the unbounded one
    assert arr.num_cells == 5
    assert arr.euler_ok()


def test_k3_has_two_cells():
    arr = planarize(straight_plane([(0, 0), (1, 0), (0, 1)]))
    assert arr.num_cells == 2


def test_double_crossing(double_crossing_k4):
    rep = validate_simple(double_crossing_k4)
    assert rep.codes() == ["DOUBLE_CROSSING"]
    assert rep.violations[0].items == ((1, 2), (3, 4))
    with pytest.raises(DrawingError) as err:
        crossing_set(double_crossing_k4)
    assert err.value.code == "DOUBLE_CROSSING"


def test_adjacent_edges_crossing(convex_k4):
    # 1-2 swings out past x = 4 and so crosses its neighbour 2-3
    bad = with_arc(convex_k4, (1, 2), [P(0, 0), P(5, 2), P(4, 0)])
    assert "ADJACENT_CROSSING" in validate_simple(bad).codes()


def test_vertex_on_arc(convex_k4):
    bad = with_arc(convex_k4, (1, 2), [P(0, 0), P(4, 4), P(4, 0)])
    assert "VERTEX_ON_ARC" in validate_simple(bad).codes()


def test_touching_is_degenerate(convex_k4):
    # 1-3 bends so that it only touches 2-4 at (2, 2)
    bad = with_arc(convex_k4, (1, 3), [P(0, 0), P(1, 3), P(2, 2), P(3, 3), P(4, 4)])
    assert "DEGENERATE_CONTACT" in validate_simple(bad).codes()


def test_overlap_is_degenerate(convex_k4):
    bad = with_arc(convex_k4, (1, 3), [P(0, 0), P(1, 3), P(3, 1), P(4, 4)])
    codes = validate_simple(bad).codes()
    assert "DEGENERATE_CONTACT" in codes or "DOUBLE_CROSSING" in codes


def test_triple_point():
    # three diagonals of a regular-ish hexagon through the origin
    d = straight_plane([(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)])
    assert "TRIPLE_POINT" in validate_simple(d).codes()


def test_self_intersecting_arc(convex_k4):
    bad = with_arc(convex_k4, (1, 2), [P(0, 0), P(2, -2), P(2, -1), P(1, -2), P(4, 0)])
    assert "NONSIMPLE_ARC" in validate_simple(bad).codes()


def test_crossing_set_text_round_trip():
    cs = crossing_set(twisted(6))
    text = cs.export()
    assert text.splitlines()[0] == "1-4 x 2-3"
    assert CrossingSet.parse(text) == cs
    assert text.splitlines() == sorted(text.splitlines())


def test_crossing_set_pair_normalisation():
    cs = CrossingSet([((3, 4), (1, 2))])
    assert cs.sorted_pairs() == [((1, 2), (3, 4))]
    with pytest.raises(ValueError):
        CrossingSet([((1, 2), (2, 3))])


coords = st.integers(-20, 20)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=4, max_size=6, unique=True))
def test_straight_line_crossings_match_oracle(pts):
    d = straight_plane(pts)
    assume(validate_simple(d).ok)
    assert set(crossing_set(d)) == straight_crossings(d)
    arr = planarize(d)
    x = len(crossing_set(d))
    v, e = d.n + x, comb(d.n, 2) + 2 * x
    assert arr.num_cells == e - v + 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=4, max_size=6, unique=True))
def test_side_partition_matches_parity(pts):
    d = straight_plane(pts)
    assume(validate_simple(d).ok)
    arr = planarize(d)
    for t in triangles(d.n):
        side_a, side_b = side_partition(d, arr, t)
        for w in side_b:
            assert path_parity_side(d, t, w)
        for w in side_a:
            assert not path_parity_side(d, t, w)


def test_rotation_mirrors_reverse():
    rng = random.Random(5)
    pts = [(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(5)]
    d = straight_plane(pts)
    m = straight_plane([(-x, y) for x, y in pts])
    r1, r2 = rotation_system(d), rotation_system(m)
    for v in r1:
        cyc = r1[v]
        back = (cyc[0],) + tuple(reversed(cyc[1:]))
        assert r2[v] == back


def test_consecutive_in_rotation():
    rot = {1: (2, 3, 4, 5)}
    assert consecutive_in_rotation(rot, 1, 2, 3)
    assert consecutive_in_rotation(rot, 1, 5, 2)
    assert not consecutive_in_rotation(rot, 1, 2, 4)


def test_convex_locate_cells():
    d = convex(5)
    arr = planarize(d)
    assert arr.locate(P(100, -100)) == arr.outer
    inside = arr.locate(P(mpq(21, 10), mpq(57, 10)))
    assert inside != arr.outer
    with pytest.raises(DrawingError) as err:
        arr.locate(d.vertices[3])
    assert err.value.code == "DEGENERATE_QUERY"
    assert arr.euler_ok()


def test_twisted_cylinder_arrangement():
    for n in range(3, 7):
        d = twisted(n)
        arr = planarize(d)
        assert arr.euler_ok()
        assert arr.o_cell is not None and arr.o_cell != arr.outer
        # cylinder: V - E + F = 2 as on a sphere with the two ends added
        assert len(crossing_set(d)) == comb(n, 4)


@pytest.mark.parametrize("n", [4, 5])
def test_every_pair_of_straight_k4_crossings_is_at_most_one(n):
    d = convex(n)
    cs = crossing_set(d)
    for quad in itertools.combinations(range(1, n + 1), 4):
        inside = [p for p in cs if set(p[0]) | set(p[1]) <= set(quad)]
        assert len(inside) == 1
