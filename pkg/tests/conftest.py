import pytest
from gmpy2 import mpq

from gtwist.drawing import Drawing, Mode, all_edges
from gtwist.exactgeom import Pt


def straight_plane(points):
    """Straight-line plane drawing on the given points (labels 1..n)."""
    verts = {i + 1: Pt(mpq(x), mpq(y)) for i, (x, y) in enumerate(points)}
    arcs = {e: (verts[e[0]], verts[e[1]]) for e in all_edges(len(points))}
    return Drawing(len(points), Mode.PLANE, verts, arcs, {})


def convex(n):
    """Points on the parabola y = x^2, which are in convex position."""
    return straight_plane([(i, i * i) for i in range(n)])


@pytest.fixture
def convex_k4():
    return straight_plane([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture
def convex_k5():
    return convex(5)


@pytest.fixture
def double_crossing_k4():
    """K_4 whose disjoint edges 1-2 and 3-4 cross twice; no other defect."""
    P = lambda x, y: Pt(mpq(x), mpq(y))
    V = {1: P(0, 0), 2: P(6, 0), 3: P(2, 2), 4: P(4, 2)}
    arcs = {(1, 2): (V[1], V[2]), (1, 3): (V[1], V[3]), (1, 4): (V[1], P(3, 5), V[4]),
            (2, 3): (V[2], P(3, 6), V[3]), (2, 4): (V[2], V[4]),
            (3, 4): (V[3], P(3, -1), V[4])}
    return Drawing(4, Mode.PLANE, V, arcs, {})
