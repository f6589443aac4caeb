import math

import pytest
from hypothesis import given, strategies as st

from quadpara import (
    ConvexPolygon,
    Degenerate,
    Direction,
    Line,
    NonFinite,
    NotConvex,
    ParallelLines,
    Point,
    TooFewVertices,
    canonicalize,
    chord_through,
    contains_point,
    det,
    extreme_vertex,
    line_intersection,
    make_convex_polygon,
    polygon_area,
    quad_area,
    random_convex,
    regular_ngon,
    triangle_area_signed,
    width,
)

coord = st.integers(min_value=-(2**20), max_value=2**20)
vec = st.tuples(coord, coord)


def shoelace(points):
    s = 0.0
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def test_det_examples():
    assert det((1, 0), (0, 1)) == 1
    assert det((2, 3), (2, 3)) == 0
    assert det((2, 0), (1, 3)) == 6


@given(vec, vec)
def test_det_antisymmetric(u, v):
    assert det(u, v) == -det(v, u)


def test_triangle_area_signed():
    assert triangle_area_signed((0, 0), (1, 0), (0, 1)) == 0.5
    assert triangle_area_signed((0, 0), (1, 0), (2, 0)) == 0
    assert triangle_area_signed((0, 0), (0, 1), (1, 0)) == -0.5


def test_quad_area_examples():
    assert quad_area((0, 0), (1, 0), (1, 1), (0, 1)) == 1
    assert quad_area((0, 0), (0, 0), (1, 0), (0, 1)) == 0.5
    pts = [(0, 0), (2, 0), (3, 2), (1, 3)]
    assert quad_area(*pts) == abs(shoelace(pts)) == 5.5


@given(st.lists(vec, min_size=4, max_size=4, unique=True))
def test_quad_area_matches_shoelace_on_hulls(pts):
    try:
        P = make_convex_polygon(canonicalize_hull(pts))
    except (Degenerate, TooFewVertices):
        return
    if P.n != 4:
        return
    assert quad_area(*P.vertices) == abs(shoelace(P.vertices))


def canonicalize_hull(pts):
    # tiny monotone-chain helper so hypothesis can feed arbitrary quads
    pts = sorted(set(pts))
    if len(pts) < 3:
        raise TooFewVertices("need 3")

    def half(order):
        chain = []
        for p in order:
            while len(chain) >= 2:
                ox, oy = chain[-2]
                ax, ay = chain[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lo = half(pts)
    hi = half(list(reversed(pts)))
    return lo[:-1] + hi[:-1]


def test_polygon_area(square, triangle, hexagon):
    assert polygon_area(square) == 1
    assert polygon_area(triangle) == 0.5
    assert polygon_area(hexagon) == pytest.approx(3 * math.sqrt(3) / 2, rel=1e-12)


def test_polygon_area_equals_triangle_fan():
    P = random_convex(20, 51, 300)
    fan = sum(
        triangle_area_signed(P[0], P[i], P[i + 1]) for i in range(1, P.n - 1)
    )
    assert polygon_area(P) == pytest.approx(fan, rel=1e-12)
    assert polygon_area(P) > 0


def test_make_convex_polygon_fixes_orientation():
    cw = [(0, 0), (0, 1), (1, 1), (1, 0)]
    P = make_convex_polygon(cw)
    assert polygon_area(P) == 1
    assert P.vertices == tuple(Point(*p) for p in reversed(cw))


def test_make_convex_polygon_rejections():
    with pytest.raises(TooFewVertices):
        make_convex_polygon([(0, 0), (1, 1)])
    with pytest.raises(Degenerate):
        make_convex_polygon([(0, 0), (1, 0), (2, 0), (1, 1)])
    with pytest.raises(Degenerate):
        make_convex_polygon([(0, 0), (0, 0), (1, 0), (0, 1)])
    with pytest.raises(NonFinite):
        make_convex_polygon([(0, 0), (1, 0), (0, float("nan"))])
    with pytest.raises(NotConvex):
        make_convex_polygon([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    P = make_convex_polygon([(0, 0), (1, 0), (0, 1)])
    assert P.n == 3


def test_make_convex_polygon_idempotent(corpus):
    for P in corpus[:20]:
        Q = make_convex_polygon(P.vertices)
        assert Q.vertices == P.vertices


def test_canonicalize_examples():
    assert canonicalize([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)]) == [
        Point(0, 0),
        Point(2, 0),
        Point(2, 2),
        Point(0, 2),
    ]
    sq = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert canonicalize(sq) == [Point(*p) for p in sq]
    assert canonicalize([(0, 0), (0, 0), (1, 0), (0, 1)]) == [
        Point(0, 0),
        Point(1, 0),
        Point(0, 1),
    ]
    with pytest.raises(Degenerate):
        canonicalize([(0, 0), (1, 0), (2, 0)])


def test_canonicalize_idempotent():
    ring = [(0, 0), (2, 0), (4, 0), (4, 1), (4, 2), (2, 3), (0, 2), (0, 1)]
    once = canonicalize(ring)
    assert canonicalize(once) == once
    make_convex_polygon(once)


def test_direction_identifies_opposites():
    assert Direction(1, 0) == Direction(-1, 0)
    assert Direction(2, 3) == Direction(-4, -6)
    assert Direction(1, 0) != Direction(0, 1)
    with pytest.raises(Degenerate):
        Direction(0, 0)


def test_extreme_vertex(square, triangle, hexagon):
    i = extreme_vertex(square, (0, 1))
    assert square[i].y == 1  # tie between (0,1) and (1,1): assert the value
    assert triangle[extreme_vertex(triangle, (1, 0))] == Point(1, 0)
    assert hexagon[extreme_vertex(hexagon, (1, 0))] == Point(1, 0)


def test_extreme_vertex_tie_breaks_later_in_ccw(square):
    # bottom edge is (0,0)->(1,0); for d=(0,-1) both are extreme
    i = extreme_vertex(square, (0, -1))
    assert i == 1


def test_width(square, triangle, hexagon):
    assert width(square, (1, 0)) == 1
    edge = (hexagon[1].x - hexagon[0].x, hexagon[1].y - hexagon[0].y)
    assert width(hexagon, edge) == pytest.approx(math.sqrt(3), rel=1e-12)
    assert width(triangle, (1, 1)) == pytest.approx(math.sqrt(2), rel=1e-12)


@given(st.integers(0, 10**6))
def test_width_direction_identification(seed):
    P = random_convex(10, seed % 97, 100)
    u = (1 + seed % 13, -(seed % 7))
    assert width(P, u) == width(P, (-u[0], -u[1]))


def test_chord_through_examples(square, triangle):
    seg = chord_through(square, (0.5, 0.5), (1, 0))
    assert (seg.a, seg.b) == (Point(0, 0.5), Point(1, 0.5))
    seg = chord_through(triangle, (0, 0), (1, 1))
    assert seg.a == Point(0, 0)
    assert seg.b == Point(0.5, 0.5)
    seg = chord_through(square, (1, 1), (1, -1))  # tangent at the corner
    assert seg.a == seg.b == Point(1, 1)
    seg = chord_through(square, (1, 1), (1, 1))  # full diagonal
    assert (seg.a, seg.b) == (Point(0, 0), Point(1, 1))


def test_chord_through_endpoints_on_polygon_and_line(corpus):
    for k, P in enumerate(corpus[:25]):
        q = P[k % P.n]
        u = (1 + k % 9, 2 - k % 5) if (1 + k % 9, 2 - k % 5) != (0, 0) else (1, 1)
        seg = chord_through(P, q, u)
        tol = 1e-9 * (P.scale + 1)
        for e in (seg.a, seg.b):
            assert contains_point(P, e, tol)
            assert abs(det((e.x - q.x, e.y - q.y), u)) <= tol * math.hypot(*u)


def test_line_intersection():
    x_axis = Line(Point(0, 0), Direction(1, 0))
    y_axis = Line(Point(0, 0), Direction(0, 1))
    assert line_intersection(x_axis, y_axis) == Point(0, 0)
    with pytest.raises(ParallelLines):
        line_intersection(x_axis, Line(Point(0, 1), Direction(1, 0)))
    p = line_intersection(
        Line(Point(0, 0), Direction(1, 1)), Line(Point(1, 0), Direction(-1, 1))
    )
    assert p == Point(0.5, 0.5)


def test_contains_point(square):
    assert contains_point(square, (0.5, 0.5), 0.0)
    assert not contains_point(square, (1.5, 0.5), 0.0)
    assert contains_point(square, (1 + 1e-12, 0.5), 1e-9)
    assert not contains_point(square, (1 + 1e-6, 0.5), 1e-9)


def test_polygon_indexing_wraps(square):
    assert square[4] == square[0]
    assert square[-1] == square[3]
    assert len(square) == 4


def test_polygon_winding_rejected():
    # all turns CCW but the ring winds twice
    outer = regular_ngon(5, 10.0).vertices
    doubled = []
    for k in range(10):
        p = outer[(2 * k) % 5]
        doubled.append((p.x + 0.01 * k, p.y))
    with pytest.raises((NotConvex, Degenerate)):
        ConvexPolygon(doubled)
