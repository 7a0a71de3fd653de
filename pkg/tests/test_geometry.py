import math

import numpy as np
import pytest

from polycover import (
    Footprint,
    Point,
    Segment,
    dist_l2,
    dist_linf,
    footprint_contains,
    point_in_polygon,
    polygon_validate,
)
from polycover.errors import (
    DegenerateArea,
    NonFinite,
    SelfIntersecting,
    TooFewVertices,
)
from polycover.geometry import point_segment_distance, points_in_polygon

from conftest import random_convex

SQRT2 = math.sqrt(2.0)


def test_dist_l2_examples():
    assert dist_l2(Point(0, 0), Point(0, 0)) == 0.0
    assert dist_l2(Point(0, 0), Point(3, 4)) == 5.0
    assert dist_l2(Point(1, 1), Point(-2, 5)) == 5.0


def test_dist_linf_examples():
    assert dist_linf(Point(0, 0), Point(3, 4)) == 4.0
    assert dist_linf(Point(0, 0), Point(0, 0)) == 0.0
    assert dist_linf(Point(-1, 2), Point(2, 0)) == 3.0


@pytest.mark.parametrize("dist", [dist_l2, dist_linf])
def test_metric_axioms(dist):
    rng = np.random.default_rng(7)
    pts = rng.uniform(-10, 10, size=(10_000, 3, 2))
    for a, b, c in pts:
        p, q, r = Point(*a), Point(*b), Point(*c)
        assert dist(p, q) >= 0.0
        assert dist(p, q) == dist(q, p)
        assert dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12


def test_metric_inequality_chain():
    rng = np.random.default_rng(8)
    for a, b in rng.uniform(-10, 10, size=(10_000, 2, 2)):
        p, q = Point(*a), Point(*b)
        linf = dist_linf(p, q)
        l2 = dist_l2(p, q)
        assert linf <= l2 + 1e-12
        assert l2 <= SQRT2 * linf + 1e-12


UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_point_in_polygon_examples():
    sq = polygon_validate(UNIT_SQUARE)
    assert point_in_polygon(Point(0.5, 0.5), sq)
    assert not point_in_polygon(Point(2, 2), sq)
    assert point_in_polygon(Point(0, 0.5), sq)  # boundary counts as inside


def _winding_inside(p, poly):
    # independent nonzero-winding reference
    wn = 0
    v = poly.vertices
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if a.y <= p.y:
            if b.y > p.y and cross > 0:
                wn += 1
        elif b.y <= p.y and cross < 0:
            wn -= 1
    return wn != 0


def test_point_in_polygon_matches_winding_reference():
    rng = np.random.default_rng(9)
    for _ in range(20):
        poly = random_convex(rng)
        probes = rng.uniform(-1.5, 1.5, size=(500, 2))
        for x, y in probes:
            p = Point(float(x), float(y))
            if any(point_segment_distance(p, e.a, e.b) <= 1e-9 for e in poly.edges()):
                continue
            assert point_in_polygon(p, poly) == _winding_inside(p, poly)


def test_points_in_polygon_batch_matches_scalar():
    rng = np.random.default_rng(10)
    poly = random_convex(rng)
    xs = rng.uniform(-1.5, 1.5, size=300)
    ys = rng.uniform(-1.5, 1.5, size=300)
    batch = points_in_polygon(xs, ys, poly)
    for x, y, got in zip(xs, ys, batch):
        assert got == point_in_polygon(Point(float(x), float(y)), poly)


def test_polygon_validate_unit_square():
    sq = polygon_validate(UNIT_SQUARE)
    assert sq.n == 4
    assert sq.area() == pytest.approx(1.0)
    assert sq.signed_area() > 0
    assert not sq.flipped


def test_polygon_validate_bow_tie_rejected():
    with pytest.raises(SelfIntersecting):
        polygon_validate([(0, 0), (1, 1), (1, 0), (0, 1)])


def test_polygon_validate_clockwise_flipped():
    cw = [(0, 0), (0, 1), (1, 1), (1, 0)]
    sq = polygon_validate(cw)
    assert sq.signed_area() > 0
    assert sq.area() == pytest.approx(1.0)
    assert sq.flipped
    assert [p.as_tuple() for p in sq.input_vertices()] == [(0, 0), (0, 1), (1, 1), (1, 0)]


def test_polygon_validate_errors():
    with pytest.raises(TooFewVertices):
        polygon_validate([(0, 0), (1, 1)])
    with pytest.raises(NonFinite):
        polygon_validate([(0, 0), (1, 0), (float("nan"), 1)])
    with pytest.raises(SelfIntersecting):
        polygon_validate([(0, 0), (1, 0), (1, 0), (0, 1)])  # duplicate vertex
    with pytest.raises(DegenerateArea):
        polygon_validate([(0, 0), (1e-7, 0), (0, 1e-7)])
    with pytest.raises(SelfIntersecting):
        polygon_validate([(0, 0), (2, 0), (1, 0.5), (1, -0.5)])  # edge crosses edge 0


def test_footprint_contains_examples():
    square = Footprint("axis_square", Point(0, 0), 2.0)
    assert footprint_contains(square, Point(1, 1))  # corner is inclusive
    circle = Footprint("circle", Point(0, 0), 1.0)
    assert not footprint_contains(circle, Point(1, 0.001))
    assert footprint_contains(circle, Point(0, 0))


def test_rotated_square_inside_sqrt2_axis_square():
    # an axis square of side sqrt(2)*l holds any l-side square rotated about
    # the same center, checked at the corners over a full degree sweep
    for side in (1.0, 0.7):
        outer = Footprint("axis_square", Point(0, 0), SQRT2 * side)
        for deg in range(360):
            a = math.radians(deg)
            c, s = math.cos(a), math.sin(a)
            h = side / 2.0
            for dx, dy in ((h, h), (-h, h), (-h, -h), (h, -h)):
                corner = Point(c * dx - s * dy, s * dx + c * dy)
                assert footprint_contains(outer, corner)


def test_segment_rejects_degenerate():
    with pytest.raises(DegenerateArea):
        Segment(Point(0, 0), Point(0, 0))
