import math

import numpy as np
import pytest

from polycover import (
    Point,
    continuous_cover_bounds,
    discrete_kcenter_exact,
    farthest_first,
    grid_cover_feasible,
    polygon_validate,
)
from polycover.errors import EmptyInput, TooLarge, ZeroK

from conftest import random_points

SQRT2 = math.sqrt(2.0)
UNIT_SQUARE = polygon_validate([(0, 0), (1, 0), (1, 1), (0, 1)])
TRIANGLE = [Point(0, 0), Point(4, 0), Point(4, 3)]


def test_discrete_two_points_tie_breaks_lexicographic():
    radius, centers = discrete_kcenter_exact([Point(0, 0), Point(2, 0)], 1, "linf")
    assert radius == 2.0
    assert centers == (0,)


def test_discrete_345_enumeration():
    radius, centers = discrete_kcenter_exact(TRIANGLE, 2, "l2")
    assert radius == 3.0
    assert centers == (0, 1)  # ties with (0, 2); lexicographic order wins


def test_discrete_k_at_least_n():
    radius, centers = discrete_kcenter_exact(TRIANGLE, 3, "l2")
    assert radius == 0.0
    assert centers == (0, 1, 2)


def test_discrete_guardrails():
    rng = np.random.default_rng(31)
    with pytest.raises(TooLarge):
        discrete_kcenter_exact(random_points(rng, 26), 2, "l2")
    with pytest.raises(TooLarge):
        discrete_kcenter_exact(random_points(rng, 10), 4, "l2")
    with pytest.raises(ZeroK):
        discrete_kcenter_exact(TRIANGLE, 0, "l2")
    with pytest.raises(EmptyInput):
        discrete_kcenter_exact([], 1, "l2")


def test_discrete_never_exceeds_greedy():
    rng = np.random.default_rng(32)
    for _ in range(30):
        pts = random_points(rng, int(rng.integers(3, 13)))
        k = int(rng.integers(1, 4))
        for metric in ("l2", "linf"):
            exact, _ = discrete_kcenter_exact(pts, k, metric)
            assert exact <= farthest_first(pts, k, metric).radius + 1e-12


def test_bounds_unit_square_circle():
    b = continuous_cover_bounds(UNIT_SQUARE, 1, "circle", 0.05)
    target = SQRT2 / 2
    assert b.lower <= target + 1e-9
    assert b.upper >= target - 1e-9
    assert b.upper - b.lower <= 2 * 0.05
    assert b.method == "grid_search"


def test_bounds_unit_square_square():
    b = continuous_cover_bounds(UNIT_SQUARE, 1, "square", 0.05)
    assert b.lower <= 1.0 + 1e-9
    assert b.upper >= 1.0 - 0.05
    assert b.upper - b.lower <= 2 * 0.05


def test_bounds_2x1_rect_two_squares():
    # resolution chosen so the exact optimal centers (0.5, 0.5), (1.5, 0.5)
    # land on the placement grid; the bracket then pins side 1.0
    rect = polygon_validate([(0, 0), (2, 0), (2, 1), (0, 1)])
    b = continuous_cover_bounds(rect, 2, "square", 0.05)
    assert b.lower <= 1.0 + 1e-9
    assert b.upper >= 1.0 - 1e-9
    assert b.upper - b.lower <= 2 * 0.05


def test_bracket_validity():
    b = continuous_cover_bounds(UNIT_SQUARE, 1, "circle", 0.08)
    from polycover.sampling import sample_region

    pts = tuple(sample_region(UNIT_SQUARE, 0.04).points)
    assert grid_cover_feasible(pts, 1, "l2", b.upper, 0.08) is not None
    assert grid_cover_feasible(pts, 1, "l2", b.lower, 0.08) is None


def test_bounds_guardrails():
    big = polygon_validate([(0, 0), (10, 0), (10, 10), (0, 10)])
    with pytest.raises(TooLarge):
        continuous_cover_bounds(big, 1, "circle", 0.1)  # 100 steps per axis
    with pytest.raises(TooLarge):
        continuous_cover_bounds(UNIT_SQUARE, 4, "circle", 0.1)


def test_grid_cover_feasible_basics():
    pts = [Point(0, 0), Point(1, 0)]
    got = grid_cover_feasible(pts, 1, "l2", 0.6, 0.1)
    assert got is not None and len(got) == 1
    assert grid_cover_feasible(pts, 1, "l2", 0.4, 0.1) is None
    with pytest.raises(EmptyInput):
        grid_cover_feasible([], 1, "l2", 1.0, 0.1)
    with pytest.raises(ZeroK):
        grid_cover_feasible(pts, 0, "l2", 1.0, 0.1)


def test_grid_cover_feasible_l1_diamonds():
    # a 45-degree square of side s is the L1 ball of radius s*sqrt(2)/2;
    # two points at L1 distance 1 need a ball of L1 radius at least 0.5
    pts = [Point(0, 0), Point(0.5, 0.5)]
    assert grid_cover_feasible(pts, 1, "l1", 0.55, 0.05) is not None
    assert grid_cover_feasible(pts, 1, "l1", 0.45, 0.05) is None
