import math

import pytest

from polycover import (
    EdgeLinkSpec,
    Point,
    Segment,
    assemble_structure,
    build_edge_link,
    build_junction,
    circle_link_pattern,
    circle_link_spec,
    footprint_contains,
    junction_fixture,
    k4_layout,
    skeleton_samples,
    square_link_pattern,
    square_link_spec,
)
from polycover.errors import BadAngles, BadLength, BadM, BadRoute, EmptyInput, InvalidDensity, NotCubic
from polycover.gadget import (
    CIRCLE_BAR_LEN,
    CIRCLE_SEGMENT_LEN,
    SQUARE_BAR_LEN,
    SQUARE_SEGMENT_LEN,
    GadgetLayout,
    GadgetParams,
    GadgetSkeleton,
    LayoutJunction,
    LayoutLink,
    RotatedSquare,
)
from polycover.geometry import dist_l2

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

PARAM_SETS = [
    ("circle", CIRCLE_SEGMENT_LEN, CIRCLE_BAR_LEN),
    ("square", SQUARE_SEGMENT_LEN, SQUARE_BAR_LEN),
]


def _structural_checks(skeleton, m, zeta, segment_len):
    assert len(skeleton.spine_segments) == 2 * m + 1
    assert len(skeleton.bars) == 2 * m - 1
    for bar, host_idx in zip(skeleton.bars, skeleton.bar_hosts):
        host = skeleton.spine_segments[host_idx]
        bx, by = bar.b.x - bar.a.x, bar.b.y - bar.a.y
        hx, hy = host.b.x - host.a.x, host.b.y - host.a.y
        assert abs(bx * hx + by * hy) <= 1e-9  # perpendicular
        assert dist_l2(bar.midpoint(), host.midpoint()) <= 1e-9  # mutual bisection
        assert bar.length == pytest.approx(zeta, abs=1e-9)
        assert host.length == pytest.approx(segment_len, abs=1e-9)


@pytest.mark.parametrize("variant,segment_len,zeta", PARAM_SETS)
@pytest.mark.parametrize("m", [4, 5, 6])
def test_link_structure(variant, segment_len, zeta, m):
    spec = EdgeLinkSpec(Point(0, 0), Point((2 * m + 1) * segment_len, 0), m, zeta, segment_len)
    skeleton = build_edge_link(spec, variant)
    _structural_checks(skeleton, m, zeta, segment_len)


def test_circle_link_bars_at_half_offsets():
    skeleton = build_edge_link(circle_link_spec(4))
    mids = [b.midpoint() for b in skeleton.bars]
    assert [m.x for m in mids] == pytest.approx([1.5, 2.5, 3.5, 4.5, 5.5, 6.5, 7.5])
    for bar in skeleton.bars:
        assert sorted((bar.a.y, bar.b.y)) == pytest.approx([-SQRT3 / 2, SQRT3 / 2])


def test_square_link_spacing():
    skeleton = build_edge_link(square_link_spec(4), "square")
    mids = [b.midpoint() for b in skeleton.bars]
    gaps = [dist_l2(a, b) for a, b in zip(mids, mids[1:])]
    assert gaps == pytest.approx([SQRT2 / 2] * 6, abs=1e-9)


def test_bad_length():
    with pytest.raises(BadLength):
        build_edge_link(EdgeLinkSpec(Point(0, 0), Point(8, 0), 4, SQRT3, 1.0))


def test_bad_m():
    with pytest.raises(BadM):
        build_edge_link(EdgeLinkSpec(Point(0, 0), Point(7, 0), 3, SQRT3, 1.0))


@pytest.mark.parametrize("variant", ["circle", "square"])
def test_junction_structure(variant):
    skeleton = junction_fixture(variant, m=4)
    assert len(skeleton.junctions) == 1
    dirs = skeleton.junctions[0].directions
    for i in range(3):
        for j in range(i + 1, 3):
            dot = dirs[i][0] * dirs[j][0] + dirs[i][1] * dirs[j][1]
            assert dot == pytest.approx(-0.5, abs=1e-9)
    # first bar on each arm sits 1.5 segments out from the crossing
    center = skeleton.junctions[0].center
    offsets = sorted(dist_l2(center, b.midpoint()) for b in skeleton.bars)[:3]
    expected = 3 * SQRT2 / 4 if variant == "square" else 1.5
    assert offsets == pytest.approx([expected] * 3, abs=1e-9)
    assert skeleton.params.junction_bar_offset == pytest.approx(expected, abs=1e-9)


def test_junction_bad_angles():
    specs = [
        EdgeLinkSpec(Point(0, 0), Point(9, 0), 4, SQRT3, 1.0),
        EdgeLinkSpec(Point(0, 0), Point(0, 9), 4, SQRT3, 1.0),
        EdgeLinkSpec(Point(0, 0), Point(-9, 0), 4, SQRT3, 1.0),
    ]
    with pytest.raises(BadAngles):
        build_junction(Point(0, 0), specs, "circle")


@pytest.mark.parametrize("variant", ["circle", "square"])
def test_k4_assembly(variant):
    layout = k4_layout(variant)
    skeleton = assemble_structure(layout)
    assert len(skeleton.junctions) == 4
    seg = layout.segment_len
    spoke_segments = 9
    outer_segments = 29
    assert len(skeleton.spine_segments) == 3 * spoke_segments + 3 * outer_segments
    assert len(skeleton.bars) == 3 * 7 + 3 * 27
    # no duplicated segments
    keys = {
        (round(s.a.x, 9), round(s.a.y, 9), round(s.b.x, 9), round(s.b.y, 9))
        for s in skeleton.spine_segments
    }
    assert len(keys) == len(skeleton.spine_segments)
    for s in skeleton.spine_segments:
        assert s.length == pytest.approx(seg, abs=1e-9)
    for junction in skeleton.junctions:
        dirs = junction.directions
        for i in range(3):
            for j in range(i + 1, 3):
                dot = dirs[i][0] * dirs[j][0] + dirs[i][1] * dirs[j][1]
                assert dot == pytest.approx(-0.5, abs=1e-9)


def test_assemble_rejects_degree_two():
    layout = k4_layout("circle")
    bad = GadgetLayout(
        layout.segment_len,
        layout.zeta,
        layout.variant,
        (LayoutJunction(Point(0, 0), (0, 1, 2)),),  # corners never declared
        layout.links,
    )
    with pytest.raises(NotCubic):
        assemble_structure(bad)


def test_assemble_rejects_even_route():
    # 8 segments between junction centers: even, so no valid m exists
    links = (
        LayoutLink(Point(0, 0), Point(8, 0), 4),
        LayoutLink(Point(0, 0), Point(-4.5, 7.794228634059948), 4),
        LayoutLink(Point(0, 0), Point(-4.5, -7.794228634059948), 4),
    )
    junctions = (LayoutJunction(Point(0, 0), (0, 1, 2)),)
    layout = GadgetLayout(1.0, SQRT3, "circle", junctions, links)
    with pytest.raises((BadRoute, NotCubic)):
        assemble_structure(layout)


def test_skeleton_samples_single_segment():
    skeleton = GadgetSkeleton(
        (Segment(Point(0, 0), Point(1, 0)),), (), (), (), GadgetParams(1.0, 1.0, 1.5, "circle")
    )
    s = skeleton_samples(skeleton, 0.5)
    assert [p.as_tuple() for p in s.points] == [(0, 0), (0.5, 0), (1, 0)]


def test_skeleton_samples_counts_and_errors():
    skeleton = build_edge_link(circle_link_spec(4))
    s = skeleton_samples(skeleton, 0.25)
    # spine: 9 segments x 4 intervals sharing endpoints; bars: 7 x 7 intervals
    assert len(s) == (9 * 4 + 1) + 7 * (7 + 1)
    with pytest.raises(InvalidDensity):
        skeleton_samples(skeleton, 0.0)
    empty = GadgetSkeleton((), (), (), (), GadgetParams(1.0, 1.0, 1.5, "circle"))
    with pytest.raises(EmptyInput):
        skeleton_samples(empty, 0.5)


def test_circle_pattern_covers_link():
    skeleton = build_edge_link(circle_link_spec(4))
    pattern = circle_link_pattern(4)
    assert len(pattern) == 5
    samples = skeleton_samples(skeleton, 0.05)
    for p in samples.points:
        assert any(footprint_contains(f, p) for f in pattern)
    # each circle fully takes its assigned bars and spine stretch
    for i, f in enumerate(pattern):
        x = 2 * i + 1
        for p in samples.points:
            if abs(p.y) < 1e-12 and x - 1 <= p.x <= x + 1:
                assert footprint_contains(f, p)
            if abs(p.x - (x - 0.5)) < 1e-12 or abs(p.x - (x + 0.5)) < 1e-12:
                if 1.0 <= p.x <= 8.0:  # a bar position
                    assert footprint_contains(f, p)


def test_square_pattern_covers_link():
    skeleton = build_edge_link(square_link_spec(4), "square")
    pattern = square_link_pattern(4)
    assert len(pattern) == 5
    samples = skeleton_samples(skeleton, 0.05)
    for p in samples.points:
        assert any(sq.contains(p) for sq in pattern)


def test_rotated_square_contains():
    sq = RotatedSquare(Point(0, 0), 1.0, math.pi / 4)
    assert sq.contains(Point(SQRT2 / 2, 0))  # tip of the diamond
    assert not sq.contains(Point(SQRT2 / 2 + 0.01, 0))
    assert sq.contains(Point(0.35, 0.35))
    assert not sq.contains(Point(0.5, 0.5))
