"""Skeleton geometry for the junction/link reduction structures.

A skeleton is a set of unit spine segments decorated with perpendicular bars:
links are odd-length chains of ``2m + 1`` segments (m > 3) carrying ``2m - 1``
bars of length zeta centered on the interior segment midpoints, and three
links meet at a junction with pairwise 120-degree arms.  Two parameter sets
are built in: unit segments with bars of length sqrt(3) for circle coverage
studies, and sqrt(2)/2 segments with sqrt(2)/2 bars for square coverage
studies (where the first bar of every junction arm sits 3*sqrt(2)/4 from the
crossing point, which is exactly the generic 1.5-segment offset).

Skeletons are covered directly; thickening them into a thin simple polygon is
deliberately out of scope because the covering numbers converge as the
thickness goes to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    BadAngles,
    BadLength,
    BadM,
    BadRoute,
    EmptyInput,
    InvalidDensity,
    NotCubic,
)
from .geometry import TOL, Footprint, Point, Segment, dist_l2
from .sampling import SampleSet, _Merger, sample_segment

CIRCLE_SEGMENT_LEN = 1.0
CIRCLE_BAR_LEN = math.sqrt(3.0)
SQUARE_SEGMENT_LEN = math.sqrt(2.0) / 2.0
SQUARE_BAR_LEN = math.sqrt(2.0) / 2.0


def default_params(variant: str) -> tuple[float, float]:
    """(segment_len, zeta) for a gadget variant."""
    if variant == "circle":
        return CIRCLE_SEGMENT_LEN, CIRCLE_BAR_LEN
    if variant == "square":
        return SQUARE_SEGMENT_LEN, SQUARE_BAR_LEN
    raise BadRoute(f"unknown gadget variant {variant!r}")


@dataclass(frozen=True)
class EdgeLinkSpec:
    """One straight link: an odd chain of 2m+1 segments between u and w."""

    u: Point
    w: Point
    m: int
    zeta: float
    segment_len: float

    @property
    def span(self) -> float:
        return (2 * self.m + 1) * self.segment_len


@dataclass(frozen=True)
class GadgetParams:
    zeta: float
    segment_len: float
    junction_bar_offset: float
    variant: str


@dataclass(frozen=True)
class Junction:
    center: Point
    directions: tuple[tuple[float, float], ...]  # three outgoing unit vectors


@dataclass(frozen=True)
class GadgetSkeleton:
    spine_segments: tuple[Segment, ...]
    bars: tuple[Segment, ...]
    bar_hosts: tuple[int, ...]  # index into spine_segments for each bar
    junctions: tuple[Junction, ...]
    params: GadgetParams

    def merged_with(self, other: "GadgetSkeleton") -> "GadgetSkeleton":
        offset = len(self.spine_segments)
        return GadgetSkeleton(
            self.spine_segments + other.spine_segments,
            self.bars + other.bars,
            self.bar_hosts + tuple(i + offset for i in other.bar_hosts),
            self.junctions + other.junctions,
            self.params,
        )


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m <= 3:
        raise BadM(f"link half-length m must be an integer > 3, got {m!r}")


def _build_chain(
    route: Sequence[Point], m: int, zeta: float, segment_len: float, variant: str
) -> GadgetSkeleton:
    """Lay 2m+1 unit segments along a polyline whose legs are whole segments."""
    _check_m(m)
    legs = list(zip(route[:-1], route[1:]))
    counts = []
    for a, b in legs:
        length = dist_l2(a, b)
        n = round(length / segment_len)
        if n < 1 or abs(length - n * segment_len) > TOL:
            raise BadRoute(
                f"leg {a}->{b} has length {length:g}, not a whole multiple of {segment_len:g}"
            )
        counts.append(n)
    total = sum(counts)
    if total != 2 * m + 1:
        raise BadRoute(f"route has {total} segments, expected 2m+1 = {2 * m + 1}")

    spines: list[Segment] = []
    bars: list[Segment] = []
    hosts: list[int] = []
    idx = 0
    for (a, b), n in zip(legs, counts):
        dx, dy = (b.x - a.x) / n, (b.y - a.y) / n
        ux, uy = dx / segment_len, dy / segment_len
        px, py = -uy, ux  # unit perpendicular
        for i in range(n):
            s = Segment(
                Point(a.x + i * dx, a.y + i * dy), Point(a.x + (i + 1) * dx, a.y + (i + 1) * dy)
            )
            spines.append(s)
            if 1 <= idx <= 2 * m - 1:
                mx, my = (s.a.x + s.b.x) / 2.0, (s.a.y + s.b.y) / 2.0
                half = zeta / 2.0
                bars.append(
                    Segment(
                        Point(mx - half * px, my - half * py),
                        Point(mx + half * px, my + half * py),
                    )
                )
                hosts.append(len(spines) - 1)
            idx += 1
    params = GadgetParams(zeta, segment_len, 1.5 * segment_len, variant)
    return GadgetSkeleton(tuple(spines), tuple(bars), tuple(hosts), (), params)


def build_edge_link(spec: EdgeLinkSpec, variant: str = "circle") -> GadgetSkeleton:
    """Straight link between u and w; their distance must equal the span."""
    _check_m(spec.m)
    actual = dist_l2(spec.u, spec.w)
    if abs(actual - spec.span) > TOL:
        raise BadLength(f"u-w distance {actual:g} != (2m+1)*segment_len = {spec.span:g}")
    return _build_chain([spec.u, spec.w], spec.m, spec.zeta, spec.segment_len, variant)


def _unit_to(a: Point, b: Point) -> tuple[float, float]:
    d = dist_l2(a, b)
    return ((b.x - a.x) / d, (b.y - a.y) / d)


def _check_120(directions: Sequence[tuple[float, float]]) -> None:
    if len(directions) != 3:
        raise BadAngles(f"a junction needs exactly 3 arms, got {len(directions)}")
    for i in range(3):
        for j in range(i + 1, 3):
            dot = directions[i][0] * directions[j][0] + directions[i][1] * directions[j][1]
            if abs(dot + 0.5) > TOL:
                raise BadAngles(
                    f"arms {i} and {j} have direction dot product {dot:.12f}, expected -0.5"
                )


def build_junction(
    center: Point, arm_specs: Sequence[EdgeLinkSpec], variant: str
) -> GadgetSkeleton:
    """Three links meeting at a 120-degree fan around the given center.

    Each spec's u endpoint must be the center.  The first bar on every arm
    lands 1.5 segment lengths out, which for the square parameter set is the
    stated 3*sqrt(2)/4 junction offset; the offset is recorded on the
    skeleton params either way.
    """
    for spec in arm_specs:
        if dist_l2(spec.u, center) > TOL:
            raise BadAngles(f"arm does not start at the junction center: {spec.u} != {center}")
    directions = [_unit_to(spec.u, spec.w) for spec in arm_specs]
    _check_120(directions)
    skeleton: GadgetSkeleton | None = None
    for spec in arm_specs:
        link = build_edge_link(spec, variant)
        skeleton = link if skeleton is None else skeleton.merged_with(link)
    assert skeleton is not None
    junction = Junction(center, tuple(directions))
    return GadgetSkeleton(
        skeleton.spine_segments,
        skeleton.bars,
        skeleton.bar_hosts,
        (junction,),
        skeleton.params,
    )


# ---------------------------------------------------------------------------
# whole-structure assembly from an embedded cubic layout


@dataclass(frozen=True)
class LayoutLink:
    u: Point
    w: Point
    m: int
    via: tuple[Point, ...] = ()

    def route(self) -> tuple[Point, ...]:
        return (self.u,) + self.via + (self.w,)


@dataclass(frozen=True)
class LayoutJunction:
    center: Point
    arms: tuple[int, int, int]  # indices into the layout's link list


@dataclass(frozen=True)
class GadgetLayout:
    segment_len: float
    zeta: float
    variant: str
    junctions: tuple[LayoutJunction, ...]
    links: tuple[LayoutLink, ...]


def assemble_structure(layout: GadgetLayout) -> GadgetSkeleton:
    """Build the full skeleton for an embedded cubic graph layout.

    Every junction must have exactly three incident links whose endpoints
    resolve to junction centers, every route must decompose into an odd
    2m+1 chain with m > 3, and the three arm directions at each junction
    must form the 120-degree fan.
    """
    degree = [0] * len(layout.junctions)
    endpoint_owner: dict[int, list[int]] = {i: [] for i in range(len(layout.links))}
    for j_idx, junction in enumerate(layout.junctions):
        if len(junction.arms) != 3 or len(set(junction.arms)) != 3:
            raise NotCubic(f"junction {j_idx} must reference exactly 3 distinct links")
        for arm in junction.arms:
            if not (0 <= arm < len(layout.links)):
                raise NotCubic(f"junction {j_idx} references unknown link {arm}")
            link = layout.links[arm]
            if dist_l2(link.u, junction.center) <= TOL or dist_l2(link.w, junction.center) <= TOL:
                degree[j_idx] += 1
                endpoint_owner[arm].append(j_idx)
            else:
                raise NotCubic(f"link {arm} does not touch junction {j_idx}")
    if any(d != 3 for d in degree):
        raise NotCubic(f"junction degrees {degree} are not all 3")
    if any(len(owners) != 2 for owners in endpoint_owner.values()):
        raise NotCubic("every link must connect exactly two junctions")

    skeleton: GadgetSkeleton | None = None
    for link in layout.links:
        chain = _build_chain(link.route(), link.m, layout.zeta, layout.segment_len, layout.variant)
        skeleton = chain if skeleton is None else skeleton.merged_with(chain)
    assert skeleton is not None

    junctions = []
    for junction in layout.junctions:
        dirs = []
        for arm in junction.arms:
            link = layout.links[arm]
            route = link.route()
            if dist_l2(route[0], junction.center) <= TOL:
                dirs.append(_unit_to(route[0], route[1]))
            else:
                dirs.append(_unit_to(route[-1], route[-2]))
        _check_120(dirs)
        junctions.append(Junction(junction.center, tuple(dirs)))
    return GadgetSkeleton(
        skeleton.spine_segments,
        skeleton.bars,
        skeleton.bar_hosts,
        tuple(junctions),
        skeleton.params,
    )


def skeleton_samples(skeleton: GadgetSkeleton, eps: float) -> SampleSet:
    """Eps-dense samples along every spine segment and bar."""
    if not (eps > 0.0 and math.isfinite(eps)):
        raise InvalidDensity(f"sampling density must be positive, got {eps}")
    if not skeleton.spine_segments and not skeleton.bars:
        raise EmptyInput("empty skeleton")
    merger = _Merger()
    for seg in skeleton.spine_segments:
        sample_segment(seg.a, seg.b, eps, merger)
    for bar in skeleton.bars:
        sample_segment(bar.a, bar.b, eps, merger)
    return SampleSet(tuple(merger.points), eps, "boundary", "skeleton")


# ---------------------------------------------------------------------------
# rotated squares (used only by pattern fixtures and their checks)


@dataclass(frozen=True)
class RotatedSquare:
    """Square of the given side, rotated by angle radians about its center.

    Containment is tested by inverse-rotating the query point into the
    square's axis-aligned frame; solver outputs never rotate, so this stays
    local to gadget pattern checks.
    """

    center: Point
    side: float
    angle: float

    def contains(self, p: Point, tol: float = TOL) -> bool:
        c, s = math.cos(-self.angle), math.sin(-self.angle)
        dx, dy = p.x - self.center.x, p.y - self.center.y
        rx, ry = c * dx - s * dy, s * dx + c * dy
        return max(abs(rx), abs(ry)) <= self.side / 2.0 + tol

    def corners(self) -> tuple[Point, ...]:
        c, s = math.cos(self.angle), math.sin(self.angle)
        h = self.side / 2.0
        out = []
        for dx, dy in ((h, h), (-h, h), (-h, -h), (h, -h)):
            out.append(Point(self.center.x + c * dx - s * dy, self.center.y + s * dx + c * dy))
        return tuple(out)


# ---------------------------------------------------------------------------
# shipped fixtures


def circle_link_spec(m: int = 4) -> EdgeLinkSpec:
    """Straight unit-segment link with sqrt(3) bars along the x axis."""
    return EdgeLinkSpec(
        Point(0.0, 0.0), Point((2 * m + 1) * CIRCLE_SEGMENT_LEN, 0.0), m,
        CIRCLE_BAR_LEN, CIRCLE_SEGMENT_LEN,
    )


def square_link_spec(m: int = 4) -> EdgeLinkSpec:
    """Straight sqrt(2)/2-segment link with sqrt(2)/2 bars along the x axis."""
    return EdgeLinkSpec(
        Point(0.0, 0.0), Point((2 * m + 1) * SQUARE_SEGMENT_LEN, 0.0), m,
        SQUARE_BAR_LEN, SQUARE_SEGMENT_LEN,
    )


def circle_link_pattern(m: int = 4) -> tuple[Footprint, ...]:
    """Hand cover of the circle link: unit circles at the odd spine offsets.

    The circle at offset 2i+1 covers spine [2i, 2i+2] exactly and touches the
    tips of the bars at offsets 2i+0.5 and 2i+1.5; five circles cover the
    whole m=4 link, and no four circles can (four can cover at most 8 of the
    9 spine units).
    """
    return tuple(
        Footprint("circle", Point(float(x), 0.0), 1.0) for x in range(1, 2 * m + 2, 2)
    )


def square_link_pattern(m: int = 4) -> tuple[RotatedSquare, ...]:
    """Hand cover of the square link: unit 45-degree squares at odd offsets."""
    return tuple(
        RotatedSquare(Point(x * SQUARE_SEGMENT_LEN, 0.0), 1.0, math.pi / 4.0)
        for x in range(1, 2 * m + 2, 2)
    )


def junction_fixture(variant: str = "circle", m: int = 4) -> GadgetSkeleton:
    """One junction at the origin with three straight arms at 0/120/240 deg."""
    segment_len, zeta = default_params(variant)
    span = (2 * m + 1) * segment_len
    specs = []
    for deg in (0.0, 120.0, 240.0):
        a = math.radians(deg)
        w = Point(span * math.cos(a), span * math.sin(a))
        specs.append(EdgeLinkSpec(Point(0.0, 0.0), w, m, zeta, segment_len))
    return build_junction(Point(0.0, 0.0), specs, variant)


def k4_layout(variant: str = "circle", m_spoke: int = 4) -> GadgetLayout:
    """Hand-built embedded K4: a center junction, three spokes, three bent
    outer edges whose legs are whole segments and whose junction fans are
    exact 120-degree triples."""
    segment_len, zeta = default_params(variant)
    span = (2 * m_spoke + 1) * segment_len

    def u(deg: float) -> tuple[float, float]:
        a = math.radians(deg)
        return (math.cos(a), math.sin(a))

    def at(base: Point, deg: float, dist: float) -> Point:
        dx, dy = u(deg)
        return Point(base.x + dist * dx, base.y + dist * dy)

    origin = Point(0.0, 0.0)
    outer_angles = (90.0, 210.0, 330.0)
    corners = [at(origin, a, span) for a in outer_angles]

    links = [LayoutLink(origin, corner, m_spoke) for corner in corners]

    # outer edge template (corner i -> corner i+1): whole-segment legs at
    # headings spoke+60, spoke+180, spoke+240 relative to the start corner's
    # outward spoke angle; closes exactly and keeps every junction fan 120.
    spoke_segments = 2 * m_spoke + 1
    leg_counts = (spoke_segments + 1, 2 * spoke_segments, 1)
    m_outer = (sum(leg_counts) - 1) // 2
    for i in range(3):
        start = corners[i]
        end = corners[(i + 1) % 3]
        base = outer_angles[i]  # outward spoke heading at the start corner
        headings = (base + 60.0, base + 180.0, base + 240.0)
        p1 = at(start, headings[0], leg_counts[0] * segment_len)
        p2 = at(p1, headings[1], leg_counts[1] * segment_len)
        closing = at(p2, headings[2], leg_counts[2] * segment_len)
        if dist_l2(closing, end) > 1e-7:
            raise BadRoute(f"internal: outer route misses its corner by {dist_l2(closing, end):g}")
        links.append(LayoutLink(start, end, m_outer, via=(p1, p2)))

    junctions = (
        LayoutJunction(origin, (0, 1, 2)),
        LayoutJunction(corners[0], (0, 3, 5)),
        LayoutJunction(corners[1], (1, 4, 3)),
        LayoutJunction(corners[2], (2, 5, 4)),
    )
    return GadgetLayout(segment_len, zeta, variant, junctions, tuple(links))
