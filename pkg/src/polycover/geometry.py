"""Planar primitives and the two metrics everything else runs on.

All predicates are boundary-inclusive and compare against a fixed tolerance
of ``TOL = 1e-9`` world units.  Every value here is immutable after
construction, so instances are safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateArea, KindMismatch, NonFinite, SelfIntersecting, TooFewVertices

TOL = 1e-9

# area below this is treated as zero when validating polygons
AREA_FLOOR = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if not (self.a.is_finite() and self.b.is_finite()):
            raise NonFinite(f"segment endpoints must be finite: {self.a}, {self.b}")
        if dist_l2(self.a, self.b) <= TOL:
            raise DegenerateArea(f"segment endpoints coincide: {self.a}")

    @property
    def length(self) -> float:
        return dist_l2(self.a, self.b)

    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)

    def direction(self) -> tuple[float, float]:
        """Unit direction a -> b."""
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        n = math.sqrt(dx * dx + dy * dy)
        return (dx / n, dy / n)


def dist_l2(p: Point, q: Point) -> float:
    """Euclidean distance.

    Plain quadrature rather than ``math.hypot`` so scalar results are
    bit-identical to the vectorized numpy kernels used elsewhere.
    """
    dx = p.x - q.x
    dy = p.y - q.y
    return math.sqrt(dx * dx + dy * dy)


def dist_linf(p: Point, q: Point) -> float:
    """Chebyshev distance; balls are axis-aligned squares."""
    return max(abs(p.x - q.x), abs(p.y - q.y))


METRICS = {"l2": dist_l2, "linf": dist_linf}


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    """Euclidean distance from p to the closed segment ab."""
    abx, aby = b.x - a.x, b.y - a.y
    apx, apy = p.x - a.x, p.y - a.y
    denom = abx * abx + aby * aby
    if denom <= TOL * TOL:
        return dist_l2(p, a)
    t = (apx * abx + apy * aby) / denom
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    cx, cy = a.x + t * abx, a.y + t * aby
    dx, dy = p.x - cx, p.y - cy
    return math.sqrt(dx * dx + dy * dy)


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True if the closed segments intersect anywhere except a single shared endpoint."""
    shared = [u for u in (p1, p2) for v in (q1, q2) if dist_l2(u, v) <= TOL]
    d1 = _cross(p1, p2, q1)
    d2 = _cross(p1, p2, q2)
    d3 = _cross(q1, q2, p1)
    d4 = _cross(q1, q2, p2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and min(map(abs, (d1, d2, d3, d4))) > 0:
        return True
    # collinear / touching cases: measure actual point-to-segment distances
    touches = 0
    for u in (q1, q2):
        if point_segment_distance(u, p1, p2) <= TOL:
            touches += 1
    for u in (p1, p2):
        if point_segment_distance(u, q1, q2) <= TOL:
            touches += 1
    if shared:
        # adjacent edges: any contact beyond the one shared endpoint is a fault
        return touches > 2 * len(shared)
    return touches > 0


@dataclass(frozen=True)
class SimplePolygon:
    """Closed polygonal region, vertices CCW, no holes or self-intersections.

    ``flipped`` records that the original input was clockwise; serialization
    echoes the input orientation so files round-trip exactly.
    """

    vertices: tuple[Point, ...]
    flipped: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Segment]:
        v = self.vertices
        return [Segment(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def signed_area(self) -> float:
        v = self.vertices
        acc = 0.0
        for i in range(len(v)):
            j = (i + 1) % len(v)
            acc += v[i].x * v[j].y - v[j].x * v[i].y
        return acc / 2.0

    def area(self) -> float:
        return abs(self.signed_area())

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def diameter(self) -> float:
        v = self.vertices
        return max(dist_l2(v[i], v[j]) for i in range(len(v)) for j in range(i + 1, len(v)))

    def perimeter(self) -> float:
        return sum(e.length for e in self.edges())

    def contains(self, p: Point) -> bool:
        return point_in_polygon(p, self)

    def input_vertices(self) -> tuple[Point, ...]:
        """Vertices in the orientation the polygon was built from."""
        if not self.flipped:
            return self.vertices
        v = self.vertices
        return (v[0],) + tuple(reversed(v[1:]))


def polygon_validate(vertices: Iterable[Point | Sequence[float]]) -> SimplePolygon:
    """Canonicalize a raw vertex list into a CCW SimplePolygon.

    Clockwise input is accepted and reversed (keeping the starting vertex);
    anything self-intersecting, degenerate, or non-finite is rejected.
    """
    pts: list[Point] = []
    for i, v in enumerate(vertices):
        p = v if isinstance(v, Point) else Point(float(v[0]), float(v[1]))
        if not p.is_finite():
            raise NonFinite(f"vertex {i} is not finite: {p}")
        pts.append(p)
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if dist_l2(pts[i], pts[j]) <= TOL:
                raise SelfIntersecting(f"vertices {i} and {j} coincide")
    for i in range(n):
        p1, p2 = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            q1, q2 = pts[j], pts[(j + 1) % n]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if not adjacent and _segments_cross(p1, p2, q1, q2):
                raise SelfIntersecting(f"edges {i} and {j} intersect")
            if adjacent:
                # shared endpoint allowed; collinear fold-back is not
                far_p = p1 if j == i + 1 else p2
                far_q = q2 if j == i + 1 else q1
                if point_segment_distance(far_q, p1, p2) <= TOL or point_segment_distance(
                    far_p, q1, q2
                ) <= TOL:
                    raise SelfIntersecting(f"edges {i} and {j} fold back on each other")
    poly = SimplePolygon(tuple(pts))
    area = poly.signed_area()
    if abs(area) < AREA_FLOOR:
        raise DegenerateArea(f"polygon area {abs(area):g} below {AREA_FLOOR:g}")
    if area < 0.0:
        rev = (pts[0],) + tuple(reversed(pts[1:]))
        return SimplePolygon(rev, flipped=True)
    return poly


def point_in_polygon(p: Point, poly: SimplePolygon, tol: float = TOL) -> bool:
    """Closed-region membership test: the boundary counts as inside."""
    v = poly.vertices
    n = len(v)
    for i in range(n):
        if point_segment_distance(p, v[i], v[(i + 1) % n]) <= tol:
            return True
    inside = False
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
    return inside


def points_in_polygon(xs: np.ndarray, ys: np.ndarray, poly: SimplePolygon, tol: float = TOL) -> np.ndarray:
    """Vectorized ``point_in_polygon`` over coordinate arrays."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    v = poly.vertices
    ax = np.array([p.x for p in v])
    ay = np.array([p.y for p in v])
    bx = np.roll(ax, -1)
    by = np.roll(ay, -1)

    px = xs[:, None]
    py = ys[:, None]
    ex = (bx - ax)[None, :]
    ey = (by - ay)[None, :]
    fx = px - ax[None, :]
    fy = py - ay[None, :]
    denom = ex * ex + ey * ey
    t = np.clip((fx * ex + fy * ey) / denom, 0.0, 1.0)
    dx = fx - t * ex
    dy = fy - t * ey
    on_edge = ((dx * dx + dy * dy) <= tol * tol).any(axis=1)

    cond = (ay[None, :] > py) != (by[None, :] > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        x_cross = ax[None, :] + (py - ay[None, :]) * ex / ey
    hits = cond & (px < x_cross)
    inside = (hits.sum(axis=1) % 2).astype(bool)
    return inside | on_edge


@dataclass(frozen=True)
class Footprint:
    """One sensor/photo footprint: a circle or an axis-aligned square.

    ``length`` is the radius for circles and the full side length for squares.
    """

    kind: str  # "circle" | "axis_square"
    center: Point
    length: float

    def __post_init__(self) -> None:
        if self.kind not in ("circle", "axis_square"):
            raise KindMismatch(f"unknown footprint kind {self.kind!r}")
        if not (self.length > 0.0 and math.isfinite(self.length)):
            raise DegenerateArea(f"footprint length must be positive, got {self.length}")

    @property
    def reach(self) -> float:
        """Covering radius in the footprint's own metric (L2 or Linf)."""
        return self.length if self.kind == "circle" else self.length / 2.0


def footprint_contains(f: Footprint, p: Point, tol: float = TOL) -> bool:
    """Boundary-inclusive containment in the footprint's own metric."""
    if f.kind == "circle":
        return dist_l2(f.center, p) <= f.length + tol
    return dist_linf(f.center, p) <= f.length / 2.0 + tol


def points_to_array(points: Sequence[Point]) -> np.ndarray:
    """(n, 2) float array view of a point sequence."""
    out = np.empty((len(points), 2), dtype=float)
    for i, p in enumerate(points):
        out[i, 0] = p.x
        out[i, 1] = p.y
    return out
