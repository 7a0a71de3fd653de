"""Dense point discretizations of polygon boundaries and regions.

Boundary sampling subdivides each edge into ``ceil(length/eps)`` equal
intervals, so consecutive samples are at most ``eps`` apart.  Region sampling
adds an interior grid at spacing ``eps/sqrt(2)`` anchored at the bbox min
corner: any region point shares a grid cell with an inside grid point or sits
in a cell cut by the boundary, so the union is an eps-net of the closed
region.  Duplicate points are merged with tolerance 1e-9 and ordering is
deterministic, which downstream clustering relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidDensity
from .geometry import TOL, Point, SimplePolygon, points_in_polygon, points_to_array


@dataclass(frozen=True)
class SampleSet:
    points: tuple[Point, ...]
    density: float
    mode: str  # "boundary" | "region"
    source: object = None

    def __len__(self) -> int:
        return len(self.points)

    def coords(self) -> np.ndarray:
        return points_to_array(self.points)


def _dedupe_key(x: float, y: float) -> tuple[int, int]:
    return (round(x / TOL), round(y / TOL))


class _Merger:
    """Order-preserving point collector with 1e-9 duplicate merging."""

    def __init__(self) -> None:
        self.points: list[Point] = []
        self._seen: set[tuple[int, int]] = set()

    def add(self, x: float, y: float) -> None:
        key = _dedupe_key(x, y)
        if key not in self._seen:
            self._seen.add(key)
            self.points.append(Point(x, y))

    def extend_many(self, xs: np.ndarray, ys: np.ndarray) -> None:
        for x, y in zip(xs.tolist(), ys.tolist()):
            self.add(x, y)


def _check_density(eps: float) -> None:
    if not (eps > 0.0 and math.isfinite(eps)):
        raise InvalidDensity(f"sampling density must be positive, got {eps}")


def sample_segment(a: Point, b: Point, eps: float, merger: _Merger) -> None:
    """Endpoints plus ceil(len/eps)-interval subdivision of one segment."""
    dx, dy = b.x - a.x, b.y - a.y
    length = math.sqrt(dx * dx + dy * dy)
    n = max(1, math.ceil(length / eps - 1e-12))
    merger.add(a.x, a.y)
    for i in range(1, n):
        t = i / n
        merger.add(a.x + t * dx, a.y + t * dy)
    merger.add(b.x, b.y)  # exact endpoint, so shared vertices merge exactly


def sample_boundary(polygon: SimplePolygon, eps: float) -> SampleSet:
    """Eps-dense samples of the boundary curve; every vertex is included."""
    _check_density(eps)
    merger = _Merger()
    v = polygon.vertices
    for i in range(len(v)):
        sample_segment(v[i], v[(i + 1) % len(v)], eps, merger)
    return SampleSet(tuple(merger.points), eps, "boundary", polygon)


def sample_region(polygon: SimplePolygon, eps: float) -> SampleSet:
    """Boundary samples plus an interior grid at spacing eps/sqrt(2)."""
    _check_density(eps)
    merger = _Merger()
    v = polygon.vertices
    for i in range(len(v)):
        sample_segment(v[i], v[(i + 1) % len(v)], eps, merger)

    minx, miny, maxx, maxy = polygon.bbox()
    h = eps / math.sqrt(2.0)
    nx = int(math.floor((maxx - minx) / h + 1e-12)) + 1
    ny = int(math.floor((maxy - miny) / h + 1e-12)) + 1
    gx, gy = np.meshgrid(minx + h * np.arange(nx), miny + h * np.arange(ny))
    gx = gx.ravel()
    gy = gy.ravel()
    keep = points_in_polygon(gx, gy, polygon)
    merger.extend_many(gx[keep], gy[keep])
    return SampleSet(tuple(merger.points), eps, "region", polygon)


def sample_polygon(polygon: SimplePolygon, eps: float, mode: str) -> SampleSet:
    if mode == "boundary":
        return sample_boundary(polygon, eps)
    if mode == "region":
        return sample_region(polygon, eps)
    raise InvalidDensity(f"unknown sampling mode {mode!r}")


def permuted(samples: SampleSet, seed: int) -> SampleSet:
    """Deterministically shuffled copy; exposes clustering tie sensitivity."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(samples.points))
    pts = tuple(samples.points[i] for i in order)
    return SampleSet(pts, samples.density, samples.mode, samples.source)
