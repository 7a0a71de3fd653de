"""Shared instance generators for the test suite."""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull

from polycover import Point, SimplePolygon, polygon_validate


def random_convex(rng: np.random.Generator, max_vertices: int = 12) -> SimplePolygon:
    """Convex hull of random points, rejection-sampled to a healthy area."""
    while True:
        n = int(rng.integers(5, max_vertices + 4))
        pts = rng.uniform(-1.0, 1.0, size=(n, 2))
        hull = ConvexHull(pts)
        verts = pts[hull.vertices]  # CCW in 2-D
        if len(verts) >= 3 and 3 <= len(verts) <= max_vertices and hull.volume > 0.3:
            return polygon_validate([Point(float(x), float(y)) for x, y in verts])


def random_star(rng: np.random.Generator, max_vertices: int = 12) -> SimplePolygon:
    """Star-shaped polygon around the origin: sorted angles, varied radii.

    Angle gaps are kept inside (0.05, 3.0) so every edge stays within one
    wedge seen from the origin and the chain is simple.
    """
    while True:
        n = int(rng.integers(5, max_vertices + 1))
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=n))
        gaps = np.diff(angles, append=angles[0] + 2.0 * math.pi)
        if gaps.min() < 0.05 or gaps.max() > 3.0:
            continue
        radii = rng.uniform(0.35, 1.0, size=n)
        pts = [
            Point(float(r * math.cos(a)), float(r * math.sin(a)))
            for r, a in zip(radii, angles)
        ]
        return polygon_validate(pts)


def random_points(rng: np.random.Generator, n: int) -> list[Point]:
    return [Point(float(x), float(y)) for x, y in rng.uniform(-5.0, 5.0, size=(n, 2))]
