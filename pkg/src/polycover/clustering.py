"""Deterministic farthest-first (greedy k-center) traversal.

The first center is always index 0 and every argmax tie breaks to the lowest
index, so identical inputs give identical outputs.  The greedy radius is at
most twice the optimal discrete k-center radius over the same points for any
start, which the oracle module certifies empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyInput, IndexMismatch, ZeroK
from .geometry import Point, points_to_array


def pairwise_distances(coords: np.ndarray, center: np.ndarray, metric: str) -> np.ndarray:
    """Distances from every row of coords to one center point."""
    dx = coords[:, 0] - center[0]
    dy = coords[:, 1] - center[1]
    if metric == "l2":
        return np.sqrt(dx * dx + dy * dy)
    if metric == "linf":
        return np.maximum(np.abs(dx), np.abs(dy))
    if metric == "l1":
        return np.abs(dx) + np.abs(dy)
    raise ValueError(f"unknown metric {metric!r}")


@dataclass(frozen=True)
class KCenterResult:
    center_indices: tuple[int, ...]
    radius: float
    metric: str

    @property
    def k(self) -> int:
        return len(self.center_indices)


def farthest_first(points: Sequence[Point], k: int, metric: str = "l2") -> KCenterResult:
    """Greedy k-center: repeatedly add the point farthest from chosen centers.

    Runs in O(k n) distance evaluations and O(n) memory.  If k >= n every
    point becomes a center and the radius is exactly 0.
    """
    if len(points) == 0:
        raise EmptyInput("farthest_first needs at least one point")
    if k < 1:
        raise ZeroK(f"k must be >= 1, got {k}")
    coords = points_to_array(points)
    n = len(points)
    if k >= n:
        return KCenterResult(tuple(range(n)), 0.0, metric)

    centers = [0]
    min_dist = pairwise_distances(coords, coords[0], metric)
    for _ in range(k - 1):
        nxt = int(np.argmax(min_dist))  # first max wins ties
        centers.append(nxt)
        np.minimum(min_dist, pairwise_distances(coords, coords[nxt], metric), out=min_dist)
    return KCenterResult(tuple(centers), float(min_dist.max()), metric)


def assign_clusters(points: Sequence[Point], result: KCenterResult) -> list[int]:
    """Map each point to its nearest center (position in center_indices).

    Ties break to the lowest center position, matching the traversal order.
    """
    n = len(points)
    if any(i >= n or i < 0 for i in result.center_indices):
        raise IndexMismatch("center indices out of range for this point set")
    coords = points_to_array(points)
    dists = np.column_stack(
        [pairwise_distances(coords, coords[i], result.metric) for i in result.center_indices]
    )
    return [int(i) for i in np.argmin(dists, axis=1)]
