"""Brute-force ground truth for desk-size instances.

Two oracles back the approximation claims:

* ``discrete_kcenter_exact`` enumerates every C(n, k) center subset, so the
  greedy traversal can be certified against the true discrete optimum.
* ``continuous_cover_bounds`` brackets the optimal footprint size for covering
  a polygon by binary search, deciding feasibility at each size by exhaustive
  placement of k footprints with centers on a resolution-spaced grid and
  coverage checked on a resolution/2-dense sample of the polygon.

Guardrails (n <= 25, k <= 3, bbox extent <= 40 grid steps per axis) are hard
errors: the blowup must be impossible to trigger accidentally from the CLI.
The exhaustive placement search is organized as pivot branching over packed
bitsets with a counting bound; it visits the same search space as the naive
subset enumeration, just without the hopeless branches.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .clustering import pairwise_distances
from .errors import EmptyInput, TooLarge, ZeroK
from .geometry import TOL, Point, SimplePolygon, points_to_array
from .sampling import sample_region

DISCRETE_MAX_POINTS = 25
MAX_K = 3
MAX_GRID_STEPS = 40

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


@dataclass(frozen=True)
class OracleBounds:
    lower: float
    upper: float
    method: str  # "discrete_kcenter" | "grid_search"
    resolution: float
    centers: tuple[Point, ...] = ()


def discrete_kcenter_exact(
    points: Sequence[Point], k: int, metric: str = "l2"
) -> tuple[float, tuple[int, ...]]:
    """Exact discrete k-center by exhaustive subset enumeration.

    Ties resolve to the lexicographically smallest index set.
    """
    n = len(points)
    if n == 0:
        raise EmptyInput("no points")
    if k < 1:
        raise ZeroK(f"k must be >= 1, got {k}")
    if n > DISCRETE_MAX_POINTS or k > MAX_K:
        raise TooLarge(f"guardrail: n <= {DISCRETE_MAX_POINTS} and k <= {MAX_K}")
    if k >= n:
        return 0.0, tuple(range(n))
    coords = points_to_array(points)
    dist = np.column_stack([pairwise_distances(coords, coords[i], metric) for i in range(n)])
    best_r = math.inf
    best: tuple[int, ...] = ()
    for combo in itertools.combinations(range(n), k):
        r = float(dist[:, combo].min(axis=1).max())
        if r < best_r:
            best_r = r
            best = combo
    return best_r, best


# ---------------------------------------------------------------------------
# grid placement feasibility


def _popcount(packed: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(packed).sum(axis=-1, dtype=np.int64)
    return _POP8[packed].sum(axis=-1)


def _cover_matrix(
    centers_xy: np.ndarray, samples_xy: np.ndarray, metric: str, reach: float
) -> tuple[np.ndarray, np.ndarray]:
    """Packed boolean matrix (centers x samples) and per-sample cover counts."""
    n_samples = len(samples_xy)
    rows = []
    col_counts = np.zeros(n_samples, dtype=np.int64)
    chunk = max(1, int(4_000_000 // max(1, n_samples)))
    for start in range(0, len(centers_xy), chunk):
        block = centers_xy[start : start + chunk]
        dx = np.abs(block[:, None, 0] - samples_xy[None, :, 0])
        dy = np.abs(block[:, None, 1] - samples_xy[None, :, 1])
        if metric == "l2":
            ok = dx * dx + dy * dy <= (reach + TOL) ** 2
        elif metric == "linf":
            ok = np.maximum(dx, dy) <= reach + TOL
        elif metric == "l1":
            ok = dx + dy <= reach + TOL
        else:
            raise ValueError(f"unknown metric {metric!r}")
        col_counts += ok.sum(axis=0)
        rows.append(np.packbits(ok, axis=1))
    return np.concatenate(rows, axis=0), col_counts


def _sample_bit_column(packed: np.ndarray, s: int) -> np.ndarray:
    """Boolean column s of a packed matrix."""
    return (packed[:, s >> 3] & (0x80 >> (s & 7))) != 0


def _prune_dominated(cands: np.ndarray, masked: np.ndarray) -> np.ndarray:
    """Drop candidates whose remaining coverage is a subset of another's.

    ``masked`` holds each candidate's coverage restricted to the still
    uncovered samples.  Strict subsets always die; of exact ties the lowest
    index survives, so the result is deterministic and never empty.
    """
    keep = np.ones(len(cands), dtype=bool)
    for i in range(len(cands)):
        if not keep[i]:
            continue
        rest = np.nonzero(keep)[0]
        rest = rest[rest != i]
        if len(rest) == 0:
            continue
        inside_i = ~np.any(masked[rest] & ~masked[i][None, :], axis=1)  # rest_j <= i
        contains_i = ~np.any(masked[i][None, :] & ~masked[rest], axis=1)  # i <= rest_j
        equal = inside_i & contains_i
        keep[rest[inside_i & (~equal | (rest > i))]] = False
    return cands[keep]


def _search(
    packed: np.ndarray,
    static_counts: np.ndarray,
    uncovered: np.ndarray,
    depth_left: int,
    chosen: list[int],
) -> Optional[list[int]]:
    uncovered_bits = np.unpackbits(uncovered)[: packed.shape[1] * 8]
    need = int(uncovered_bits.sum())
    if need == 0:
        return chosen
    if depth_left == 0:
        return None
    inter_counts = _popcount(packed & uncovered)
    if depth_left == 1:
        hits = np.nonzero(inter_counts == need)[0]
        if len(hits):
            return chosen + [int(hits[0])]
        return None
    # union of the depth_left best rows cannot beat the sum of their sizes
    top = np.partition(inter_counts, -depth_left)[-depth_left:]
    if int(top.sum()) < need:
        return None
    # pivot: the uncovered sample with the fewest covering centers overall
    sample_ids = np.nonzero(uncovered_bits)[0]
    pivot = int(sample_ids[np.argmin(static_counts[sample_ids])])
    cands = np.nonzero(_sample_bit_column(packed, pivot))[0]
    cands = cands[inter_counts[cands] > 0]
    if len(cands) == 0:
        return None
    masked = packed[cands] & uncovered
    if len(cands) > 2:
        kept = _prune_dominated(cands, masked)
    else:
        kept = cands
    order = np.argsort(-inter_counts[kept], kind="stable")
    for c in kept[order]:
        c = int(c)
        rest = uncovered & ~packed[c]
        found = _search(packed, static_counts, rest, depth_left - 1, chosen + [c])
        if found is not None:
            return found
    return None


def grid_cover_feasible(
    sample_points: Sequence[Point],
    k: int,
    metric: str,
    reach: float,
    resolution: float,
    pad: Optional[float] = None,
) -> Optional[tuple[Point, ...]]:
    """Can k footprints of the given reach, centered on a resolution grid,
    cover every sample point?  Returns the centers of one cover, or None.

    The metric defines the footprint shape: l2 = circle of radius ``reach``,
    linf = axis square of half-side ``reach``, l1 = 45-degree square
    (diamond) of half-diagonal ``reach``.
    """
    if len(sample_points) == 0:
        raise EmptyInput("no sample points")
    if k < 1:
        raise ZeroK(f"k must be >= 1, got {k}")
    samples_xy = points_to_array(sample_points)
    pad = reach if pad is None else pad
    minx, miny = samples_xy.min(axis=0)
    maxx, maxy = samples_xy.max(axis=0)
    # grid anchored at the bbox min corner and extended by whole steps, so the
    # candidate set only grows with pad and feasibility stays monotone in reach
    ext = int(math.ceil(pad / resolution + 1e-9))
    nx = int(math.floor((maxx - minx) / resolution + 1e-9))
    ny = int(math.floor((maxy - miny) / resolution + 1e-9))
    xs = minx + resolution * np.arange(-ext, nx + ext + 1)
    ys = miny + resolution * np.arange(-ext, ny + ext + 1)
    gx, gy = np.meshgrid(xs, ys)
    centers_xy = np.column_stack([gx.ravel(), gy.ravel()])

    # centers farther than the reach from the sample bbox cover nothing
    gap_x = np.maximum(np.maximum(minx - centers_xy[:, 0], centers_xy[:, 0] - maxx), 0.0)
    gap_y = np.maximum(np.maximum(miny - centers_xy[:, 1], centers_xy[:, 1] - maxy), 0.0)
    if metric == "l2":
        near = gap_x * gap_x + gap_y * gap_y <= (reach + TOL) ** 2
    elif metric == "linf":
        near = np.maximum(gap_x, gap_y) <= reach + TOL
    else:
        near = gap_x + gap_y <= reach + TOL
    centers_xy = centers_xy[near]
    if len(centers_xy) == 0:
        return None

    packed, static_counts = _cover_matrix(centers_xy, samples_xy, metric, reach)
    useful = _popcount(packed) > 0
    packed = packed[useful]
    centers_xy = centers_xy[useful]
    if len(packed) == 0:
        return None
    n_samples = len(samples_xy)
    universe = np.packbits(np.ones(n_samples, dtype=bool))
    found = _search(packed, static_counts, universe, k, [])
    if found is None:
        return None
    return tuple(Point(float(centers_xy[c, 0]), float(centers_xy[c, 1])) for c in found)


def _kind_metric_reach(kind: str) -> tuple[str, float]:
    """Metric name and reach-per-unit-length for a footprint kind."""
    if kind == "circle":
        return "l2", 1.0
    if kind in ("square", "axis_square"):
        return "linf", 0.5
    raise ValueError(f"unknown kind {kind!r}")


def continuous_cover_bounds(
    polygon: SimplePolygon, k: int, kind: str, resolution: float
) -> OracleBounds:
    """Bracket the optimal footprint length for covering the closed region.

    Binary search on the length; each probe is a grid placement feasibility
    check against a resolution/2-dense region sample.  The returned lower
    bound is re-certified infeasible on a 2x finer sample so bracket
    inversions from sampling artifacts cannot slip through.

    The bracket is exact for the grid-restricted problem (centers on the
    anchored resolution grid, coverage of the sample set); against the
    continuous optimum each endpoint can drift by a grid offset, so treat
    conclusions finer than the resolution with suspicion.
    """
    if k > MAX_K:
        raise TooLarge(f"guardrail: k <= {MAX_K}")
    if k < 1:
        raise ZeroK(f"k must be >= 1, got {k}")
    minx, miny, maxx, maxy = polygon.bbox()
    w, h = maxx - minx, maxy - miny
    if w / resolution > MAX_GRID_STEPS + 1e-9 or h / resolution > MAX_GRID_STEPS + 1e-9:
        raise TooLarge(
            f"guardrail: bbox extent over {MAX_GRID_STEPS} grid steps per axis "
            f"({w:g} x {h:g} at resolution {resolution:g})"
        )
    metric, reach_per_len = _kind_metric_reach(kind)
    samples = tuple(sample_region(polygon, resolution / 2.0).points)

    def feasible(length: float, pts: Sequence[Point]) -> Optional[tuple[Point, ...]]:
        return grid_cover_feasible(
            pts, k, metric, reach_per_len * length, resolution, pad=reach_per_len * length
        )

    hi = max(w, h) + 2 * resolution if metric == "linf" else math.hypot(w, h) / 2 + 2 * resolution
    placement = feasible(hi, samples)
    for _ in range(4):
        if placement is not None:
            break
        hi *= 2.0
        placement = feasible(hi, samples)
    if placement is None:
        raise TooLarge(f"no feasible cover found up to length {hi:g}")

    lo = 0.0
    for _ in range(60):
        if hi - lo <= resolution:
            break
        mid = (lo + hi) / 2.0
        mid_placement = feasible(mid, samples)
        if mid_placement is not None:
            hi, placement = mid, mid_placement
        else:
            lo = mid

    # certify: the lower bound must stay infeasible on a 2x finer sample
    if lo > 0.0:
        fine = tuple(sample_region(polygon, resolution / 4.0).points)
        for _ in range(8):
            if feasible(lo, fine) is None:
                break
            lo = max(0.0, lo - resolution / 2.0)
    return OracleBounds(lo, hi, "grid_search", resolution, placement)


def ratio_experiment(
    instances: Sequence[tuple[str, SimplePolygon]],
    k: int,
    kind: str,
    eps: float,
    resolution: Optional[float] = None,
) -> tuple[list[dict], float]:
    """Run solver vs oracle over a suite; rows carry per-instance ratios.

    ``eps`` is the solver sampling density in world units; ``resolution``
    defaults to diameter/30 per instance.  The ratio denominator is the
    certified oracle lower bound, so reported ratios are conservative
    (upper bounds on the true ratio).
    """
    from .coverage import solve_circle_cover, solve_square_cover

    rows: list[dict] = []
    max_ratio = 0.0
    for name, polygon in instances:
        diam = polygon.diameter()
        inst_eps = eps
        res = resolution if resolution is not None else diam / 30.0
        if kind == "circle":
            sol = solve_circle_cover(polygon, k, inst_eps, mode="region")
        else:
            sol = solve_square_cover(polygon, k, inst_eps, mode="region")
        bounds = continuous_cover_bounds(polygon, k, kind, res)
        ratio = sol.length / bounds.lower if bounds.lower > 0 else math.inf
        max_ratio = max(max_ratio, ratio)
        rows.append(
            {
                "instance": name,
                "k": k,
                "kind": kind,
                "alg_len": sol.length,
                "oracle_lo": bounds.lower,
                "oracle_hi": bounds.upper,
                "ratio": ratio,
            }
        )
    return rows, max_ratio
