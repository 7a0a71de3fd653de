"""Covering simple polygons with k equal squares or circles.

Samplers discretize a polygon's boundary or region into an eps-net, a
deterministic farthest-first traversal picks footprint centers in the metric
matching the footprint shape, and brute-force oracles certify the results on
desk-size instances.  A gadget generator builds the bar-decorated skeleton
structures used in worst-case studies, and the hardness module solves the
junction threshold constants those structures give rise to.
"""

from .clustering import KCenterResult, assign_clusters, farthest_first
from .coverage import (
    CoverSolution,
    VerificationReport,
    constrained_filter,
    solve_circle_cover,
    solve_square_cover,
    verify_cover,
)
from .gadget import (
    EdgeLinkSpec,
    GadgetLayout,
    GadgetSkeleton,
    LayoutJunction,
    LayoutLink,
    RotatedSquare,
    assemble_structure,
    build_edge_link,
    build_junction,
    circle_link_pattern,
    circle_link_spec,
    junction_fixture,
    k4_layout,
    skeleton_samples,
    square_link_pattern,
    square_link_spec,
)
from .geometry import (
    Footprint,
    Point,
    Segment,
    SimplePolygon,
    dist_l2,
    dist_linf,
    footprint_contains,
    point_in_polygon,
    polygon_validate,
)
from .hardness import (
    BoundRow,
    HardnessResult,
    JunctionSystem,
    bound_report,
    residual_sweep,
    solve_junction_system,
)
from .oracle import (
    OracleBounds,
    continuous_cover_bounds,
    discrete_kcenter_exact,
    grid_cover_feasible,
    ratio_experiment,
)
from .sampling import SampleSet, sample_boundary, sample_polygon, sample_region

__version__ = "0.1.0"

__all__ = [
    "BoundRow",
    "CoverSolution",
    "EdgeLinkSpec",
    "Footprint",
    "GadgetLayout",
    "GadgetSkeleton",
    "HardnessResult",
    "JunctionSystem",
    "KCenterResult",
    "LayoutJunction",
    "LayoutLink",
    "OracleBounds",
    "Point",
    "RotatedSquare",
    "SampleSet",
    "Segment",
    "SimplePolygon",
    "VerificationReport",
    "assemble_structure",
    "assign_clusters",
    "bound_report",
    "build_edge_link",
    "build_junction",
    "circle_link_pattern",
    "circle_link_spec",
    "constrained_filter",
    "continuous_cover_bounds",
    "discrete_kcenter_exact",
    "dist_l2",
    "dist_linf",
    "farthest_first",
    "footprint_contains",
    "grid_cover_feasible",
    "junction_fixture",
    "k4_layout",
    "point_in_polygon",
    "polygon_validate",
    "ratio_experiment",
    "residual_sweep",
    "sample_boundary",
    "sample_polygon",
    "sample_region",
    "skeleton_samples",
    "solve_circle_cover",
    "solve_junction_system",
    "solve_square_cover",
    "square_link_pattern",
    "square_link_spec",
    "verify_cover",
]
