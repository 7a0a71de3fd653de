"""Threshold footprint sizes at which junction coverage patterns collapse.

Setting: three skeleton arms leave a crossing at pairwise 120 degrees, with
perpendicular bars hanging at 1.5, 2.5, ... segment lengths out on every arm
(see the gadget module).  At footprint size 1.0 the economical cover is rigid:
each footprint either spans two neighboring bars or one end bar, and chained
footprints meet tip to tip.  As the common size grows, a looser three-footprint
pattern around the crossing eventually becomes feasible -- one footprint
spanning the first two bars of one arm, the other two catching the first bar
of a neighboring arm each -- and the smallest size at which it does is the
threshold each variant solves for.

Every variant reduces, by substitution, to a single residual in the size l:

* ``circle`` (unit segments, bars sqrt(3)): a circle of radius l covering both
  tips of a bar sits within ``half_chord = sqrt(l^2 - 3/4)`` of that bar along
  the spine.  The two-bar circle is tight on the bar 2.5 out, so its center
  sits at ``2.5 - half_chord`` and its spine coverage toward the crossing ends
  at ``handoff = center - l``.  The one-bar circle on a neighboring arm is
  tight on its bar 1.5 out (center ``1.5 - half_chord``) and must reach the
  handoff point across the 120-degree wedge, giving the law-of-cosines closing
  relation ``handoff^2 + c^2 + handoff*c = l^2``.

* ``square`` (sqrt(2)/2 segments and bars, all placements free): the two-bar
  footprint is a 45-degree square (diagonal along its arm, full diagonal
  sqrt(2)*l).  Its far tip is pinned at 3*sqrt(2)/2 by the tips of the bar
  5*sqrt(2)/4 out, so its near tip stops ``tip_gap = sqrt(2)*(3/2 - l)`` short
  of the crossing.  The one-bar square tilts: one corner sits exactly on that
  near tip, and the two tips of the neighboring arm's first bar (3*sqrt(2)/4
  out, half-length sqrt(2)/4) lie on the two far sides.  Writing the two
  corner-to-bar-tip distances via the 120-degree wedge and splitting each far
  side at its bar tip yields the right-angle closing relation
  ``near_low^2 + near_high^2 = 1/2`` between the two near side pieces.

* ``square_restricted`` (centers must lie on the skeleton): both neighbors of
  the crossing are forced to be 45-degree squares on their own spines.  The
  one-bar square is tight on its first bar, so its far tip sits sqrt(2) out
  and its near tip overshoots the crossing by ``overshoot = sqrt(2)*(l - 1)``
  onto the opposite ray.  Coverage continuity puts the two-bar square's near
  tip on the side through that overshooting tip; the triangle formed by the
  crossing, the overshooting tip, and the near tip has a 60-degree angle at
  the crossing and 45 degrees where the side meets its spine, giving the
  law-of-sines closing relation ``tip_gap/sin(45) = overshoot/sin(75)``.
  The reported bound is additionally capped at the 1.25 size at which the
  pattern along plain links changes, which is taken as a given constant.

Each closing relation lives in one named function so alternative geometric
readings can be swapped in and compared; residuals of the full per-variant
equation set are re-evaluated at the returned root, which is the strong
correctness check (the headline value match is the weak one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.optimize import brentq

from .errors import AmbiguousRoot, NoRootInBracket

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SIN45 = math.sin(math.radians(45.0))
SIN75 = math.sin(math.radians(75.0))

VARIANTS = ("circle", "square", "square_restricted")

#: size at which the straight-link square pattern changes; given, not derived
PATH_PATTERN_CAP = 1.25

DEFAULT_BRACKET = (0.5, 2.0)


@dataclass(frozen=True)
class JunctionSystem:
    variant: str
    parameters: dict = field(default_factory=dict)

    @staticmethod
    def for_variant(variant: str) -> "JunctionSystem":
        if variant == "circle":
            return JunctionSystem(
                "circle",
                {"zeta": SQRT3, "segment_len": 1.0, "junction_bar_offset": 1.5},
            )
        if variant == "square":
            return JunctionSystem(
                "square",
                {
                    "zeta": SQRT2 / 2.0,
                    "segment_len": SQRT2 / 2.0,
                    "junction_bar_offset": 3.0 * SQRT2 / 4.0,
                },
            )
        if variant == "square_restricted":
            return JunctionSystem(
                "square_restricted",
                {
                    "zeta": SQRT2 / 2.0,
                    "segment_len": SQRT2 / 2.0,
                    "junction_bar_offset": 3.0 * SQRT2 / 4.0,
                    "path_cap": PATH_PATTERN_CAP,
                },
            )
        raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class HardnessResult:
    variant: str
    ell: float
    residual: float
    applied_cap: Optional[float]
    reported_bound: float
    unknowns: dict
    roots: tuple[float, ...]
    ambiguous: bool


# ---------------------------------------------------------------------------
# circle variant


def _circle_unknowns(ell: float) -> Optional[dict]:
    under = ell * ell - 0.75
    if under < 0.0:
        return None
    half_chord = math.sqrt(under)
    pair_center = 2.5 - half_chord
    handoff = pair_center - ell
    single_center = 1.5 - half_chord
    if handoff < 0.0 or single_center < 0.0:
        return None
    return {
        "half_chord": half_chord,
        "pair_center": pair_center,
        "handoff": handoff,
        "single_center": single_center,
    }


def circle_closing_residual(ell: float) -> float:
    """One-bar circle reaches the handoff point across the 120-degree wedge."""
    u = _circle_unknowns(ell)
    if u is None:
        return math.nan
    g, c = u["handoff"], u["single_center"]
    return g * g + c * c + g * c - ell * ell


def _circle_equations(ell: float, u: dict) -> list[float]:
    g, c, f = u["handoff"], u["single_center"], u["pair_center"]
    return [
        (2.5 - f) ** 2 + 0.75 - ell * ell,  # two-bar circle tight on far bar tips
        (f - g) - ell,  # its spine coverage ends at the handoff
        (1.5 - c) ** 2 + 0.75 - ell * ell,  # one-bar circle tight on its bar tips
        g * g + c * c + g * c - ell * ell,  # wedge reach (closing relation)
    ]


# ---------------------------------------------------------------------------
# square variant (free placements)


def _square_unknowns(ell: float) -> Optional[dict]:
    zeta = SQRT2 / 2.0
    tip_gap = 3.0 * SQRT2 / 2.0 - SQRT2 * ell
    if tip_gap < 0.0:
        return None
    dx = tip_gap / 2.0 + 3.0 * SQRT2 / 4.0
    dy_low = SQRT3 / 2.0 * tip_gap - zeta / 2.0
    dy_high = SQRT3 / 2.0 * tip_gap + zeta / 2.0
    hyp_low_sq = dx * dx + dy_low * dy_low
    hyp_high_sq = dx * dx + dy_high * dy_high
    if hyp_low_sq < ell * ell or hyp_high_sq < ell * ell:
        return None
    far_low = math.sqrt(hyp_low_sq - ell * ell)
    far_high = math.sqrt(hyp_high_sq - ell * ell)
    near_low = ell - far_low
    near_high = ell - far_high
    if near_low < 0.0 or near_high < 0.0:
        return None
    return {
        "tip_gap": tip_gap,
        "bar_dx": dx,
        "hyp_low": math.sqrt(hyp_low_sq),
        "hyp_high": math.sqrt(hyp_high_sq),
        "far_low": far_low,
        "far_high": far_high,
        "near_low": near_low,
        "near_high": near_high,
    }


def square_closing_residual(ell: float) -> float:
    """Right-angle split of the far corner: the two near side pieces see the
    bar as the hypotenuse (length zeta, zeta^2 = 1/2)."""
    u = _square_unknowns(ell)
    if u is None:
        return math.nan
    return u["near_low"] ** 2 + u["near_high"] ** 2 - 0.5


def _square_equations(ell: float, u: dict) -> list[float]:
    zeta = SQRT2 / 2.0
    dy_low = SQRT3 / 2.0 * u["tip_gap"] - zeta / 2.0
    dy_high = SQRT3 / 2.0 * u["tip_gap"] + zeta / 2.0
    return [
        (u["tip_gap"] + SQRT2 * ell) - 3.0 * SQRT2 / 2.0,  # far tip pinned by second bar
        u["hyp_low"] ** 2 - (u["bar_dx"] ** 2 + dy_low**2),  # corner-to-low-tip distance
        u["hyp_low"] ** 2 - (ell * ell + u["far_low"] ** 2),  # right angle at one far corner
        u["hyp_high"] ** 2 - (u["bar_dx"] ** 2 + dy_high**2),  # corner-to-high-tip distance
        u["hyp_high"] ** 2 - (ell * ell + u["far_high"] ** 2),  # right angle at the other
        u["near_low"] ** 2 + u["near_high"] ** 2 - 0.5,  # bar as hypotenuse (closing)
        (u["near_low"] + u["far_low"]) - ell,  # low bar tip splits its side
        (u["near_high"] + u["far_high"]) - ell,  # high bar tip splits its side
    ]


# ---------------------------------------------------------------------------
# restricted square variant (centers on the skeleton)


def _restricted_unknowns(ell: float) -> Optional[dict]:
    overshoot = SQRT2 * (ell - 1.0)
    tip_gap = SQRT2 * (1.5 - ell)
    if overshoot < 0.0 or tip_gap < 0.0:
        return None
    return {"overshoot": overshoot, "tip_gap": tip_gap}


def restricted_closing_residual(ell: float) -> float:
    """Law of sines in the crossing / overshooting-tip / near-tip triangle."""
    u = _restricted_unknowns(ell)
    if u is None:
        return math.nan
    return u["tip_gap"] * SIN75 - u["overshoot"] * SIN45


def _restricted_equations(ell: float, u: dict) -> list[float]:
    return [
        u["overshoot"] - (SQRT2 * ell - SQRT2),  # one-bar diamond tight on its bar
        (u["tip_gap"] + SQRT2 * ell) - 3.0 * SQRT2 / 2.0,  # two-bar diamond far tip pinned
        u["tip_gap"] * SIN75 - u["overshoot"] * SIN45,  # side-of-diamond handoff (closing)
    ]


_REDUCTIONS: dict[str, tuple[Callable, Callable, Callable]] = {
    "circle": (circle_closing_residual, _circle_unknowns, _circle_equations),
    "square": (square_closing_residual, _square_unknowns, _square_equations),
    "square_restricted": (
        restricted_closing_residual,
        _restricted_unknowns,
        _restricted_equations,
    ),
}


def residual_sweep(variant: str, lo: float = 0.5, hi: float = 2.0, n: int = 301) -> list[tuple[float, float]]:
    """(size, closing residual) table over a bracket, NaN outside the domain."""
    fn = _REDUCTIONS[variant][0]
    return [(x, fn(x)) for x in np.linspace(lo, hi, n)]


def solve_junction_system(
    system: JunctionSystem,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    tol: float = 1e-10,
) -> HardnessResult:
    """Find the variant's threshold size by bracketed root finding.

    The closing residual is scanned over the bracket; every sign change is
    polished by bisection to ``tol``, the full equation set is re-evaluated
    at each root, and the smallest root with all lengths nonnegative and
    residuals <= 1e-8 wins.  Multiple distinct consistent roots set the
    ambiguous flag.
    """
    residual_fn, unknowns_fn, equations_fn = _REDUCTIONS[system.variant]
    lo, hi = bracket
    xs = np.linspace(lo, hi, 2001)
    vals = np.array([residual_fn(x) for x in xs])
    roots: list[float] = []
    for i in range(len(xs) - 1):
        a, b = vals[i], vals[i + 1]
        if math.isfinite(a) and math.isfinite(b) and a * b <= 0.0 and a != b:
            root = brentq(residual_fn, xs[i], xs[i + 1], xtol=tol)
            if not roots or abs(root - roots[-1]) > 10 * tol:
                roots.append(float(root))
    if not roots:
        raise NoRootInBracket(f"{system.variant}: no sign change over {bracket}")

    consistent = []
    for root in roots:
        u = unknowns_fn(root)
        if u is None:
            continue
        res = max(abs(r) for r in equations_fn(root, u))
        if res <= 1e-8 and all(v >= -1e-9 for v in u.values()):
            consistent.append((root, u, res))
    if not consistent:
        raise AmbiguousRoot(f"{system.variant}: roots {roots} but none consistent")
    root, unknowns, residual = consistent[0]

    cap = system.parameters.get("path_cap")
    reported = min(root, cap) if cap is not None else root
    return HardnessResult(
        variant=system.variant,
        ell=root,
        residual=residual,
        applied_cap=cap,
        reported_bound=reported,
        unknowns=unknowns,
        roots=tuple(roots),
        ambiguous=len(consistent) > 1,
    )


@dataclass(frozen=True)
class BoundRow:
    variant: str
    bound: float
    guarantee: float
    gap: float
    raw_root: float
    residual: float


def bound_report() -> list[BoundRow]:
    """Threshold constants next to the matching solver guarantees.

    The guarantee is 2 for circles (greedy k-center) and 2*sqrt(2) for
    squares (greedy Linf k-center plus the rotation factor); the gap is
    guarantee / bound.
    """
    rows = []
    for variant in VARIANTS:
        result = solve_junction_system(JunctionSystem.for_variant(variant))
        guarantee = 2.0 if variant == "circle" else 2.0 * SQRT2
        rows.append(
            BoundRow(
                variant=variant,
                bound=result.reported_bound,
                guarantee=guarantee,
                gap=guarantee / result.reported_bound,
                raw_root=result.ell,
                residual=result.residual,
            )
        )
    return rows
