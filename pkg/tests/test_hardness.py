import math

import pytest

from polycover import (
    JunctionSystem,
    bound_report,
    residual_sweep,
    solve_junction_system,
)
from polycover.errors import NoRootInBracket
from polycover.hardness import (
    circle_closing_residual,
    restricted_closing_residual,
    square_closing_residual,
)

SQRT2 = math.sqrt(2.0)

# frozen roots of the shipped readings (see module docstring for the geometry)
CIRCLE_ROOT = 1.1522592813545
SQUARE_ROOT = 1.1780591773847
RESTRICTED_ROOT = 1.2886751345948


def _solve(variant, **kw):
    return solve_junction_system(JunctionSystem.for_variant(variant), **kw)


def test_circle_threshold():
    r = _solve("circle")
    assert r.ell == pytest.approx(CIRCLE_ROOT, abs=1e-9)
    assert r.ell == pytest.approx(1.152, abs=5e-3)
    assert r.residual <= 1e-8
    assert r.applied_cap is None
    assert r.reported_bound == r.ell
    assert not r.ambiguous


def test_square_threshold():
    r = _solve("square")
    assert r.ell == pytest.approx(SQUARE_ROOT, abs=1e-9)
    assert r.residual <= 1e-8
    assert r.reported_bound == r.ell


def test_restricted_threshold_and_cap():
    r = _solve("square_restricted")
    assert r.ell == pytest.approx(RESTRICTED_ROOT, abs=1e-9)
    assert r.ell == pytest.approx(1.289, abs=5e-3)
    # closed form of the law-of-sines reading
    sin75, sin45 = math.sin(math.radians(75)), math.sin(math.radians(45))
    assert r.ell == pytest.approx((1.5 * sin75 + sin45) / (sin75 + sin45), abs=1e-12)
    assert r.residual <= 1e-8
    assert r.applied_cap == 1.25
    assert r.reported_bound == min(r.ell, 1.25) == 1.25


@pytest.mark.parametrize("variant", ["circle", "square", "square_restricted"])
def test_all_equations_satisfied(variant):
    r = _solve(variant)
    assert r.residual <= 1e-8
    assert all(v >= -1e-9 for v in r.unknowns.values())


@pytest.mark.parametrize("variant", ["circle", "square", "square_restricted"])
def test_bracket_perturbation_stable(variant):
    base = _solve(variant).ell
    lo = _solve(variant, bracket=(0.4, 2.1)).ell
    hi = _solve(variant, bracket=(0.6, 1.9)).ell
    assert abs(lo - base) <= 1e-9
    assert abs(hi - base) <= 1e-9


def test_no_root_in_bad_bracket():
    with pytest.raises(NoRootInBracket):
        _solve("circle", bracket=(1.9, 2.0))


def test_closing_residuals_cross_zero_at_roots():
    assert abs(circle_closing_residual(CIRCLE_ROOT)) < 1e-9
    assert abs(square_closing_residual(SQUARE_ROOT)) < 1e-9
    assert abs(restricted_closing_residual(RESTRICTED_ROOT)) < 1e-9


def test_residual_sweep_shape():
    rows = residual_sweep("circle", 0.5, 2.0, 151)
    assert len(rows) == 151
    finite = [(x, v) for x, v in rows if math.isfinite(v)]
    assert finite
    signs = {v > 0 for _, v in finite}
    assert signs == {True, False}  # the sweep straddles the root


def test_bound_report_rows():
    rows = {row.variant: row for row in bound_report()}
    assert set(rows) == {"circle", "square", "square_restricted"}
    circle = rows["circle"]
    assert circle.guarantee == 2.0
    assert circle.gap == pytest.approx(2.0 / CIRCLE_ROOT, abs=1e-9)
    assert circle.gap == pytest.approx(1.736, abs=2e-3)
    restricted = rows["square_restricted"]
    assert restricted.bound == 1.25
    assert restricted.guarantee == pytest.approx(2 * SQRT2)
    assert restricted.gap == pytest.approx(2 * SQRT2 / 1.25, abs=1e-9)
    assert restricted.gap == pytest.approx(2.263, abs=2e-3)
    square = rows["square"]
    assert square.guarantee == pytest.approx(2 * SQRT2)
    assert square.gap == pytest.approx(2 * SQRT2 / SQUARE_ROOT, abs=1e-9)
    for row in rows.values():
        assert row.residual <= 1e-8
