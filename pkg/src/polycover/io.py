"""Stable JSON file formats and SVG rendering.

Three document types: polygons, cover solutions, and gadget layouts.  Floats
are serialized with Python's shortest round-trip repr, so every document
parses back to bit-identical values.  Orientation of polygon input is echoed
on write (validation normalizes to CCW internally), which keeps write(read(x))
byte-stable for values.
"""

from __future__ import annotations

import json
import math
from typing import Optional, Sequence

from .coverage import CoverSolution
from .errors import EmptyScene, IoError, ParseError, ValidationError
from .gadget import (
    GadgetLayout,
    GadgetSkeleton,
    LayoutJunction,
    LayoutLink,
    RotatedSquare,
)
from .geometry import Footprint, Point, SimplePolygon, polygon_validate
from .sampling import SampleSet

_MODES = ("boundary", "region")
_KINDS = ("circle", "axis_square")
_METRICS = ("l2", "linf")
_VARIANTS = ("circle", "square")


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno} (char {exc.pos})") from exc


def _dump_json(doc: object, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _as_xy(value: object, what: str) -> tuple[float, float]:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)
    ):
        raise ValidationError(f"{what} must be a [x, y] pair, got {value!r}")
    x, y = float(value[0]), float(value[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValidationError(f"{what} must be finite, got {value!r}")
    return x, y


# ---------------------------------------------------------------------------
# polygons


def parse_polygon(doc: object) -> SimplePolygon:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ValidationError('polygon document must be {"vertices": [[x, y], ...]}')
    raw = doc["vertices"]
    if not isinstance(raw, list):
        raise ValidationError("vertices must be a list")
    pts = [Point(*_as_xy(v, f"vertex {i}")) for i, v in enumerate(raw)]
    return polygon_validate(pts)


def polygon_doc(polygon: SimplePolygon) -> dict:
    return {"vertices": [[p.x, p.y] for p in polygon.input_vertices()]}


def read_polygon(path: str) -> SimplePolygon:
    return parse_polygon(_load_json(path))


def write_polygon(polygon: SimplePolygon, path: str) -> None:
    _dump_json(polygon_doc(polygon), path)


# ---------------------------------------------------------------------------
# cover solutions


def solution_doc(solution: CoverSolution) -> dict:
    return {
        "kind": solution.kind,
        "metric": solution.metric,
        "k": solution.k,
        "length": solution.length,
        "raw_cluster_radius": solution.raw_cluster_radius,
        "eps": solution.eps,
        "mode": solution.mode,
        "constrained": solution.constrained,
        "centers": [[p.x, p.y] for p in solution.centers()],
    }


def parse_solution(doc: object) -> CoverSolution:
    if not isinstance(doc, dict):
        raise ValidationError("solution document must be an object")
    required = {
        "kind", "metric", "k", "length", "raw_cluster_radius",
        "eps", "mode", "constrained", "centers",
    }
    missing = required - doc.keys()
    if missing:
        raise ValidationError(f"solution document missing fields: {sorted(missing)}")
    if doc["kind"] not in _KINDS:
        raise ValidationError(f"kind must be one of {_KINDS}, got {doc['kind']!r}")
    if doc["metric"] not in _METRICS:
        raise ValidationError(f"metric must be one of {_METRICS}, got {doc['metric']!r}")
    if doc["mode"] not in _MODES:
        raise ValidationError(f"mode must be one of {_MODES}, got {doc['mode']!r}")
    if not isinstance(doc["constrained"], bool):
        raise ValidationError("constrained must be a boolean")
    k = doc["k"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValidationError(f"k must be a positive integer, got {k!r}")
    for name in ("length", "raw_cluster_radius", "eps"):
        v = doc[name]
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(float(v)):
            raise ValidationError(f"{name} must be a finite number, got {v!r}")
    if doc["length"] <= 0 or doc["eps"] <= 0 or doc["raw_cluster_radius"] < 0:
        raise ValidationError("length and eps must be positive, raw_cluster_radius nonnegative")
    centers = doc["centers"]
    if not isinstance(centers, list) or len(centers) != k:
        raise ValidationError(f"centers must list exactly k = {k} points")
    pts = [Point(*_as_xy(c, f"center {i}")) for i, c in enumerate(centers)]
    footprints = tuple(Footprint(doc["kind"], p, float(doc["length"])) for p in pts)
    return CoverSolution(
        footprints=footprints,
        length=float(doc["length"]),
        raw_cluster_radius=float(doc["raw_cluster_radius"]),
        eps=float(doc["eps"]),
        metric=doc["metric"],
        constrained=doc["constrained"],
        mode=doc["mode"],
    )


def read_solution(path: str) -> CoverSolution:
    return parse_solution(_load_json(path))


def write_solution(solution: CoverSolution, path: str) -> None:
    _dump_json(solution_doc(solution), path)


# ---------------------------------------------------------------------------
# gadget layouts


def layout_doc(layout: GadgetLayout) -> dict:
    links = []
    for link in layout.links:
        entry: dict = {"u": [link.u.x, link.u.y], "w": [link.w.x, link.w.y], "m": link.m}
        if link.via:
            entry["via"] = [[p.x, p.y] for p in link.via]
        links.append(entry)
    return {
        "segment_len": layout.segment_len,
        "zeta": layout.zeta,
        "variant": layout.variant,
        "junctions": [
            {"center": [j.center.x, j.center.y], "arms": list(j.arms)} for j in layout.junctions
        ],
        "links": links,
    }


def parse_layout(doc: object) -> GadgetLayout:
    if not isinstance(doc, dict):
        raise ValidationError("layout document must be an object")
    missing = {"segment_len", "zeta", "variant", "junctions", "links"} - doc.keys()
    if missing:
        raise ValidationError(f"layout document missing fields: {sorted(missing)}")
    if doc["variant"] not in _VARIANTS:
        raise ValidationError(f"variant must be one of {_VARIANTS}, got {doc['variant']!r}")
    for name in ("segment_len", "zeta"):
        v = doc[name]
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not v > 0:
            raise ValidationError(f"{name} must be a positive number, got {v!r}")
    links = []
    for i, entry in enumerate(doc["links"]):
        if not isinstance(entry, dict) or not {"u", "w", "m"} <= entry.keys():
            raise ValidationError(f"link {i} must carry u, w and m")
        m = entry["m"]
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValidationError(f"link {i}: m must be an integer, got {m!r}")
        via = tuple(
            Point(*_as_xy(p, f"link {i} via {j}")) for j, p in enumerate(entry.get("via", []))
        )
        links.append(
            LayoutLink(
                Point(*_as_xy(entry["u"], f"link {i} u")),
                Point(*_as_xy(entry["w"], f"link {i} w")),
                m,
                via,
            )
        )
    junctions = []
    for i, entry in enumerate(doc["junctions"]):
        if not isinstance(entry, dict) or not {"center", "arms"} <= entry.keys():
            raise ValidationError(f"junction {i} must carry center and arms")
        arms = entry["arms"]
        if (
            not isinstance(arms, list)
            or len(arms) != 3
            or not all(isinstance(a, int) and not isinstance(a, bool) for a in arms)
        ):
            raise ValidationError(f"junction {i}: arms must be three link indices")
        for a in arms:
            if not (0 <= a < len(links)):
                raise ValidationError(f"junction {i}: arm index {a} does not resolve")
        junctions.append(
            LayoutJunction(Point(*_as_xy(entry["center"], f"junction {i} center")), tuple(arms))
        )
    return GadgetLayout(
        float(doc["segment_len"]), float(doc["zeta"]), doc["variant"],
        tuple(junctions), tuple(links),
    )


def read_layout(path: str) -> GadgetLayout:
    return parse_layout(_load_json(path))


def write_layout(layout: GadgetLayout, path: str) -> None:
    _dump_json(layout_doc(layout), path)


# ---------------------------------------------------------------------------
# sample sets (auxiliary output format for the CLI)


def samples_doc(samples: SampleSet) -> dict:
    return {
        "density": samples.density,
        "mode": samples.mode,
        "points": [[p.x, p.y] for p in samples.points],
    }


def write_samples(samples: SampleSet, path: str) -> None:
    _dump_json(samples_doc(samples), path)


# ---------------------------------------------------------------------------
# SVG rendering


def _fmt(x: float) -> str:
    return f"{x:.6f}".rstrip("0").rstrip(".")


def render_svg(
    path: str,
    polygon: Optional[SimplePolygon] = None,
    samples: Optional[SampleSet] = None,
    footprints: Sequence[Footprint] = (),
    rotated_squares: Sequence[RotatedSquare] = (),
    skeleton: Optional[GadgetSkeleton] = None,
) -> None:
    """Write an SVG 1.1 rendering of any combination of scene elements.

    The viewBox is the scene bbox inflated by 5%; element classes (polygon,
    sample, footprint, spine, bar, junction) make the output greppable in
    tests and styleable by hand.
    """
    xs: list[float] = []
    ys: list[float] = []

    def see(x: float, y: float) -> None:
        xs.append(x)
        ys.append(y)

    if polygon is not None:
        for p in polygon.vertices:
            see(p.x, p.y)
    if samples is not None:
        for p in samples.points:
            see(p.x, p.y)
    for f in footprints:
        see(f.center.x - f.reach, f.center.y - f.reach)
        see(f.center.x + f.reach, f.center.y + f.reach)
    for sq in rotated_squares:
        for c in sq.corners():
            see(c.x, c.y)
    if skeleton is not None:
        for seg in list(skeleton.spine_segments) + list(skeleton.bars):
            see(seg.a.x, seg.a.y)
            see(seg.b.x, seg.b.y)
    if not xs:
        raise EmptyScene("nothing to render")

    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    w = max(maxx - minx, 1e-6)
    h = max(maxy - miny, 1e-6)
    pad = 0.05 * max(w, h)
    stroke = 0.004 * max(w, h)
    view = f"{_fmt(minx - pad)} {_fmt(-(maxy + pad))} {_fmt(w + 2 * pad)} {_fmt(h + 2 * pad)}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}">',
        '<g transform="scale(1,-1)" fill="none" '
        f'stroke-width="{_fmt(stroke)}" stroke-linecap="round">',
    ]
    if polygon is not None:
        pts = " ".join(f"{_fmt(p.x)},{_fmt(p.y)}" for p in polygon.vertices)
        parts.append(f'<polygon class="polygon" points="{pts}" stroke="#1a1a1a"/>')
    if skeleton is not None:
        for seg in skeleton.spine_segments:
            parts.append(
                f'<line class="spine" x1="{_fmt(seg.a.x)}" y1="{_fmt(seg.a.y)}" '
                f'x2="{_fmt(seg.b.x)}" y2="{_fmt(seg.b.y)}" stroke="#00509e"/>'
            )
        for seg in skeleton.bars:
            parts.append(
                f'<line class="bar" x1="{_fmt(seg.a.x)}" y1="{_fmt(seg.a.y)}" '
                f'x2="{_fmt(seg.b.x)}" y2="{_fmt(seg.b.y)}" stroke="#9e2a00"/>'
            )
        for j in skeleton.junctions:
            parts.append(
                f'<circle class="junction" cx="{_fmt(j.center.x)}" cy="{_fmt(j.center.y)}" '
                f'r="{_fmt(3 * stroke)}" fill="#00509e"/>'
            )
    for f in footprints:
        if f.kind == "circle":
            parts.append(
                f'<circle class="footprint" cx="{_fmt(f.center.x)}" cy="{_fmt(f.center.y)}" '
                f'r="{_fmt(f.length)}" stroke="#2e7d32" fill="#2e7d32" fill-opacity="0.15"/>'
            )
        else:
            half = f.length / 2.0
            parts.append(
                f'<rect class="footprint" x="{_fmt(f.center.x - half)}" '
                f'y="{_fmt(f.center.y - half)}" width="{_fmt(f.length)}" '
                f'height="{_fmt(f.length)}" stroke="#2e7d32" fill="#2e7d32" fill-opacity="0.15"/>'
            )
    for sq in rotated_squares:
        pts = " ".join(f"{_fmt(c.x)},{_fmt(c.y)}" for c in sq.corners())
        parts.append(
            f'<polygon class="footprint" points="{pts}" stroke="#2e7d32" '
            'fill="#2e7d32" fill-opacity="0.15"/>'
        )
    if samples is not None:
        for p in samples.points:
            parts.append(
                f'<circle class="sample" cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" '
                f'r="{_fmt(1.2 * stroke)}" fill="#6a6a6a"/>'
            )
    parts.append("</g>")
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
