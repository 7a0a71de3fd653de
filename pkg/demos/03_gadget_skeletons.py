"""Build the bar-decorated skeleton structures and render them to SVG.

Three scenes: a single straight link with its hand-built circle cover, a
three-arm junction, and the full K4 assembly with bent outer edges.

Run:  python demos/03_gadget_skeletons.py
Writes demos/out/link_pattern.svg, junction.svg, k4.svg
"""

import os

from polycover import (
    assemble_structure,
    build_edge_link,
    circle_link_pattern,
    circle_link_spec,
    footprint_contains,
    io,
    junction_fixture,
    k4_layout,
    skeleton_samples,
)

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

# straight link: 9 unit segments, 7 perpendicular bars of length sqrt(3)
link = build_edge_link(circle_link_spec(m=4))
print(f"link: {len(link.spine_segments)} spine segments, {len(link.bars)} bars")

# the tight hand cover: unit circles at the odd spine offsets 1, 3, 5, 7, 9;
# each touches the tips of its neighboring bars exactly
pattern = circle_link_pattern(m=4)
samples = skeleton_samples(link, eps=0.05)
covered = sum(1 for p in samples.points if any(footprint_contains(f, p) for f in pattern))
print(f"pattern covers {covered}/{len(samples)} skeleton samples with {len(pattern)} circles")
io.render_svg(
    os.path.join(OUT, "link_pattern.svg"),
    samples=samples,
    footprints=pattern,
    skeleton=link,
)

# a junction: three arms at pairwise 120 degrees, first bars 1.5 segments out
junction = junction_fixture("square", m=4)
print(
    f"junction: {len(junction.spine_segments)} spine segments, "
    f"first-bar offset {junction.params.junction_bar_offset:.4f}"
)
io.render_svg(os.path.join(OUT, "junction.svg"), skeleton=junction)

# the full K4: 4 junctions, 3 straight spokes, 3 bent outer edges
k4 = assemble_structure(k4_layout("circle"))
print(
    f"k4: {len(k4.junctions)} junctions, {len(k4.spine_segments)} spine segments, "
    f"{len(k4.bars)} bars"
)
io.render_svg(os.path.join(OUT, "k4.svg"), skeleton=k4)
print(f"wrote SVGs to {OUT}")
