"""Cover an L-shaped region with three equal squares, then verify and render.

Run:  python demos/01_cover_a_polygon.py
Writes demos/out/l_shape_cover.svg
"""

import os

from polycover import io, polygon_validate, solve_square_cover, verify_cover

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

# an L-shaped room: 2 x 2 outline with a 1 x 1 bite taken out of one corner
l_shape = polygon_validate([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])

print(f"region area {l_shape.area():.2f}, diameter {l_shape.diameter():.3f}")

# sampling density steers both the discretization and the size inflation:
# footprints are grown by eps so the continuous region is provably covered
eps = 0.04
solution = solve_square_cover(l_shape, k=3, eps=eps, mode="region")

print(f"k = {solution.k} axis-aligned squares")
print(f"raw cluster radius (covers the samples): {solution.raw_cluster_radius:.4f}")
print(f"inflated side length (covers the region): {solution.length:.4f}")
for i, f in enumerate(solution.footprints):
    print(f"  square {i}: center ({f.center.x:.3f}, {f.center.y:.3f})")

# verification resamples the region at half the construction density
report = verify_cover(l_shape, solution, eps / 2)
print(f"verified covered={report.covered} over {report.samples_checked} probes")

svg_path = os.path.join(OUT, "l_shape_cover.svg")
io.render_svg(svg_path, polygon=l_shape, footprints=solution.footprints)
print(f"wrote {svg_path}")
