"""Solve the three junction threshold systems and sweep their residuals.

Each variant reduces to one residual in the footprint size; the root is the
size at which the three-footprint junction pattern first becomes feasible.
The table also shows the gap to the matching solver guarantee (2 for circles,
2*sqrt(2) for axis squares).

Run:  python demos/04_junction_thresholds.py
Writes demos/out/residual_sweep_<variant>.csv
"""

import os

from polycover import JunctionSystem, bound_report, residual_sweep, solve_junction_system
from polycover.hardness import VARIANTS

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

print(f"{'variant':<20} {'bound':>9} {'raw root':>9} {'guarantee':>10} {'gap':>7} {'residual':>9}")
for row in bound_report():
    print(
        f"{row.variant:<20} {row.bound:>9.6f} {row.raw_root:>9.6f} "
        f"{row.guarantee:>10.6f} {row.gap:>7.4f} {row.residual:>9.1e}"
    )

for variant in VARIANTS:
    result = solve_junction_system(JunctionSystem.for_variant(variant))
    print(f"\n{variant}: solved lengths at the root")
    for name, value in sorted(result.unknowns.items()):
        print(f"  {name} = {value:.6f}")
    path = os.path.join(OUT, f"residual_sweep_{variant}.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("ell,residual\n")
        for ell, res in residual_sweep(variant):
            fh.write(f"{ell!r},{res!r}\n")
    print(f"  sweep written to {path}")
