"""Benchmark the solvers against brute-force optimum brackets.

For desk-size instances the oracle brackets the optimal footprint length by
binary search over exhaustive grid placements.  The solver's inflated length
divided by the oracle lower bound is a conservative upper bound on the true
approximation ratio.

Run:  python demos/05_oracle_ratios.py   (takes a minute or two)
"""

from polycover import polygon_validate, ratio_experiment

instances = [
    ("unit_square", polygon_validate([(0, 0), (1, 0), (1, 1), (0, 1)])),
    ("rect_2x1", polygon_validate([(0, 0), (2, 0), (2, 1), (0, 1)])),
    ("right_triangle", polygon_validate([(0, 0), (1.5, 0), (0, 1.2)])),
]

for kind, guarantee in (("square", "2*sqrt(2) ~ 2.83"), ("circle", "2")):
    print(f"\n=== {kind} footprints (guarantee {guarantee}) ===")
    print(f"{'instance':<16} {'k':>2} {'alg len':>9} {'oracle lo':>10} {'oracle hi':>10} {'ratio':>7}")
    for k in (1, 2):
        rows, max_ratio = ratio_experiment(instances, k, kind, eps=0.02)
        for row in rows:
            print(
                f"{row['instance']:<16} {row['k']:>2} {row['alg_len']:>9.4f} "
                f"{row['oracle_lo']:>10.4f} {row['oracle_hi']:>10.4f} {row['ratio']:>7.3f}"
            )
    print(f"max ratio at k=2: {max_ratio:.3f}")
