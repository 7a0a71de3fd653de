"""Command line interface.

Exit codes: 0 success, 1 validation or domain failure (including a failed
verification), 2 I/O failure.  Results go to stdout or files; wall time goes
to stderr so output stays pipeable.  All subcommands are deterministic for
fixed flags; ``--seed`` shuffles the sample order fed to clustering to probe
tie-breaking sensitivity.

``--threads`` (fallback: the POLYCOVER_THREADS environment variable) caps
worker threads for any future parallel section; the current implementation is
vectorized single-process, so the flag is validated and recorded only.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from . import io as pio
from .coverage import solve_circle_cover, solve_square_cover, verify_cover
from .errors import IoError, PolycoverError
from .gadget import assemble_structure, skeleton_samples
from .hardness import VARIANTS, JunctionSystem, bound_report, residual_sweep, solve_junction_system
from .oracle import continuous_cover_bounds, ratio_experiment

_CLI_KINDS = ("circle", "square")


def _threads_value(args: argparse.Namespace) -> int:
    raw = args.threads if args.threads is not None else os.environ.get("POLYCOVER_THREADS", "1")
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise PolycoverError(f"--threads must be a positive integer, got {raw!r}")
    if value < 1:
        raise PolycoverError(f"--threads must be a positive integer, got {value}")
    return value


def _cmd_cover(args: argparse.Namespace) -> int:
    _threads_value(args)
    if args.k < 1:
        raise PolycoverError(f"--k must be at least 1, got {args.k}")
    if args.eps <= 0:
        raise PolycoverError(f"--eps must be positive, got {args.eps}")
    polygon = pio.read_polygon(args.polygon)
    solve = solve_circle_cover if args.kind == "circle" else solve_square_cover
    solution = solve(
        polygon, args.k, args.eps, mode=args.mode, constrained=args.constrained, seed=args.seed
    )
    pio.write_solution(solution, args.out)
    from .sampling import sample_polygon

    n_samples = len(sample_polygon(polygon, args.eps, args.mode))
    print(f"length={solution.length!r}")
    print(f"raw_cluster_radius={solution.raw_cluster_radius!r}")
    print(f"samples={n_samples}")
    print(f"k={solution.k}")
    if args.svg:
        pio.render_svg(args.svg, polygon=polygon, footprints=solution.footprints)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _threads_value(args)
    if args.eps <= 0:
        raise PolycoverError(f"--eps must be positive, got {args.eps}")
    polygon = pio.read_polygon(args.polygon)
    solution = pio.read_solution(args.solution)
    report = verify_cover(polygon, solution, args.eps)
    print(f"covered={report.covered}")
    print(f"worst_gap={report.worst_gap!r}")
    print(f"verify_eps={report.verify_eps!r}")
    print(f"samples_checked={report.samples_checked}")
    return 0 if report.covered else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    _threads_value(args)
    if args.resolution <= 0:
        raise PolycoverError(f"--resolution must be positive, got {args.resolution}")
    polygon = pio.read_polygon(args.polygon)
    bounds = continuous_cover_bounds(polygon, args.k, args.kind, args.resolution)
    print(f"lower={bounds.lower!r}")
    print(f"upper={bounds.upper!r}")
    print(f"method={bounds.method}")
    print(f"resolution={bounds.resolution!r}")
    return 0


def _cmd_ratio(args: argparse.Namespace) -> int:
    _threads_value(args)
    if args.eps <= 0:
        raise PolycoverError(f"--eps must be positive, got {args.eps}")
    try:
        names = sorted(n for n in os.listdir(args.suite) if n.endswith(".json"))
    except OSError as exc:
        raise IoError(f"cannot list suite directory {args.suite}: {exc}") from exc
    if not names:
        raise PolycoverError(f"no .json polygon files in {args.suite}")
    instances = [
        (os.path.splitext(n)[0], pio.read_polygon(os.path.join(args.suite, n))) for n in names
    ]
    rows, max_ratio = ratio_experiment(
        instances, args.k, args.kind, args.eps, resolution=args.resolution
    )
    print("instance,k,kind,alg_len,oracle_lo,oracle_hi,ratio")
    for row in rows:
        print(
            f"{row['instance']},{row['k']},{row['kind']},{row['alg_len']!r},"
            f"{row['oracle_lo']!r},{row['oracle_hi']!r},{row['ratio']!r}"
        )
    print(f"# max_ratio {max_ratio!r}")
    return 0


def _cmd_gadget(args: argparse.Namespace) -> int:
    _threads_value(args)
    layout = pio.read_layout(args.layout)
    skeleton = assemble_structure(layout)
    pio.render_svg(args.out_svg, skeleton=skeleton)
    print(f"spine_segments={len(skeleton.spine_segments)}")
    print(f"bars={len(skeleton.bars)}")
    print(f"junctions={len(skeleton.junctions)}")
    if args.samples is not None:
        if args.out_samples is None:
            raise PolycoverError("--samples requires --out-samples FILE")
        samples = skeleton_samples(skeleton, args.samples)
        pio.write_samples(samples, args.out_samples)
        print(f"samples={len(samples)}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    _threads_value(args)
    if args.sweep:
        if args.variant is None:
            raise PolycoverError("--sweep requires --variant")
        print("ell,residual")
        for ell, residual in residual_sweep(args.variant):
            print(f"{ell!r},{residual!r}")
        return 0
    if args.variant is not None:
        result = solve_junction_system(JunctionSystem.for_variant(args.variant))
        print(f"variant={result.variant}")
        print(f"ell={result.ell!r}")
        print(f"residual={result.residual!r}")
        print(f"reported_bound={result.reported_bound!r}")
        for name, value in sorted(result.unknowns.items()):
            print(f"{name}={value!r}")
        return 0
    print(f"{'variant':<18} {'bound':>10} {'guarantee':>10} {'gap':>8} {'raw_root':>10} {'residual':>10}")
    for row in bound_report():
        print(
            f"{row.variant:<18} {row.bound:>10.6f} {row.guarantee:>10.6f} "
            f"{row.gap:>8.4f} {row.raw_root:>10.6f} {row.residual:>10.2e}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycover",
        description="Cover simple polygons with k equal squares or circles; "
        "verify, benchmark against exact oracles, and generate skeleton structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--threads", type=int, default=None, help="cap worker threads")

    p = sub.add_parser("cover", help="solve a covering instance")
    p.add_argument("--polygon", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=_CLI_KINDS, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--mode", choices=("boundary", "region"), default="region")
    p.add_argument("--constrained", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--svg", default=None)
    p.add_argument("--seed", type=int, default=None, help="shuffle sample order")
    common(p)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("verify", help="verify a solution file against a polygon")
    p.add_argument("--polygon", required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--eps", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="bracket the optimal length by grid search")
    p.add_argument("--polygon", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=_CLI_KINDS, required=True)
    p.add_argument("--resolution", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("ratio", help="solver vs oracle ratios over a polygon suite")
    p.add_argument("--suite", required=True, help="directory of polygon .json files")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=_CLI_KINDS, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--resolution", type=float, default=None)
    common(p)
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("gadget", help="assemble a skeleton layout and render it")
    p.add_argument("--layout", required=True)
    p.add_argument("--out-svg", required=True)
    p.add_argument("--samples", type=float, default=None, help="also sample at this density")
    p.add_argument("--out-samples", default=None)
    common(p)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("bounds", help="junction threshold constants")
    p.add_argument("--variant", choices=VARIANTS, default=None)
    p.add_argument("--sweep", action="store_true", help="CSV residual sweep for --variant")
    common(p)
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (IoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolycoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        print(f"wall_time_s={time.perf_counter() - start:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
