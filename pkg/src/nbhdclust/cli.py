"""Command-line interface.

Exit codes: 0 success, 2 infeasible decide verdict, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from ._backend import implementation
from .canonical import canonical_candidates
from .decider import COVER_FACTOR, decide
from .fptas import solve_unit_disks_small_k
from .generators import (
    GadgetError,
    GadgetParams,
    gen_vc_disks,
    gen_vc_segments,
    random_disjoint_disks,
    random_intervals,
)
from .geometry import Ball, Disk, GeometryError, Interval
from .instance_io import (
    instance_from_json,
    instance_to_json,
    solution_to_json,
)
from .oned import solve_1d
from .optimizer import solution_radius, solve_balls_dd, solve_disks
from .oracle import OracleError, brute_force_opt
from .size_ptas import solve_size
from .svg import write_svg

__all__ = ["main", "build_parser"]


def _global_flags(parser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for generators")
    parser.add_argument("--format", choices=["json"], default=default("json"),
                        help="output format (json)")
    parser.add_argument("--svg", metavar="PATH", default=default(None),
                        help="also render the result to an SVG file")
    parser.add_argument("--tolerance", type=float, default=default(1e-9),
                        help="verification tolerance for reported radii")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nbhdclust",
        description="Clustering with convex neighborhoods: deciders, solvers, "
        "generators, and an exhaustive oracle.",
    )
    _global_flags(p, suppress=False)
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed before it
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    def sub_parser_class(**kw):
        return argparse.ArgumentParser(parents=[common], **kw)

    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=sub_parser_class)

    sp = sub.add_parser("decide", help="run the constant-factor decider")
    sp.add_argument("instance")
    sp.add_argument("--radius", "--r", dest="r", type=float, required=True,
                    help="query radius")
    sp.add_argument("--k", type=int, default=None,
                    help="override the instance's center budget")

    def with_k(parser):
        parser.add_argument("--k", type=int, default=None,
                            help="override the instance's center budget")
        return parser

    sp = with_k(sub.add_parser("solve", help="k centers within a constant factor"))
    sp.add_argument("instance")
    sp.add_argument("--alg", choices=["auto", "disks", "balls"], default="auto")
    sp.add_argument("--eps", type=float, default=0.25,
                    help="refinement accuracy for the ball search")

    sp = with_k(sub.add_parser("solve-1d", help="exact interval clustering"))
    sp.add_argument("instance")

    sp = with_k(sub.add_parser("size-ptas",
                               help="(1+eps)k centers at optimal radius"))
    sp.add_argument("instance")
    sp.add_argument("--eps", type=float, default=0.5)
    sp.add_argument("--swap-size", type=int, default=3)

    sp = with_k(sub.add_parser("fptas", help="(1+eps) radius for equal disks"))
    sp.add_argument("instance")
    sp.add_argument("--eps", type=float, default=0.5)

    sp = with_k(sub.add_parser("oracle",
                               help="exhaustive exact solver (small inputs)"))
    sp.add_argument("instance")

    sp = sub.add_parser("gen-candidates",
                        help="dump candidate centers and radii for a disk "
                        "instance")
    sp.add_argument("instance")

    sp = sub.add_parser("gen", help="emit a generated instance as JSON")
    gsub = sp.add_subparsers(dest="generator", required=True,
                             parser_class=sub_parser_class)

    gp = gsub.add_parser("random-disks")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, default=1)
    gp.add_argument("--box", type=float, default=10.0)
    gp.add_argument("--min-gap", type=float, default=0.05)
    gp.add_argument("--radius-min", type=float, default=0.2)
    gp.add_argument("--radius-max", type=float, default=1.0)

    gp = gsub.add_parser("intervals")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, default=1)
    gp.add_argument("--span", type=float, default=20.0)
    gp.add_argument("--max-len", type=float, default=3.0)

    gp = gsub.add_parser("vc-segments")
    gp.add_argument("--edges", required=True,
                    help="comma-separated u-v pairs, e.g. 0-1,1-2,2-0")
    gp.add_argument("--k", type=int, required=True, help="vertex-cover budget")
    gp.add_argument("--eps-shrink", type=float, default=0.01)

    gp = gsub.add_parser("vc-disks")
    gp.add_argument("--edges", required=True,
                    help="comma-separated u-v pairs, e.g. 0-1,1-2")
    gp.add_argument("--k", type=int, required=True, help="vertex-cover budget")
    gp.add_argument("--delta-sep", type=float, default=1e-4)
    gp.add_argument("--n-per-edge", type=int, default=3)

    sp = sub.add_parser("bench", help="compare compiled and pure kernels")
    sp.add_argument("--sizes", default="1000,10000,100000",
                    help="comma-separated sweep sizes")
    sp.add_argument("--repeat", type=int, default=3)

    return p


def _read_instance(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json(fh.read())


def _parse_edges(text: str):
    edges = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        u, _, v = part.partition("-")
        edges.append((int(u), int(v)))
    return edges


def _emit(doc: str) -> None:
    sys.stdout.write(doc + "\n")


def _maybe_svg(args, objects, centers, radius) -> None:
    if args.svg:
        write_svg(args.svg, objects, centers, radius)


def _cmd_decide(args) -> int:
    inst = _read_instance(args.instance)
    k = inst.k if args.k is None else args.k
    verdict = decide(inst.objects, k, args.r)
    achieved = (
        solution_radius(inst.objects, verdict.centers) if verdict.feasible else None
    )
    if verdict.feasible and achieved > COVER_FACTOR * args.r + args.tolerance:
        raise AssertionError(
            f"cover radius {achieved} exceeds {COVER_FACTOR} * query"
        )
    doc = {
        "feasible": verdict.feasible,
        "centers": [[float(x) for x in c] for c in verdict.centers],
        "query_radius": args.r,
        "cover_radius": achieved,
    }
    _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    _maybe_svg(args, inst.objects, verdict.centers,
               achieved if achieved is not None else 0.0)
    return 0 if verdict.feasible else 2


def _budget(args, inst) -> int:
    return inst.k if getattr(args, "k", None) is None else args.k


def _cmd_solve(args) -> int:
    inst = _read_instance(args.instance)
    alg = args.alg
    if alg == "auto":
        alg = "balls" if any(isinstance(o, Ball) for o in inst.objects) else "disks"
    if alg == "disks":
        sol = solve_disks(inst.objects, _budget(args, inst))
    else:
        sol = solve_balls_dd(inst.objects, _budget(args, inst), args.eps)
    _emit(solution_to_json(sol))
    _maybe_svg(args, inst.objects, sol.centers, sol.radius)
    return 0


def _cmd_solve_1d(args) -> int:
    inst = _read_instance(args.instance)
    if not all(isinstance(o, Interval) for o in inst.objects):
        raise ValueError("solve-1d needs an all-interval instance")
    sol = solve_1d(inst.objects, _budget(args, inst))
    _emit(solution_to_json(sol))
    _maybe_svg(args, inst.objects, sol.centers, sol.radius)
    return 0


def _cmd_size_ptas(args) -> int:
    inst = _read_instance(args.instance)
    sol = solve_size(inst.objects, _budget(args, inst), args.eps, args.swap_size)
    _emit(solution_to_json(sol))
    _maybe_svg(args, inst.objects, sol.centers, sol.radius)
    return 0


def _cmd_fptas(args) -> int:
    inst = _read_instance(args.instance)
    sol = solve_unit_disks_small_k(inst.objects, _budget(args, inst), args.eps)
    _emit(solution_to_json(sol))
    _maybe_svg(args, inst.objects, sol.centers, sol.radius)
    return 0


def _cmd_oracle(args) -> int:
    inst = _read_instance(args.instance)
    sol = brute_force_opt(inst.objects, _budget(args, inst))
    _emit(solution_to_json(sol))
    _maybe_svg(args, inst.objects, sol.centers, sol.radius)
    return 0


def _cmd_gen_candidates(args) -> int:
    inst = _read_instance(args.instance)
    cand = canonical_candidates(inst.objects)
    doc = {
        "points": [
            {
                "point": [float(x) for x in cp.point],
                "provenance": cp.provenance,
                "pair": list(cp.pair) if cp.pair is not None else None,
                "distance": cp.distance,
            }
            for cp in cand.points
        ],
        "radii": [float(r) for r in cand.radii],
    }
    _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_gen(args) -> int:
    if args.generator == "random-disks":
        objs = random_disjoint_disks(
            args.n, args.seed, box=args.box, min_gap=args.min_gap,
            radius_range=(args.radius_min, args.radius_max),
        )
        k = args.k
    elif args.generator == "intervals":
        objs = random_intervals(args.n, args.seed, span=args.span,
                                max_len=args.max_len)
        k = args.k
    elif args.generator == "vc-segments":
        params = GadgetParams(edges=_parse_edges(args.edges), k=args.k,
                              eps_shrink=args.eps_shrink)
        objs, k = gen_vc_segments(params)
    elif args.generator == "vc-disks":
        params = GadgetParams(edges=_parse_edges(args.edges), k=args.k,
                              delta_sep=args.delta_sep,
                              n_per_edge=args.n_per_edge)
        objs, k = gen_vc_disks(params)
    else:
        raise ValueError(f"unknown generator {args.generator!r}")
    _emit(instance_to_json(objs, k))
    _maybe_svg(args, objs, [], 0.0)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = bench_mod.run_bench(sizes, repeat=args.repeat, seed=args.seed)
    sys.stdout.write(f"active backend: {implementation()}\n")
    sys.stdout.write(bench_mod.format_table(rows) + "\n")
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "solve": _cmd_solve,
    "solve-1d": _cmd_solve_1d,
    "size-ptas": _cmd_size_ptas,
    "fptas": _cmd_fptas,
    "oracle": _cmd_oracle,
    "gen-candidates": _cmd_gen_candidates,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, GeometryError, GadgetError, OracleError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
