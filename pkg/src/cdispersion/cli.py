"""Command-line front end.

Exit codes: 0 success, 1 validation failure or decision false,
2 usage error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .bench import default_cases, records_to_tsv, run_cases, time_greedy_phases
from .errors import (
    ApproximationViolation,
    BudgetExceeded,
    DispersionError,
    InstanceTooSmall,
    InvalidParams,
)
from .exact import EXACT_BUDGET, ball_check, exact_solve
from .greedy import SEED_BUDGET, greedy_solve
from .instances import KINDS, UNIT_BOX, GeneratorSpec, generate
from .metric import validate_metric
from .reduction import dispersion_decision, graph_to_instance, threshold_decision
from .solution import SolveParams

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "DISPERSION_BUDGET"


def _budget(args, default):
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else default


def _emit(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args):
    inst = io.read_instance(args.instance)
    sol, trace = greedy_solve(inst, SolveParams(args.c, args.k),
                              budget=_budget(args, SEED_BUDGET), threads=args.threads)
    text = io.format_solution(sol, trace if args.trace else None)
    if args.out:
        _emit(text, args.out)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_exact(args):
    inst = io.read_instance(args.instance)
    sol = exact_solve(inst, SolveParams(args.c, args.k),
                      budget=_budget(args, EXACT_BUDGET), threads=args.threads)
    report = ball_check(inst, sol, args.c)
    text = io.format_solution(sol)
    if args.out:
        _emit(text, args.out)
    balls = io.format_ball_report(report)
    if args.balls:
        _emit(balls, args.balls)
    sys.stdout.write(text)
    sys.stdout.write(f"radius {io.fmt(report.radius)}\nviolations {len(report.violations)}\n")
    sys.stdout.write(balls)
    return EXIT_OK


def cmd_reduce(args):
    g = io.read_graph(args.graph)
    _emit(io.format_instance(graph_to_instance(g)), args.out)
    return EXIT_OK


def cmd_decide(args):
    inst = io.read_instance(args.instance)
    budget = _budget(args, EXACT_BUDGET)
    if args.bound is None:
        bound = 2 * args.c
        answer = dispersion_decision(inst, args.c, args.k, budget=budget)
    else:
        bound = args.bound
        answer = threshold_decision(inst, args.c, args.k, bound, budget=budget)
    sys.stdout.write(f"decision {'true' if answer else 'false'} bound {io.fmt(bound)}\n")
    return EXIT_OK if answer else EXIT_FALSE


def cmd_gen(args):
    spec = GeneratorSpec(args.kind, args.n, args.seed, tuple(args.box), args.edge_prob)
    _emit(io.format_instance(generate(spec)), args.out)
    return EXIT_OK


def cmd_check(args):
    inst = io.read_instance(args.instance)
    report = validate_metric(inst, args.tol)
    lines = [f"metric: {'OK' if report.ok else 'FAIL'}",
             f"symmetric {str(report.symmetric).lower()}",
             f"identity {str(report.identity_ok).lower()}",
             f"positive {str(report.positive).lower()}",
             f"triangle_violations {len(report.triangle_violations)}",
             f"tol {io.fmt(report.tol)}"]
    for i, l, j, gap in report.triangle_violations[: args.show]:
        lines.append(f"violation {i} {l} {j} {io.fmt(gap)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_bench(args):
    if args.timing:
        spec = GeneratorSpec(args.kind, args.n, args.seed)
        t = time_greedy_phases(generate(spec), SolveParams(args.c, args.k), threads=args.threads)
        share = t.seed_ms / t.total_ms if t.total_ms else 1.0
        sys.stdout.write(
            f"instance {spec.label()}\nc {t.c}\nk {t.k}\ncost {io.fmt(t.cost)}\n"
            f"seed_ms {t.seed_ms:.3f}\nextend_ms {t.extend_ms:.3f}\n"
            f"naive_extend_ms {t.naive_extend_ms:.3f}\nseed_share {share:.4f}\n")
        return EXIT_OK
    try:
        records = run_cases(default_cases(args.count), budget=_budget(args, EXACT_BUDGET),
                            threads=args.threads)
    except ApproximationViolation as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FALSE
    _emit(records_to_tsv(records), args.out)
    if args.out:
        worst = max((r.ratio / (2 * r.c) for r in records if r.ratio is not None), default=0.0)
        sys.stdout.write(f"records {len(records)}\nworst_ratio_over_2c {worst:.6f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumeration (default 1)")
    common.add_argument("--budget", type=int, default=None,
                        help=f"max subsets to enumerate (default from ${BUDGET_ENV} or built-in)")

    ck = argparse.ArgumentParser(add_help=False)
    ck.add_argument("--c", type=int, required=True, help="number of nearest neighbours summed")
    ck.add_argument("--k", type=int, required=True, help="number of points to select")

    parser = argparse.ArgumentParser(prog="cdispersion", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, ck], help="greedy 2c-approximation")
    p.add_argument("instance")
    p.add_argument("--out", help="write the solution file here")
    p.add_argument("--trace", action="store_true", help="include step lines")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", parents=[common, ck], help="brute-force optimum and ball report")
    p.add_argument("instance")
    p.add_argument("--out", help="write the solution file here")
    p.add_argument("--balls", help="write the ball report here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("reduce", parents=[common], help="graph -> c-dispersion instance")
    p.add_argument("graph", help="dispersion-graph v1 or DIMACS edge file")
    p.add_argument("--out", help="instance file (default stdout)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("decide", parents=[common, ck],
                       help="is there a k-subset of cost 2c? exit 0 if yes, 1 if no")
    p.add_argument("instance")
    p.add_argument("--bound", type=float, default=None,
                   help="decide cost >= BOUND instead (any instance)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--box", type=float, nargs=4, default=list(UNIT_BOX),
                   metavar=("XMIN", "YMIN", "XMAX", "YMAX"))
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--out", help="instance file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", parents=[common], help="validate metric axioms")
    p.add_argument("instance")
    p.add_argument("--tol", type=float, default=None,
                   help="triangle tolerance (default 1e-9 x max distance)")
    p.add_argument("--show", type=int, default=20, help="violations to list")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", parents=[common], help="ratio suite or greedy phase timing")
    p.add_argument("--count", type=int, default=200, help="number of suite cases")
    p.add_argument("--out", help="TSV report path (default stdout)")
    p.add_argument("--timing", action="store_true", help="time greedy phases on one instance")
    p.add_argument("--kind", choices=KINDS, default="euclidean_uniform")
    p.add_argument("--n", type=int, default=60)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        sys.stderr.write("--threads must be >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget: {exc}\n")
        return EXIT_BUDGET
    except (InvalidParams, InstanceTooSmall, OSError) as exc:
        sys.stderr.write(f"usage: {exc}\n")
        return EXIT_USAGE
    except DispersionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FALSE
    except ValueError as exc:
        sys.stderr.write(f"usage: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
