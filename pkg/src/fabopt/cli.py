"""Command-line front door: solve, sweep, reduce, verify, gen, export-lp,
bench, serve. All JSON the CLI prints is produced by the same codecs as
the HTTP service, so the two agree byte-for-byte."""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .errors import (CapExceededError, ContractViolationError, FabError,
                     ParseError, UnknownCardError, ValidationError)
from .instances import (CORRELATIONS, GeneratorConfig, generate,
                        instance_to_json, load_instance, save_instance)
from .ilp import build_model, export_lp
from .model import Instance, Lambda, Solution
from .reduction import kp_to_fab, load_knapsack, solve_knapsack_dp, verify_reduction
from .solvers import SOLVERS, SolverReport, get_solver
from .sweep import run_sweep, sweep_to_dict, with_lambda
from .wire import solution_to_dict

CATALOG_ENV_VAR = "FABOPT_CATALOG"


def _fmt_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_lambda_arg(text: str) -> Lambda:
    try:
        return Lambda.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_instance_for(args) -> Instance:
    instance = load_instance(args.instance)
    if getattr(args, "lam", None) is not None:
        instance = with_lambda(instance, args.lam)
    return instance


def _print_solution(instance: Instance, report: SolverReport) -> None:
    solution: Solution = report.solution
    if instance.cards:
        width = max(len(card.name) for card in instance.cards)
        print(f"  # {'card'.ljust(width)}   a   t   r   d  role")
        for i, (card, role) in enumerate(zip(instance.cards, solution.assignment), 1):
            print(f"{i:>3} {card.name.ljust(width)} {card.attack:>3} "
                  f"{card.pitch_cost:>3} {card.pitch_resource:>3} "
                  f"{card.defense:>3}  {role.wire}")
    else:
        print("(empty hand)")
    totals = solution.totals
    print(f"attack {totals.attack_total}, cost {totals.pitch_cost_total}, "
          f"resources {totals.resources_generated} (pool {instance.initial_resources})")
    print(f"defense retained {totals.defense_retained}, lost {totals.defense_lost}")
    z = solution.objective
    print(f"Z = {_fmt_fraction(z)} (decimal {float(z):.6g})  "
          f"[{solution.solver_name}, {report.nodes_or_states_explored} "
          f"nodes/states, {report.wall_time * 1000:.2f} ms]")


def cmd_solve(args) -> int:
    instance = _load_instance_for(args)
    report = get_solver(args.solver)(instance)
    if args.json:
        print(json.dumps(solution_to_dict(report.solution), indent=2))
    else:
        _print_solution(instance, report)
    return 0


def cmd_sweep(args) -> int:
    instance = load_instance(args.instance)
    lambdas = [Lambda.parse(part) for part in args.lambdas.split(",") if part.strip()]
    if not lambdas:
        raise ValidationError("lambdas", "need at least one penalty factor")
    result = run_sweep(instance, lambdas, solver=get_solver(args.solver))
    if args.json:
        print(json.dumps(sweep_to_dict(result), indent=2))
        return 0
    print("lambda     Z          A  retained  lost  roles")
    for point in result.points:
        roles = "".join("APD"[role] for role in point.assignment)
        print(f"{str(point.lam):<9}  {_fmt_fraction(point.objective):<9} "
              f"{point.totals.attack_total:>3} {point.totals.defense_retained:>9} "
              f"{point.totals.defense_lost:>5}  {roles}")
    return 0


def cmd_reduce(args) -> int:
    kp = load_knapsack(args.kp)
    instance = kp_to_fab(kp, capacity_as_pool=args.pool_encoding)
    text = instance_to_json(instance)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {len(instance.cards)}-card instance to {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_verify(args) -> int:
    kp = load_knapsack(args.kp)
    kp_value = solve_knapsack_dp(kp).total_value
    report = get_solver(args.solver)(kp_to_fab(kp))
    fab_value = report.solution.objective
    ok = verify_reduction(kp, fab_solver=get_solver(args.solver))
    print(f"knapsack optimum {kp_value}, reduced-instance optimum "
          f"{_fmt_fraction(fab_value)}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_gen(args) -> int:
    config = GeneratorConfig(n=args.n, max_attack=args.max_attack,
                             max_cost=args.max_cost, max_resource=args.max_resource,
                             max_defense=args.max_defense, correlation=args.correlation,
                             seed=args.seed, lam=args.lam or Lambda(0),
                             initial_resources=args.rho0)
    instance = generate(config)
    if args.out:
        save_instance(instance, args.out)
        print(f"wrote {instance.n}-card instance (seed {args.seed}) to {args.out}")
    else:
        print(instance_to_json(instance), end="")
    return 0


def cmd_export_lp(args) -> int:
    instance = _load_instance_for(args)
    text = export_lp(build_model(instance))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote LP model ({3 * instance.n} binaries, "
              f"{instance.n + 1} constraints) to {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_bench(args) -> int:
    solver_names = [name.strip() for name in args.solvers.split(",") if name.strip()]
    for name in solver_names:
        get_solver(name)  # fail fast on typos
    rows = []
    for k in range(args.count):
        config = GeneratorConfig(n=args.n, seed=args.seed + k,
                                 correlation=args.correlation,
                                 lam=args.lam or Lambda(0))
        instance = generate(config)
        for name in solver_names:
            report = get_solver(name)(instance)
            rows.append({"solver": name, "seed": config.seed, "n": args.n,
                         "objective": _fmt_fraction(report.solution.objective),
                         "explored": report.nodes_or_states_explored,
                         "time_s": report.wall_time})
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{args.count} instances, n={args.n}, lambda={args.lam or Lambda(0)}")
    print("solver   total_time_s  mean_time_s  total_explored")
    for name in solver_names:
        mine = [row for row in rows if row["solver"] == name]
        total = sum(row["time_s"] for row in mine)
        explored = sum(row["explored"] for row in mine)
        print(f"{name:<8} {total:>12.4f} {total / len(mine):>12.4f} {explored:>15}")
    return 0


def cmd_serve(args) -> int:
    from .service import run  # lazy: uvicorn startup is not needed elsewhere

    run(port=args.port, host=args.host, catalog_path=args.catalog,
        frontend_dir=args.frontend)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fabopt",
        description="Exact single-turn card-role optimization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_arg(p):
        p.add_argument("--instance", required=True, help="instance JSON file")

    p = sub.add_parser("solve", help="solve one instance")
    add_instance_arg(p)
    p.add_argument("--solver", choices=sorted(SOLVERS), default="auto")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda_arg, default=None,
                   metavar="P/Q", help="override the instance's penalty factor")
    p.add_argument("--json", action="store_true", help="emit solution JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="solve across a penalty-factor grid")
    add_instance_arg(p)
    p.add_argument("--lambdas", default="0,1/4,1/2,3/4,1",
                   help="comma-separated factors, e.g. 0,1/2,1")
    p.add_argument("--solver", choices=sorted(SOLVERS), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reduce", help="map a knapsack instance to a card instance")
    p.add_argument("--kp", required=True, help="knapsack JSON file")
    p.add_argument("--out", help="output instance file (default stdout)")
    p.add_argument("--pool-encoding", action="store_true",
                   help="encode capacity as the resource pool instead of a capacity card")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check knapsack optimum == reduced optimum")
    p.add_argument("--kp", required=True)
    p.add_argument("--solver", choices=sorted(SOLVERS), default="dp")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attack", type=int, default=9)
    p.add_argument("--max-cost", type=int, default=9)
    p.add_argument("--max-resource", type=int, default=9)
    p.add_argument("--max-defense", type=int, default=9)
    p.add_argument("--correlation", choices=CORRELATIONS, default="uncorrelated")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda_arg, default=None,
                   metavar="P/Q")
    p.add_argument("--rho0", type=int, default=0, help="exogenous resource pool")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-lp", help="export the 0-1 program in LP format")
    add_instance_arg(p)
    p.add_argument("--lambda", dest="lam", type=_parse_lambda_arg, default=None,
                   metavar="P/Q")
    p.add_argument("--out", help="output .lp file (default stdout)")
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("bench", help="time the solvers on a generated suite")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solvers", default="dp,bb")
    p.add_argument("--correlation", choices=CORRELATIONS, default="uncorrelated")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda_arg, default=None,
                   metavar="P/Q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--catalog", default=os.environ.get(CATALOG_ENV_VAR),
                   help=f"card catalog CSV (default ${CATALOG_ENV_VAR})")
    p.add_argument("--frontend", default=None,
                   help="directory of static frontend files to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, ParseError, ContractViolationError,
            UnknownCardError, FabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
