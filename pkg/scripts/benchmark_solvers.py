#!/usr/bin/env python3
"""Compare solver work and wall time as the hand size grows.

Brute force enumerates 3^n assignments, so it is only run up to the
enumeration cap; the DP's work tracks the resource-sum width and the
branch-and-bound's node count depends on how early the bound closes
branches.

Usage: python scripts/benchmark_solvers.py [--max-n 14] [--per-n 5]
"""
import argparse

from fabopt import (GeneratorConfig, Lambda, generate, solve_branch_and_bound,
                    solve_brute_force, solve_dp)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--per-n", type=int, default=5)
    parser.add_argument("--lambda", dest="lam", default="1/2")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    lam = Lambda.parse(args.lam)

    print(f"{args.per_n} instances per size, lambda={lam}")
    print(f"{'n':>3}  {'brute nodes':>12} {'brute ms':>9}  "
          f"{'dp states':>10} {'dp ms':>7}  {'bb nodes':>9} {'bb ms':>7}")
    for n in range(2, args.max_n + 1):
        rows = {"brute": [0, 0.0], "dp": [0, 0.0], "bb": [0, 0.0]}
        for k in range(args.per_n):
            instance = generate(GeneratorConfig(
                n=n, seed=args.seed + 1000 * n + k, lam=lam,
                correlation="cost-correlated"))
            runs = {"dp": solve_dp(instance), "bb": solve_branch_and_bound(instance)}
            if n <= 12:
                runs["brute"] = solve_brute_force(instance)
            values = {name: r.solution.objective for name, r in runs.items()}
            assert len(set(values.values())) == 1, (instance, values)
            for name, report in runs.items():
                rows[name][0] += report.nodes_or_states_explored
                rows[name][1] += report.wall_time * 1000
        brute = f"{rows['brute'][0]:>12} {rows['brute'][1]:>9.2f}" if n <= 12 \
            else f"{'-':>12} {'-':>9}"
        print(f"{n:>3}  {brute}  {rows['dp'][0]:>10} {rows['dp'][1]:>7.2f}  "
              f"{rows['bb'][0]:>9} {rows['bb'][1]:>7.2f}")


if __name__ == "__main__":
    main()
