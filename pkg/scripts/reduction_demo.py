#!/usr/bin/env python3
"""Walk one knapsack instance through the reduction and back.

Builds a random knapsack, maps it to a hand (one card per item plus the
capacity card), solves both sides with independent algorithms, and maps
the card solution back to a packing.
"""
import argparse
import random

from fabopt import (KnapsackInstance, KnapsackItem, fab_to_kp_solution,
                    kp_to_fab, solve_dp, solve_knapsack_dp)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--items", type=int, default=8)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    items = tuple(KnapsackItem(rng.randint(1, 20), rng.randint(1, 20))
                  for _ in range(args.items))
    capacity = rng.randint(1, sum(it.weight for it in items))
    kp = KnapsackInstance(items, capacity)

    print(f"knapsack: {args.items} items, capacity {capacity}")
    for j, it in enumerate(items):
        print(f"  item {j}: value {it.value:>2}, weight {it.weight:>2}")

    kp_solution = solve_knapsack_dp(kp)
    print(f"\nknapsack DP optimum: {kp_solution.total_value} "
          f"(items {list(kp_solution.selected)})")

    instance = kp_to_fab(kp)
    report = solve_dp(instance)
    print(f"reduced {instance.n}-card instance optimum: "
          f"{report.solution.objective} "
          f"[{report.nodes_or_states_explored} states]")

    mapped = fab_to_kp_solution(kp, report.solution)
    weight = sum(items[j].weight for j in mapped.selected)
    print(f"mapped back: items {list(mapped.selected)}, value {mapped.total_value}, "
          f"weight {weight} <= {capacity}")
    assert mapped.total_value == kp_solution.total_value == report.solution.objective
    print("optima agree on both sides")


if __name__ == "__main__":
    main()
