#!/usr/bin/env python3
"""Trace how a hand's optimal play shifts as the defense penalty grows.

At factor 0 the solver attacks with everything it can pay for; as the
factor rises, keeping high-defense cards in hand becomes worth more than
the damage they would add. Prints the attack/defense trade-off per grid
point, with the minimum defense lost among optima (brute force with a
secondary objective).
"""
import argparse

from fabopt import GeneratorConfig, Instance, Lambda, generate, solve_brute_force


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--seed", type=int, default=3)
    parser.add_argument("--grid", default="0,1/4,1/2,3/4,1,3/2,2")
    args = parser.parse_args()

    base = generate(GeneratorConfig(n=args.n, seed=args.seed))
    print(f"hand (seed {args.seed}):")
    for card in base.cards:
        print(f"  {card.name}: a={card.attack} t={card.pitch_cost} "
              f"r={card.pitch_resource} d={card.defense}")
    print(f"\n{'factor':>7}  {'Z':>6}  {'attack':>6}  {'kept':>4}  {'lost*':>5}  roles")
    for text in args.grid.split(","):
        lam = Lambda.parse(text)
        report = solve_brute_force(Instance(base.cards, lam),
                                   minimize_defense_lost=True)
        totals = report.solution.totals
        roles = "".join("APD"[r] for r in report.solution.assignment)
        z = report.solution.objective
        z_text = f"{z.numerator}/{z.denominator}" if z.denominator != 1 else str(z.numerator)
        print(f"{str(lam):>7}  {z_text:>6}  {totals.attack_total:>6}  "
              f"{totals.defense_retained:>4}  {totals.defense_lost:>5}  {roles}")
    print("\n* minimum defense lost among optimal assignments at that factor")


if __name__ == "__main__":
    main()
