"""Penalty-factor sweeps: re-solve one hand across a grid of factors.

The two named playstyles are the endpoints: factor 0 is pure damage
maximization, factor 1 weighs lost defense equally against damage.
Optimal objectives are non-increasing in the factor (pointwise domination
over a fixed feasible set); the sweep asserts that after solving.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .model import Assignment, Instance, Lambda, ObjectiveValue, Totals
from .solvers import SolverReport, solve_auto
from .wire import (assignment_to_list, lambda_to_dict, objective_to_dict,
                   totals_to_dict)


@dataclass(frozen=True)
class SweepPoint:
    lam: Lambda
    objective: ObjectiveValue
    totals: Totals
    assignment: Assignment


@dataclass(frozen=True)
class SweepResult:
    points: tuple[SweepPoint, ...]


def with_lambda(instance: Instance, lam: Lambda) -> Instance:
    """Same hand and pool, different penalty factor."""
    return replace(instance, lam=lam)


def run_sweep(instance: Instance, lambdas: list[Lambda],
              solver=solve_auto) -> SweepResult:
    """One solve per factor, sorted ascending. The post-hoc monotonicity
    self-check should never fire; if it does, a solver is broken."""
    ordered = sorted(lambdas, key=lambda lam: lam.as_fraction)
    points = []
    for lam in ordered:
        report: SolverReport = solver(with_lambda(instance, lam))
        solution = report.solution
        points.append(SweepPoint(lam=lam, objective=solution.objective,
                                 totals=solution.totals,
                                 assignment=solution.assignment))
    for earlier, later in zip(points, points[1:]):
        if earlier.objective < later.objective:
            raise RuntimeError(
                f"objective increased from factor {earlier.lam} to {later.lam}: "
                f"{earlier.objective} < {later.objective}; solver bug")
    return SweepResult(points=tuple(points))


def sweep_to_dict(result: SweepResult) -> dict:
    return {"points": [{"lambda": lambda_to_dict(point.lam),
                        "objective": objective_to_dict(point.objective),
                        "totals": totals_to_dict(point.totals),
                        "assignment": assignment_to_list(point.assignment)}
                       for point in result.points]}
