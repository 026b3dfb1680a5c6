"""fabopt: exact single-turn card-role optimization.

Partition a hand of cards into attack / pitch / defend roles to maximize
total attack minus a rational penalty on forfeited defense, with three
exact solvers, a 0-1 knapsack reduction, LP export, a CLI and a JSON API.
"""
from .errors import (CapExceededError, ContractViolationError, FabError,
                     ParseError, UnknownCardError, ValidationError)
from .model import (Assignment, Card, Instance, Lambda, ObjectiveValue, Role,
                    Solution, Totals, compute_totals, evaluate, is_feasible)
from .solvers import (SolverReport, get_solver, solve_aggro, solve_auto,
                      solve_branch_and_bound, solve_brute_force, solve_dp,
                      solve_midrange)
from .reduction import (KnapsackInstance, KnapsackItem, KnapsackSolution,
                        fab_to_kp_solution, kp_to_fab, solve_knapsack_dp,
                        verify_reduction)
from .instances import (CardCatalog, GeneratorConfig, SplitMix64,
                        build_instance_from_names, generate, load_catalog,
                        load_instance, save_instance)
from .ilp import IlpModel, build_model, export_lp
from .sweep import SweepPoint, SweepResult, run_sweep

__version__ = "0.1.0"

__all__ = [
    "Assignment", "Card", "CardCatalog", "CapExceededError",
    "ContractViolationError", "FabError", "GeneratorConfig", "IlpModel",
    "Instance", "KnapsackInstance", "KnapsackItem", "KnapsackSolution",
    "Lambda", "ObjectiveValue", "ParseError", "Role", "Solution",
    "SolverReport", "SplitMix64", "SweepPoint", "SweepResult", "Totals",
    "UnknownCardError", "ValidationError", "build_instance_from_names",
    "build_model", "compute_totals", "evaluate", "export_lp",
    "fab_to_kp_solution", "generate", "get_solver", "is_feasible",
    "kp_to_fab", "load_catalog", "load_instance", "run_sweep",
    "save_instance", "solve_aggro", "solve_auto", "solve_branch_and_bound",
    "solve_brute_force", "solve_dp", "solve_knapsack_dp", "solve_midrange",
    "verify_reduction",
]
