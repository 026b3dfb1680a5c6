"""Three exact solvers returning value-identical optima.

* brute force -- ground-truth enumeration of all 3^n role vectors,
  canonical tie-breaking, optional secondary objective;
* dynamic programming -- pseudo-polynomial over the net resource balance;
* branch and bound -- depth-first with an admissible resource-free bound.

Objective arithmetic inside the DP and branch-and-bound inner loops uses
integers scaled by lambda's denominator q (a positive scaling, so the set
of optima is unchanged); final values are reduced back to lowest terms.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from time import perf_counter

from .errors import CapExceededError
from .model import (Assignment, Instance, Lambda, Role, Solution,
                    compute_totals, evaluate, is_feasible)

DEFAULT_ENUMERATION_CAP = 16
DEFAULT_DP_STATE_CAP = 10_000_000


@dataclass(frozen=True)
class SolverReport:
    """A solution plus how much work it took to find it."""

    solution: Solution
    nodes_or_states_explored: int
    wall_time: float  # seconds


def _finish(instance: Instance, roles: list[Role], solver_name: str,
            explored: int, start: float) -> SolverReport:
    assignment = Assignment(tuple(roles))
    solution = Solution(assignment=assignment,
                        objective=evaluate(instance, assignment),
                        totals=compute_totals(instance, assignment),
                        solver_name=solver_name)
    return SolverReport(solution=solution, nodes_or_states_explored=explored,
                        wall_time=perf_counter() - start)


def solve_brute_force(instance: Instance, *, cap: int = DEFAULT_ENUMERATION_CAP,
                      minimize_defense_lost: bool = False) -> SolverReport:
    """Exhaustive enumeration of all 3^n assignments; the ground-truth oracle.

    Returns the canonical optimum: among feasible assignments with maximal
    objective, the lexicographically smallest role vector under
    attack < pitch < defend, scanning cards in order. With
    ``minimize_defense_lost`` the tie-break first minimizes defense lost
    among optima (canonical order breaking remaining ties).
    """
    n = instance.n
    if n > cap:
        raise CapExceededError(
            f"brute force refuses n={n} > enumeration cap {cap}",
            cap=cap, required=n)
    start = perf_counter()
    p, q = instance.lam.num, instance.lam.den
    cards = instance.cards
    pool = instance.initial_resources

    roles: list[Role] = [Role.DEFEND] * n
    best_roles: list[Role] = []
    best_key: tuple | None = None
    leaves = 0

    def visit(i: int, cost: int, generated: int, value: int, lost: int) -> None:
        nonlocal best_key, best_roles, leaves
        if i == n:
            leaves += 1
            if cost <= pool + generated:
                key = (value, -lost) if minimize_defense_lost else (value,)
                if best_key is None or key > best_key:
                    best_key = key
                    best_roles = roles.copy()
            return
        card = cards[i]
        roles[i] = Role.ATTACK
        visit(i + 1, cost + card.pitch_cost, generated,
              value + q * card.attack - p * card.defense, lost + card.defense)
        roles[i] = Role.PITCH
        visit(i + 1, cost, generated + card.pitch_resource,
              value - p * card.defense, lost + card.defense)
        roles[i] = Role.DEFEND
        visit(i + 1, cost, generated, value, lost)

    visit(0, 0, 0, 0, 0)
    # all-defend is always feasible, so a best assignment always exists
    return _finish(instance, best_roles, "brute", leaves, start)


def solve_dp(instance: Instance, *, cap: int = DEFAULT_DP_STATE_CAP) -> SolverReport:
    """Pseudo-polynomial dynamic program over the net resource balance.

    The state after deciding a prefix is b = sum(costs of attacks) -
    sum(resources of pitches); play order inside a turn is irrelevant, so
    only the final balance matters. Transitions per card: attack
    (b += cost, value += q*attack - p*defense), pitch (b -= resource,
    value -= p*defense), defend (unchanged). The answer is the best value
    over final states with b <= pool.
    """
    n = instance.n
    pool = instance.initial_resources
    sum_t = sum(c.pitch_cost for c in instance.cards)
    sum_r = sum(c.pitch_resource for c in instance.cards)
    width = sum_t + sum_r + pool + 1
    required = width * (n + 1)
    if required > cap:
        raise CapExceededError(
            f"dp table needs {required} states (width {width} x {n + 1} layers), "
            f"exceeding cap {cap}", cap=cap, required=required)
    start = perf_counter()
    p, q = instance.lam.num, instance.lam.den

    layers: list[dict[int, int]] = [{0: 0}]
    for card in instance.cards:
        previous = layers[-1]
        current: dict[int, int] = {}
        attack_gain = q * card.attack - p * card.defense
        pitch_gain = -p * card.defense
        t, r = card.pitch_cost, card.pitch_resource
        for balance, value in previous.items():
            for nb, nv in ((balance + t, value + attack_gain),
                           (balance - r, value + pitch_gain),
                           (balance, value)):
                if current.get(nb, nv - 1) < nv:
                    current[nb] = nv
        layers.append(current)

    states = sum(len(layer) for layer in layers)
    final = layers[-1]
    best_balance, best_value = min(
        ((b, v) for b, v in final.items() if b <= pool),
        key=lambda item: (-item[1], item[0]))

    # walk the layers backwards, matching each card's three transitions
    roles: list[Role] = []
    balance, value = best_balance, best_value
    for i in range(n, 0, -1):
        card = instance.cards[i - 1]
        previous = layers[i - 1]
        attack_gain = q * card.attack - p * card.defense
        pitch_gain = -p * card.defense
        candidates = (
            (Role.ATTACK, balance - card.pitch_cost, value - attack_gain),
            (Role.PITCH, balance + card.pitch_resource, value - pitch_gain),
            (Role.DEFEND, balance, value),
        )
        for role, pb, pv in candidates:
            if previous.get(pb) == pv:
                roles.append(role)
                balance, value = pb, pv
                break
        else:  # pragma: no cover - table construction guarantees a parent
            raise AssertionError("dp backtrack found no predecessor state")
    roles.reverse()

    report = _finish(instance, roles, "dp", states, start)
    assert report.solution.objective == Fraction(best_value, q)
    return report


def solve_branch_and_bound(instance: Instance) -> SolverReport:
    """Depth-first branch and bound over cards sorted by descending attack.

    Upper bound for the undecided suffix: each card contributes at most
    max(q*attack - p*defense, 0) -- attack it if that helps, otherwise
    defend. This relaxes the resource constraint and never forces a pitch
    penalty, so it is admissible. A branch is also cut when the resources
    still obtainable from undecided cards cannot cover the cost already
    committed. Always terminates; worst case enumerates.
    """
    n = instance.n
    start = perf_counter()
    p, q = instance.lam.num, instance.lam.den
    pool = instance.initial_resources
    order = sorted(range(n), key=lambda i: (-instance.cards[i].attack, i))
    ordered = [instance.cards[i] for i in order]

    suffix_bound = [0] * (n + 1)
    suffix_resource = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        card = ordered[k]
        suffix_bound[k] = suffix_bound[k + 1] + max(q * card.attack - p * card.defense, 0)
        suffix_resource[k] = suffix_resource[k + 1] + card.pitch_resource

    roles: list[Role] = [Role.DEFEND] * n  # in original card order
    best_roles = roles.copy()              # all-defend incumbent, value 0
    best_value = 0
    nodes = 0

    def search(k: int, cost: int, available: int, value: int) -> None:
        nonlocal best_value, best_roles, nodes
        nodes += 1
        if cost > available + suffix_resource[k]:
            return
        if value + suffix_bound[k] <= best_value:
            return
        if k == n:
            best_value = value
            best_roles = roles.copy()
            return
        card = ordered[k]
        i = order[k]
        roles[i] = Role.ATTACK
        search(k + 1, cost + card.pitch_cost, available,
               value + q * card.attack - p * card.defense)
        roles[i] = Role.PITCH
        search(k + 1, cost, available + card.pitch_resource,
               value - p * card.defense)
        roles[i] = Role.DEFEND
        search(k + 1, cost, available, value)

    search(0, 0, pool, 0)
    return _finish(instance, best_roles, "bb", nodes, start)


def solve_auto(instance: Instance, *, dp_cap: int = DEFAULT_DP_STATE_CAP) -> SolverReport:
    """Default strategy: dynamic programming, falling back to branch and
    bound when the DP table cap would be exceeded. The solution's
    solver_name reports which one actually ran."""
    try:
        return solve_dp(instance, cap=dp_cap)
    except CapExceededError:
        return solve_branch_and_bound(instance)


def solve_aggro(instance: Instance, solver=solve_auto) -> SolverReport:
    """Pure damage maximization: the same code path with penalty factor 0."""
    return solver(replace(instance, lam=Lambda(0)))


def solve_midrange(instance: Instance, solver=solve_auto) -> SolverReport:
    """Attack and forfeited defense weighted equally: penalty factor 1."""
    return solver(replace(instance, lam=Lambda(1)))


SOLVERS = {
    "brute": solve_brute_force,
    "dp": solve_dp,
    "bb": solve_branch_and_bound,
    "auto": solve_auto,
}


def get_solver(name: str):
    try:
        return SOLVERS[name]
    except KeyError:
        raise ValueError(f"unknown solver {name!r}; expected one of "
                         f"{sorted(SOLVERS)}") from None
