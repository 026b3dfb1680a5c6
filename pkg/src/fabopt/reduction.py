"""0-1 knapsack to card-game reduction and its verification.

Every knapsack item becomes a card with attack = item value, play cost =
item weight, no pitch resource and no defense; one extra "Energy Potion"
card carries the knapsack capacity as its pitch resource. With penalty
factor 0, choosing which cards to attack with is exactly choosing which
items to pack, so the two optima are equal. An independent textbook
knapsack DP provides the second oracle for verifying that equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import CapExceededError, ContractViolationError, ParseError, ValidationError
from .model import Card, Instance, Lambda, Role, Solution, is_feasible
from .solvers import SolverReport, solve_dp

CAPACITY_CARD_NAME = "Energy Potion"
DEFAULT_KP_TABLE_CAP = 10_000_000


@dataclass(frozen=True)
class KnapsackItem:
    value: int
    weight: int

    def __post_init__(self):
        if self.value < 0 or self.weight < 0:
            raise ValueError(f"knapsack item must have value, weight >= 0, "
                             f"got ({self.value}, {self.weight})")


@dataclass(frozen=True)
class KnapsackInstance:
    items: tuple[KnapsackItem, ...]
    capacity: int

    def __post_init__(self):
        if not isinstance(self.items, tuple):
            object.__setattr__(self, "items", tuple(self.items))
        if self.capacity < 0:
            raise ValueError(f"capacity must be >= 0, got {self.capacity}")


@dataclass(frozen=True)
class KnapsackSolution:
    selected: tuple[int, ...]
    total_value: int


def kp_to_fab(kp: KnapsackInstance, *, capacity_as_pool: bool = False) -> Instance:
    """Map a knapsack instance to a penalty-0 card instance.

    Default encoding: one card per item (attack=value, cost=weight, no
    resource, no defense) plus the capacity card appended last, with
    pitch resource = capacity and an empty pool. The alternative
    ``capacity_as_pool`` encoding drops the capacity card and puts the
    capacity in the exogenous pool instead; both yield equal optima.
    """
    cards = [Card(name=f"Item {j + 1}", attack=item.value, pitch_cost=item.weight,
                  pitch_resource=0, defense=0)
             for j, item in enumerate(kp.items)]
    if capacity_as_pool:
        return Instance(cards=tuple(cards), lam=Lambda(0),
                        initial_resources=kp.capacity)
    cards.append(Card(name=CAPACITY_CARD_NAME, attack=0, pitch_cost=0,
                      pitch_resource=kp.capacity, defense=0))
    return Instance(cards=tuple(cards), lam=Lambda(0), initial_resources=0)


def fab_to_kp_solution(kp: KnapsackInstance, fab_solution: Solution) -> KnapsackSolution:
    """Map a solution of the reduced instance back to a knapsack solution.

    Item cards assigned attack are the packed items. The capacity card is
    dropped from the mapping if present (it contributes no value and no
    weight). Accepts solutions for either capacity encoding, recognized
    by assignment length.
    """
    n_items = len(kp.items)
    length = len(fab_solution.assignment)
    if length == n_items + 1:
        instance = kp_to_fab(kp)
    elif length == n_items:
        instance = kp_to_fab(kp, capacity_as_pool=True)
    else:
        raise ContractViolationError(
            f"assignment length {length} matches neither {n_items + 1} "
            f"(capacity-card encoding) nor {n_items} (pool encoding)")
    if not is_feasible(instance, fab_solution.assignment):
        raise ContractViolationError("solution is infeasible for the reduced instance")
    selected = tuple(j for j in range(n_items)
                     if fab_solution.assignment[j] is Role.ATTACK)
    total_value = sum(kp.items[j].value for j in selected)
    return KnapsackSolution(selected=selected, total_value=total_value)


def solve_knapsack_dp(kp: KnapsackInstance, *,
                      cap: int = DEFAULT_KP_TABLE_CAP) -> KnapsackSolution:
    """Independent oracle: the textbook O(items x capacity) value table.

    Deliberately shares no code with the card-game solvers so the
    reduction can be verified through two separate routes.
    """
    n = len(kp.items)
    capacity = kp.capacity
    required = (n + 1) * (capacity + 1)
    if required > cap:
        raise CapExceededError(
            f"knapsack table needs {required} cells, exceeding cap {cap}",
            cap=cap, required=required)
    table = [[0] * (capacity + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        item = kp.items[i - 1]
        row, above = table[i], table[i - 1]
        for w in range(capacity + 1):
            best = above[w]
            if item.weight <= w:
                with_item = above[w - item.weight] + item.value
                if with_item > best:
                    best = with_item
            row[w] = best
    selected = []
    w = capacity
    for i in range(n, 0, -1):
        if table[i][w] != table[i - 1][w]:
            selected.append(i - 1)
            w -= kp.items[i - 1].weight
    selected.reverse()
    return KnapsackSolution(selected=tuple(selected), total_value=table[n][capacity])


def verify_reduction(kp: KnapsackInstance, *, fab_solver=solve_dp,
                     capacity_as_pool: bool = False) -> bool:
    """True iff the knapsack optimum equals the reduced instance's optimum.

    The knapsack side uses the independent DP above; the card-game side
    may use any exact solver (default: the resource-balance DP).
    """
    kp_value = solve_knapsack_dp(kp).total_value
    report: SolverReport = fab_solver(kp_to_fab(kp, capacity_as_pool=capacity_as_pool))
    return report.solution.objective == kp_value


# --- JSON wire format: {"items":[{"value":int,"weight":int},...],"capacity":int}

def kp_to_dict(kp: KnapsackInstance) -> dict:
    return {"items": [{"value": it.value, "weight": it.weight} for it in kp.items],
            "capacity": kp.capacity}


def kp_from_dict(data: dict) -> KnapsackInstance:
    if not isinstance(data, dict):
        raise ValidationError("", "knapsack instance must be a JSON object")
    items_raw = data.get("items")
    if not isinstance(items_raw, list):
        raise ValidationError("items", "must be a list")
    items = []
    for j, entry in enumerate(items_raw):
        path = f"items[{j}]"
        if not isinstance(entry, dict):
            raise ValidationError(path, "must be an object")
        for field in ("value", "weight"):
            v = entry.get(field)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"{path}.{field}", "must be an integer")
            if v < 0:
                raise ValidationError(f"{path}.{field}", f"must be >= 0, got {v}")
        items.append(KnapsackItem(value=entry["value"], weight=entry["weight"]))
    capacity = data.get("capacity")
    if not isinstance(capacity, int) or isinstance(capacity, bool):
        raise ValidationError("capacity", "must be an integer")
    if capacity < 0:
        raise ValidationError("capacity", f"must be >= 0, got {capacity}")
    return KnapsackInstance(items=tuple(items), capacity=capacity)


def load_knapsack(path: str | Path) -> KnapsackInstance:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from None
    return kp_from_dict(data)


def save_knapsack(kp: KnapsackInstance, path: str | Path) -> None:
    Path(path).write_text(json.dumps(kp_to_dict(kp), indent=2) + "\n",
                          encoding="utf-8")
