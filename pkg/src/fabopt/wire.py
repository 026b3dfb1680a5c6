"""JSON-dict codecs for the domain types.

One shared path: the instance files on disk, the CLI's JSON output and
the HTTP service all use these functions, so their bodies are identical
byte-for-byte given identical inputs. Rationals always travel as
{"num": int, "den": int}, never as floats.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError
from .model import (Assignment, Card, Instance, Lambda, Role, Solution, Totals)

CARD_FIELDS = ("attack", "pitch_cost", "pitch_resource", "defense")


def _require_int(data: dict, field: str, path: str, *, minimum: int | None = None) -> int:
    value = data.get(field)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{path}{field}", f"must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ValidationError(f"{path}{field}", f"must be >= {minimum}, got {value}")
    return value


def lambda_to_dict(lam: Lambda) -> dict:
    return {"num": lam.num, "den": lam.den}


def lambda_from_dict(data, path: str = "lambda") -> Lambda:
    if not isinstance(data, dict):
        raise ValidationError(path, f"must be an object {{num, den}}, got {data!r}")
    num = _require_int(data, "num", f"{path}.", minimum=0)
    den = _require_int(data, "den", f"{path}.")
    if den < 1:
        raise ValidationError(f"{path}.den", f"must be >= 1, got {den}")
    return Lambda(num, den)


def card_to_dict(card: Card) -> dict:
    return {"name": card.name, "attack": card.attack, "pitch_cost": card.pitch_cost,
            "pitch_resource": card.pitch_resource, "defense": card.defense}


def card_from_dict(data, path: str = "card") -> Card:
    if not isinstance(data, dict):
        raise ValidationError(path, "must be an object")
    name = data.get("name")
    if not isinstance(name, str) or not name.strip():
        raise ValidationError(f"{path}.name", "must be a non-empty string")
    values = {field: _require_int(data, field, f"{path}.", minimum=0)
              for field in CARD_FIELDS}
    return Card(name=name, **values)


def instance_to_dict(instance: Instance) -> dict:
    return {"cards": [card_to_dict(c) for c in instance.cards],
            "lambda": lambda_to_dict(instance.lam),
            "initial_resources": instance.initial_resources}


def instance_from_dict(data, path: str = "") -> Instance:
    prefix = f"{path}." if path else ""
    if not isinstance(data, dict):
        raise ValidationError(path, "instance must be a JSON object")
    cards_raw = data.get("cards")
    if not isinstance(cards_raw, list):
        raise ValidationError(f"{prefix}cards", "must be a list")
    cards = tuple(card_from_dict(entry, f"{prefix}cards[{i}]")
                  for i, entry in enumerate(cards_raw))
    lam = lambda_from_dict(data.get("lambda", {"num": 0, "den": 1}), f"{prefix}lambda")
    pool = 0
    if "initial_resources" in data:
        pool = _require_int(data, "initial_resources", prefix, minimum=0)
    return Instance(cards=cards, lam=lam, initial_resources=pool)


def objective_to_dict(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def totals_to_dict(totals: Totals) -> dict:
    return {"attack_total": totals.attack_total,
            "pitch_cost_total": totals.pitch_cost_total,
            "resources_generated": totals.resources_generated,
            "defense_retained": totals.defense_retained,
            "defense_lost": totals.defense_lost}


def assignment_to_list(assignment: Assignment) -> list[str]:
    return [role.wire for role in assignment]


def assignment_from_list(data, path: str = "assignment") -> Assignment:
    if not isinstance(data, list):
        raise ValidationError(path, "must be a list of roles")
    roles = []
    for i, entry in enumerate(data):
        try:
            roles.append(Role.from_wire(entry))
        except (ValueError, AttributeError):
            raise ValidationError(f"{path}[{i}]",
                                  f"must be one of attack/pitch/defend, got {entry!r}") from None
    return Assignment(tuple(roles))


def solution_to_dict(solution: Solution) -> dict:
    return {"assignment": assignment_to_list(solution.assignment),
            "objective": objective_to_dict(solution.objective),
            "totals": totals_to_dict(solution.totals),
            "solver_name": solution.solver_name}
