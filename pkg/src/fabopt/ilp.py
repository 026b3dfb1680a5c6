"""Explicit 0-1 integer program for an instance, and LP-format export.

Variables per card i: x_i (attack), y_i (pitch), z_i (defend). One
exclusivity row per card plus a single resource row. Objective
coefficients are scaled by lambda's denominator q so everything stays
integer: maximizing q*Z selects the same assignments as maximizing Z.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import Assignment, Instance, Role


@dataclass(frozen=True)
class LinearTerm:
    var: str
    coeff: int


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[LinearTerm, ...]
    sense: str  # "=" or "<="
    rhs: int


@dataclass(frozen=True)
class IlpModel:
    objective: tuple[LinearTerm, ...]
    constraints: tuple[Constraint, ...]
    binaries: tuple[str, ...]

    @property
    def variable_count(self) -> int:
        return len(self.binaries)

    def objective_at(self, point: dict[str, int]) -> int:
        return sum(term.coeff * point.get(term.var, 0) for term in self.objective)

    def is_satisfied(self, point: dict[str, int]) -> bool:
        if any(point.get(var, 0) not in (0, 1) for var in self.binaries):
            return False
        for constraint in self.constraints:
            lhs = sum(term.coeff * point.get(term.var, 0) for term in constraint.terms)
            if constraint.sense == "=":
                if lhs != constraint.rhs:
                    return False
            elif lhs > constraint.rhs:
                return False
        return True


def build_model(instance: Instance) -> IlpModel:
    """Construct the exact 0-1 program: 3n binaries, n exclusivity rows
    and one resource row. Objective: (q*a_i - p*d_i) on x_i and -p*d_i on
    y_i, where the penalty factor is p/q. Zero coefficients are omitted
    from expressions (but every variable appears in its exclusivity row)."""
    p, q = instance.lam.num, instance.lam.den
    objective: list[LinearTerm] = []
    resource_terms: list[LinearTerm] = []
    constraints: list[Constraint] = []
    binaries: list[str] = []
    for i, card in enumerate(instance.cards, start=1):
        x, y, z = f"x{i}", f"y{i}", f"z{i}"
        binaries += [x, y, z]
        x_coeff = q * card.attack - p * card.defense
        y_coeff = -p * card.defense
        if x_coeff:
            objective.append(LinearTerm(x, x_coeff))
        if y_coeff:
            objective.append(LinearTerm(y, y_coeff))
        constraints.append(Constraint(
            name=f"excl{i}",
            terms=(LinearTerm(x, 1), LinearTerm(y, 1), LinearTerm(z, 1)),
            sense="=", rhs=1))
        if card.pitch_cost:
            resource_terms.append(LinearTerm(x, card.pitch_cost))
        if card.pitch_resource:
            resource_terms.append(LinearTerm(y, -card.pitch_resource))
    constraints.append(Constraint(name="resource", terms=tuple(resource_terms),
                                  sense="<=", rhs=instance.initial_resources))
    return IlpModel(objective=tuple(objective), constraints=tuple(constraints),
                    binaries=tuple(binaries))


def _format_expression(terms: tuple[LinearTerm, ...]) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for k, term in enumerate(terms):
        magnitude = abs(term.coeff)
        body = term.var if magnitude == 1 else f"{magnitude} {term.var}"
        if k == 0:
            parts.append(body if term.coeff > 0 else f"- {body}")
        else:
            parts.append(f"{'+' if term.coeff > 0 else '-'} {body}")
    return " ".join(parts)


def export_lp(model: IlpModel) -> str:
    """LP-format text with Maximize / Subject To / Binary sections.

    Output is deterministic: variables ordered by card index then letter,
    exclusivity rows before the resource row, one binary per line.
    """
    lines = ["Maximize", f" obj: {_format_expression(model.objective)}", "Subject To"]
    for constraint in model.constraints:
        expr = _format_expression(constraint.terms)
        lines.append(f" {constraint.name}: {expr} {constraint.sense} {constraint.rhs}")
    lines.append("Binary")
    for var in model.binaries:
        lines.append(f" {var}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def assignment_to_point(assignment: Assignment) -> dict[str, int]:
    """0/1 point for an assignment: exactly one of x_i, y_i, z_i set per card."""
    point: dict[str, int] = {}
    for i, role in enumerate(assignment, start=1):
        point[f"x{i}"] = 1 if role is Role.ATTACK else 0
        point[f"y{i}"] = 1 if role is Role.PITCH else 0
        point[f"z{i}"] = 1 if role is Role.DEFEND else 0
    return point


def point_to_assignment(point: dict[str, int], n: int) -> Assignment:
    """Inverse of assignment_to_point for a feasible 0/1 point."""
    roles = []
    for i in range(1, n + 1):
        trio = (point.get(f"x{i}", 0), point.get(f"y{i}", 0), point.get(f"z{i}", 0))
        if sum(trio) != 1:
            raise ValueError(f"point violates exclusivity for card {i}: {trio}")
        roles.append((Role.ATTACK, Role.PITCH, Role.DEFEND)[trio.index(1)])
    return Assignment(tuple(roles))
