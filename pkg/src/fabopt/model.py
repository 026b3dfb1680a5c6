"""Domain model for the single-turn card-role optimization problem.

A hand of cards is partitioned into three roles: attack (deal damage, pay a
resource cost), pitch (discard to generate resources), defend (keep in hand).
The objective rewards total attack and penalizes, with an exact rational
factor, the defense printed on every card that was attacked or pitched.

All types are immutable; all operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import gcd

from .errors import ContractViolationError

# Exact rational objective; lowest terms and exact comparisons come free.
ObjectiveValue = Fraction


class Role(IntEnum):
    """What a card is used for this turn. The numeric order (attack <
    pitch < defend) is the tie-breaking order used by the brute-force
    solver's canonical optimum."""

    ATTACK = 0
    PITCH = 1
    DEFEND = 2

    @property
    def wire(self) -> str:
        return self.name.lower()

    @classmethod
    def from_wire(cls, text: str) -> "Role":
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown role {text!r}; expected one of "
                             f"{[r.wire for r in cls]}") from None


@dataclass(frozen=True)
class Card:
    """One playable card: attack value, cost to play, resources generated
    when pitched, and defense value when kept in hand."""

    name: str
    attack: int
    pitch_cost: int
    pitch_resource: int
    defense: int

    def __post_init__(self):
        if not self.name.strip():
            raise ValueError("card name must be non-empty")
        for field in ("attack", "pitch_cost", "pitch_resource", "defense"):
            value = getattr(self, field)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"card {self.name!r}: {field} must be an integer")
            if value < 0:
                raise ValueError(f"card {self.name!r}: {field} must be >= 0, got {value}")


@dataclass(frozen=True)
class Lambda:
    """Exact non-negative rational penalty factor, kept in lowest terms.

    Never a float: tie detection between assignments and deterministic
    optima require exact arithmetic end to end.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        if not isinstance(self.num, int) or not isinstance(self.den, int):
            raise ValueError("lambda numerator/denominator must be integers")
        if self.den < 1:
            raise ValueError(f"lambda denominator must be >= 1, got {self.den}")
        if self.num < 0:
            raise ValueError(f"lambda must be >= 0, got {self.num}/{self.den}")
        g = gcd(self.num, self.den)
        if g > 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    @classmethod
    def parse(cls, text: str) -> "Lambda":
        """Parse 'p/q' or plain integer text, e.g. '1/2', '0', '3'."""
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]))
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"invalid lambda {text!r}: {exc}") from None
        raise ValueError(f"invalid lambda {text!r}: expected 'p' or 'p/q'")

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}" if self.den != 1 else str(self.num)


@dataclass(frozen=True)
class Instance:
    """A hand of cards plus the penalty factor and an optional exogenous
    resource pool. The unit of solving.

    ``initial_resources`` generalizes the pure "pay costs from pitches"
    reading: feasibility is sum(costs of attacks) <= pool + sum(pitches).
    The default pool of 0 is the plain game reading.
    """

    cards: tuple[Card, ...]
    lam: Lambda = Lambda(0)
    initial_resources: int = 0

    def __post_init__(self):
        if not isinstance(self.cards, tuple):
            object.__setattr__(self, "cards", tuple(self.cards))
        if not isinstance(self.initial_resources, int) or self.initial_resources < 0:
            raise ValueError(f"initial_resources must be an integer >= 0, "
                             f"got {self.initial_resources!r}")

    @property
    def n(self) -> int:
        return len(self.cards)

    @property
    def total_defense(self) -> int:
        return sum(c.defense for c in self.cards)


@dataclass(frozen=True)
class Assignment:
    """One role per card, in card order. Role exclusivity (each card used
    exactly once) is structural: there is no way to express anything else."""

    roles: tuple[Role, ...]

    def __post_init__(self):
        if not isinstance(self.roles, tuple):
            object.__setattr__(self, "roles", tuple(self.roles))

    @classmethod
    def from_letters(cls, letters: str) -> "Assignment":
        """Compact constructor from a string like 'APD' (attack/pitch/defend)."""
        mapping = {"A": Role.ATTACK, "P": Role.PITCH, "D": Role.DEFEND}
        return cls(tuple(mapping[ch] for ch in letters))

    def __len__(self) -> int:
        return len(self.roles)

    def __iter__(self):
        return iter(self.roles)

    def __getitem__(self, i):
        return self.roles[i]


@dataclass(frozen=True)
class Totals:
    """Aggregate sums induced by an assignment.

    Invariant: defense_retained + defense_lost equals the whole hand's
    printed defense.
    """

    attack_total: int
    pitch_cost_total: int
    resources_generated: int
    defense_retained: int
    defense_lost: int


@dataclass(frozen=True)
class Solution:
    """A feasible assignment together with its exact objective value and
    totals, labeled with the solver that produced it."""

    assignment: Assignment
    objective: ObjectiveValue
    totals: Totals
    solver_name: str


def _check_lengths(instance: Instance, assignment: Assignment) -> None:
    if len(assignment) != instance.n:
        raise ContractViolationError(
            f"assignment length {len(assignment)} does not match "
            f"instance card count {instance.n}")


def compute_totals(instance: Instance, assignment: Assignment) -> Totals:
    """All five aggregates for an assignment (feasible or not)."""
    _check_lengths(instance, assignment)
    attack = cost = generated = retained = lost = 0
    for card, role in zip(instance.cards, assignment):
        if role is Role.ATTACK:
            attack += card.attack
            cost += card.pitch_cost
            lost += card.defense
        elif role is Role.PITCH:
            generated += card.pitch_resource
            lost += card.defense
        else:
            retained += card.defense
    return Totals(attack_total=attack, pitch_cost_total=cost,
                  resources_generated=generated,
                  defense_retained=retained, defense_lost=lost)


def is_feasible(instance: Instance, assignment: Assignment) -> bool:
    """True iff the attacks' total cost is covered by the resource pool
    plus the pitched cards' resources. Role exclusivity holds by
    construction of Assignment."""
    _check_lengths(instance, assignment)
    cost = generated = 0
    for card, role in zip(instance.cards, assignment):
        if role is Role.ATTACK:
            cost += card.pitch_cost
        elif role is Role.PITCH:
            generated += card.pitch_resource
    return cost <= instance.initial_resources + generated


def evaluate(instance: Instance, assignment: Assignment) -> ObjectiveValue:
    """Exact objective: total attack minus lambda times the defense printed
    on every card that was attacked or pitched.

    Defined on infeasible assignments too; solvers filter feasibility
    separately so enumeration oracles can evaluate everything.
    """
    _check_lengths(instance, assignment)
    attack = lost = 0
    for card, role in zip(instance.cards, assignment):
        if role is Role.ATTACK:
            attack += card.attack
            lost += card.defense
        elif role is Role.PITCH:
            lost += card.defense
    return Fraction(attack) - instance.lam.as_fraction * lost
