"""Instance generation, catalog ingestion and file serialization.

Generation is deterministic and documented down to the byte so instances
reproduce across platforms and languages:

* PRNG: SplitMix64. State is the 64-bit unsigned seed. Each draw advances
  the state by 0x9E3779B97F4A7C15 (mod 2^64) and returns
  ``mix(state)`` where ``mix`` xors and multiplies as in the reference
  implementation (constants 0xBF58476D1CE4E5B9, 0x94D049BB133111EB,
  shifts 30/27/31).
* A draw uniform on [0, bound] is ``next_u64() % (bound + 1)``.
* Per card, draws happen in attribute order attack, cost, resource,
  defense. In cost-correlated mode the cost draw is a delta in [0, 4]
  and the cost is max(attack + delta - 2, 0).
* Card names are "c1".."cn"; lambda and the resource pool come from the
  config, not from the PRNG.
"""
from __future__ import annotations

import csv
import difflib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnknownCardError, ValidationError
from .model import Card, Instance, Lambda
from .wire import instance_from_dict, instance_to_dict

CORRELATIONS = ("uncorrelated", "cost-correlated")
CATALOG_HEADER = ["name", "attack", "pitch_cost", "pitch_resource", "defense"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Reference SplitMix64 stream, used for cross-language reproducibility."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound_inclusive: int) -> int:
        return self.next_u64() % (bound_inclusive + 1)


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    max_attack: int = 9
    max_cost: int = 9
    max_resource: int = 9
    max_defense: int = 9
    correlation: str = "uncorrelated"
    seed: int = 0
    lam: Lambda = field(default_factory=lambda: Lambda(0))
    initial_resources: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for name in ("max_attack", "max_cost", "max_resource", "max_defense"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.correlation not in CORRELATIONS:
            raise ValueError(f"correlation must be one of {CORRELATIONS}, "
                             f"got {self.correlation!r}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")


def generate(config: GeneratorConfig) -> Instance:
    """Deterministic instance for a config; same seed, same instance."""
    rng = SplitMix64(config.seed)
    cards = []
    for i in range(config.n):
        attack = rng.below(config.max_attack)
        if config.correlation == "cost-correlated":
            cost = max(attack + rng.below(4) - 2, 0)
        else:
            cost = rng.below(config.max_cost)
        resource = rng.below(config.max_resource)
        defense = rng.below(config.max_defense)
        cards.append(Card(name=f"c{i + 1}", attack=attack, pitch_cost=cost,
                          pitch_resource=resource, defense=defense))
    return Instance(cards=tuple(cards), lam=config.lam,
                    initial_resources=config.initial_resources)


def instance_to_json(instance: Instance) -> str:
    """Canonical text form; byte-stable for identical instances."""
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def save_instance(instance: Instance, path: str | Path) -> None:
    Path(path).write_text(instance_to_json(instance), encoding="utf-8")


def load_instance(path: str | Path) -> Instance:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from None
    return instance_from_dict(data)


@dataclass(frozen=True)
class CardCatalog:
    """Named card records, keyed by unique name."""

    entries: dict[str, Card]

    def lookup(self, name: str) -> Card:
        try:
            return self.entries[name]
        except KeyError:
            suggestions = difflib.get_close_matches(name, self.entries, n=3)
            raise UnknownCardError(name, suggestions) from None

    def search(self, query: str) -> list[Card]:
        needle = query.strip().lower()
        return [card for name, card in self.entries.items()
                if needle in name.lower()]

    def __len__(self) -> int:
        return len(self.entries)


def load_catalog(path: str | Path) -> CardCatalog:
    """CSV with header name,attack,pitch_cost,pitch_resource,defense."""
    entries: dict[str, Card] = {}
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != CATALOG_HEADER:
            raise ParseError(f"{path}: expected header {','.join(CATALOG_HEADER)}, "
                             f"got {reader.fieldnames}")
        for row_number, row in enumerate(reader, start=2):
            name = (row["name"] or "").strip()
            if not name:
                raise ValidationError(f"{path}:{row_number}", "card name must be non-empty")
            if name in entries:
                raise ValidationError(f"{path}:{row_number}", f"duplicate card name {name!r}")
            values = {}
            for column in CATALOG_HEADER[1:]:
                raw = row[column]
                try:
                    values[column] = int(raw)
                except (TypeError, ValueError):
                    raise ValidationError(f"{path}:{row_number}",
                                          f"{column} must be an integer, got {raw!r}") from None
            try:
                entries[name] = Card(name=name, **values)
            except ValueError as exc:
                raise ValidationError(f"{path}:{row_number}", str(exc)) from None
    return CardCatalog(entries=entries)


def build_instance_from_names(catalog: CardCatalog, names: list[str],
                              lam: Lambda, initial_resources: int = 0) -> Instance:
    """Assemble a hand in the given order; duplicates are allowed."""
    cards = tuple(catalog.lookup(name) for name in names)
    return Instance(cards=cards, lam=lam, initial_resources=initial_resources)
