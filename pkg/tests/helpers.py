"""Shared strategies and independent oracles for the test suite.

The "naive" folds below deliberately recompute aggregates through the
index-set definitions (attack set, pitch set, defend set) rather than the
package's single-pass loops, so they stay an independent route.
"""
from fractions import Fraction

import hypothesis.strategies as st

from fabopt import Assignment, Card, Instance, Lambda, Role

LAMBDA_GRID = [Lambda(0), Lambda(1, 4), Lambda(1, 2), Lambda(3, 4), Lambda(1)]

# the worked 3-card example used throughout: optima frozen from a
# standalone enumeration script run before the build
EXAMPLE_CARDS = (Card("c1", 4, 2, 1, 2), Card("c2", 0, 0, 3, 1), Card("c3", 3, 1, 2, 3))
EXAMPLE_OPTIMA = {
    Lambda(0): Fraction(7),
    Lambda(1, 4): Fraction(11, 2),
    Lambda(1, 2): Fraction(4),
    Lambda(3, 4): Fraction(5, 2),
    Lambda(1): Fraction(1),
}
EXAMPLE_MIN_DEFENSE_LOST = {
    Lambda(0): 6,
    Lambda(1, 4): 6,
    Lambda(1, 2): 6,
    Lambda(3, 4): 6,
    Lambda(1): 3,
}


def naive_totals(instance, assignment):
    """Aggregate sums via explicit index sets (independent of compute_totals)."""
    attack_set = [i for i, r in enumerate(assignment) if r is Role.ATTACK]
    pitch_set = [i for i, r in enumerate(assignment) if r is Role.PITCH]
    defend_set = [i for i, r in enumerate(assignment) if r is Role.DEFEND]
    cards = instance.cards
    return {
        "attack_total": sum(cards[i].attack for i in attack_set),
        "pitch_cost_total": sum(cards[i].pitch_cost for i in attack_set),
        "resources_generated": sum(cards[i].pitch_resource for i in pitch_set),
        "defense_retained": sum(cards[i].defense for i in defend_set),
        "defense_lost": sum(cards[i].defense for i in attack_set + pitch_set),
    }


def naive_objective(instance, assignment) -> Fraction:
    t = naive_totals(instance, assignment)
    return Fraction(t["attack_total"]) - instance.lam.as_fraction * t["defense_lost"]


def naive_is_feasible(instance, assignment) -> bool:
    t = naive_totals(instance, assignment)
    return t["pitch_cost_total"] <= instance.initial_resources + t["resources_generated"]


def cards_st(max_attr: int = 9):
    return st.builds(
        Card,
        name=st.text(alphabet="abcdefghij", min_size=1, max_size=6),
        attack=st.integers(0, max_attr),
        pitch_cost=st.integers(0, max_attr),
        pitch_resource=st.integers(0, max_attr),
        defense=st.integers(0, max_attr),
    )


def lambdas_st():
    return st.one_of(
        st.sampled_from(LAMBDA_GRID),
        st.builds(Lambda, st.integers(0, 5), st.integers(1, 5)),
    )


def instances_st(max_n: int = 6, max_attr: int = 9, max_pool: int = 4):
    return st.builds(
        Instance,
        cards=st.lists(cards_st(max_attr), max_size=max_n).map(tuple),
        lam=lambdas_st(),
        initial_resources=st.integers(0, max_pool),
    )


@st.composite
def instance_with_assignment_st(draw, max_n: int = 6, max_attr: int = 9):
    instance = draw(instances_st(max_n=max_n, max_attr=max_attr))
    roles = draw(st.lists(st.sampled_from(list(Role)),
                          min_size=instance.n, max_size=instance.n))
    return instance, Assignment(tuple(roles))
