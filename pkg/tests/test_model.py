from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
import hypothesis.strategies as st

from fabopt import (Assignment, Card, ContractViolationError, Instance,
                    Lambda, Role, compute_totals, evaluate, is_feasible)

from helpers import (EXAMPLE_CARDS, instance_with_assignment_st,
                      naive_objective, naive_totals)


class TestCard:
    def test_valid(self):
        card = Card("Sting", 4, 2, 1, 3)
        assert card.attack == 4

    @pytest.mark.parametrize("field", ["attack", "pitch_cost", "pitch_resource", "defense"])
    def test_negative_attribute_rejected(self, field):
        kwargs = dict(name="x", attack=0, pitch_cost=0, pitch_resource=0, defense=0)
        kwargs[field] = -1
        with pytest.raises(ValueError, match=field):
            Card(**kwargs)

    def test_blank_name_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            Card("   ", 0, 0, 0, 0)


class TestLambda:
    def test_lowest_terms(self):
        lam = Lambda(2, 4)
        assert (lam.num, lam.den) == (1, 2)

    def test_zero_normalizes(self):
        assert Lambda(0, 7) == Lambda(0, 1)

    def test_invalid_denominator(self):
        with pytest.raises(ValueError, match="denominator"):
            Lambda(1, 0)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Lambda(-1, 2)

    @pytest.mark.parametrize("text,expected", [
        ("1/2", Lambda(1, 2)), ("0", Lambda(0)), ("3", Lambda(3)), (" 2/6 ", Lambda(1, 3)),
    ])
    def test_parse(self, text, expected):
        assert Lambda.parse(text) == expected

    @pytest.mark.parametrize("text", ["", "a/b", "1/2/3", "1.5"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Lambda.parse(text)


class TestFeasibility:
    def test_empty_instance(self):
        assert is_feasible(Instance((), Lambda(0)), Assignment(()))

    def test_unpayable_attack(self):
        inst = Instance((Card("c", 5, 2, 1, 0),), Lambda(0))
        assert not is_feasible(inst, Assignment.from_letters("A"))

    def test_pitch_covers_cost(self):
        inst = Instance((Card("a", 5, 2, 1, 0), Card("b", 0, 0, 3, 1)), Lambda(0))
        assert is_feasible(inst, Assignment.from_letters("AP"))

    def test_pool_covers_cost(self):
        inst = Instance((Card("c", 5, 2, 1, 0),), Lambda(0), initial_resources=2)
        assert is_feasible(inst, Assignment.from_letters("A"))

    def test_length_mismatch_names_both_lengths(self):
        inst = Instance((Card("c", 1, 0, 0, 0),), Lambda(0))
        with pytest.raises(ContractViolationError, match=r"length 3.*count 1"):
            is_feasible(inst, Assignment.from_letters("ADD"))


class TestEvaluate:
    def test_all_defend_is_zero(self):
        inst = Instance(EXAMPLE_CARDS, Lambda(0))
        assert evaluate(inst, Assignment.from_letters("DDD")) == 0

    def test_single_attack_midrange(self):
        inst = Instance((Card("c", 4, 0, 0, 3),), Lambda(1))
        assert evaluate(inst, Assignment.from_letters("A")) == 1

    def test_three_card_half_penalty(self):
        inst = Instance(EXAMPLE_CARDS, Lambda(1, 2))
        assert evaluate(inst, Assignment.from_letters("APA")) == 4

    def test_against_enumerated_oracle(self):
        # cross-check every one of the 27 assignments against the naive fold
        inst = Instance(EXAMPLE_CARDS, Lambda(1, 2))
        for letters in product("APD", repeat=3):
            assignment = Assignment.from_letters("".join(letters))
            assert evaluate(inst, assignment) == naive_objective(inst, assignment)

    def test_length_mismatch(self):
        inst = Instance(EXAMPLE_CARDS, Lambda(0))
        with pytest.raises(ContractViolationError):
            evaluate(inst, Assignment(()))


class TestTotals:
    def test_empty(self):
        totals = compute_totals(Instance((), Lambda(0)), Assignment(()))
        assert (totals.attack_total, totals.pitch_cost_total, totals.resources_generated,
                totals.defense_retained, totals.defense_lost) == (0, 0, 0, 0, 0)

    def test_three_card_example(self):
        inst = Instance(EXAMPLE_CARDS, Lambda(1, 2))
        totals = compute_totals(inst, Assignment.from_letters("APA"))
        assert totals.attack_total == 7
        assert totals.pitch_cost_total == 3
        assert totals.resources_generated == 3
        assert totals.defense_retained == 0
        assert totals.defense_lost == 6

    def test_all_defend_single(self):
        inst = Instance((Card("c", 2, 1, 1, 5),), Lambda(0))
        totals = compute_totals(inst, Assignment.from_letters("D"))
        assert (totals.attack_total, totals.defense_retained, totals.defense_lost) == (0, 5, 0)


@given(instance_with_assignment_st())
def test_totals_match_independent_fold(pair):
    instance, assignment = pair
    totals = compute_totals(instance, assignment)
    naive = naive_totals(instance, assignment)
    assert totals.attack_total == naive["attack_total"]
    assert totals.pitch_cost_total == naive["pitch_cost_total"]
    assert totals.resources_generated == naive["resources_generated"]
    assert totals.defense_retained == naive["defense_retained"]
    assert totals.defense_lost == naive["defense_lost"]


@given(instance_with_assignment_st())
def test_defense_partition_identity(pair):
    instance, assignment = pair
    totals = compute_totals(instance, assignment)
    assert totals.defense_retained + totals.defense_lost == instance.total_defense


@given(instance_with_assignment_st())
def test_zero_penalty_equals_attack_total(pair):
    instance, assignment = pair
    aggro = Instance(instance.cards, Lambda(0), instance.initial_resources)
    value = evaluate(aggro, assignment)
    assert value.denominator == 1
    assert value == compute_totals(aggro, assignment).attack_total


@given(instance_with_assignment_st(), st.randoms(use_true_random=False))
def test_evaluate_invariant_under_joint_permutation(pair, rng):
    instance, assignment = pair
    paired = list(zip(instance.cards, assignment.roles))
    rng.shuffle(paired)
    permuted = Instance(tuple(c for c, _ in paired), instance.lam,
                        instance.initial_resources)
    shuffled = Assignment(tuple(r for _, r in paired))
    assert evaluate(permuted, shuffled) == evaluate(instance, assignment)


@given(instance_with_assignment_st())
def test_evaluate_monotone_in_penalty_for_fixed_assignment(pair):
    instance, assignment = pair
    lost = compute_totals(instance, assignment).defense_lost
    low = evaluate(Instance(instance.cards, Lambda(1, 4), instance.initial_resources),
                   assignment)
    high = evaluate(Instance(instance.cards, Lambda(3, 4), instance.initial_resources),
                    assignment)
    if lost == 0:
        assert low == high
    else:
        assert low > high


def test_objective_is_exact_rational():
    inst = Instance((Card("c", 1, 0, 0, 1),), Lambda(1, 3))
    assert evaluate(inst, Assignment.from_letters("A")) == Fraction(2, 3)
