import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssratio import (
    CandidateSolution,
    DuplicatePair,
    Epsilon,
    Instance,
    RatioValue,
    compare_ratio,
    derived_epsilon_prime,
    ratio_of,
    validate_instance,
    within_factor,
)
from ssratio.errors import EmptyInput, InternalInvariantViolation, InvalidEpsilon, NonPositiveElement, ZeroSum


def test_validate_sorts():
    assert validate_instance([3, 1, 2]) == Instance((1, 2, 3))


def test_validate_duplicates_short_circuit():
    dup = validate_instance([5, 5, 2])
    assert isinstance(dup, DuplicatePair)
    assert dup.value == 5
    assert (dup.first_index, dup.second_index) == (1, 2)


@pytest.mark.parametrize("raw, exc", [([4, 0, 7], NonPositiveElement), ([3, -1], NonPositiveElement), ([], EmptyInput)])
def test_validate_errors(raw, exc):
    with pytest.raises(exc):
        validate_instance(raw)


@given(st.lists(st.integers(1, 10**9), min_size=1, max_size=30, unique=True), st.randoms())
def test_validate_order_independent(values, r):
    shuffled = values[:]
    r.shuffle(shuffled)
    assert validate_instance(shuffled) == validate_instance(values)


def test_instance_rejects_unsorted():
    with pytest.raises(ValueError):
        Instance((2, 1))


def test_ratio_of_examples():
    assert ratio_of(6, 6) == RatioValue(1, 1)
    assert (ratio_of(6, 6).num, ratio_of(6, 6).den) == (6, 6)
    assert (ratio_of(7, 3).num, ratio_of(7, 3).den) == (7, 3)
    assert (ratio_of(3, 7).num, ratio_of(3, 7).den) == (7, 3)
    with pytest.raises(ZeroSum):
        ratio_of(0, 4)


@given(st.integers(1, 10**30), st.integers(1, 10**30))
def test_ratio_of_symmetric(a, b):
    assert ratio_of(a, b) == ratio_of(b, a)
    assert ratio_of(a, b) >= RatioValue(1, 1)


def test_compare_ratio_examples():
    assert compare_ratio(RatioValue(7, 3), RatioValue(21, 9)) == 0
    assert compare_ratio(RatioValue(3, 2), RatioValue(7, 5)) == 1
    assert compare_ratio(RatioValue(1, 1), RatioValue(7, 3)) == -1


def test_compare_ratio_matches_fractions_on_random_pairs():
    rng = random.Random(5)
    for _ in range(2000):
        a = RatioValue(rng.randint(0, 10**40), rng.randint(1, 10**40))
        b = RatioValue(rng.randint(0, 10**40), rng.randint(1, 10**40))
        fa, fb = Fraction(a.num, a.den), Fraction(b.num, b.den)
        assert compare_ratio(a, b) == (fa > fb) - (fa < fb)


def test_ratio_hash_consistent_with_eq():
    assert hash(RatioValue(7, 3)) == hash(RatioValue(21, 9))
    assert str(RatioValue(21, 9)) == "7/3"
    assert RatioValue(1, 3).decimal(6) == "0.333333"


def test_epsilon_reduces_and_validates():
    assert Epsilon(2, 4) == Epsilon(1, 2)
    for p, q in [(0, 3), (3, 3), (4, 3), (1, 0), (-1, 2)]:
        with pytest.raises(InvalidEpsilon):
            Epsilon(p, q)


@pytest.mark.parametrize("text, expected", [("1/4", Epsilon(1, 4)), ("0.25", Epsilon(1, 4)), (" 9/10 ", Epsilon(9, 10)), ("0.1", Epsilon(1, 10))])
def test_epsilon_parse(text, expected):
    assert Epsilon.parse(text) == expected


@pytest.mark.parametrize("text", ["abc", "1/x", "1.5", "0", "1/1"])
def test_epsilon_parse_rejects(text):
    with pytest.raises(InvalidEpsilon):
        Epsilon.parse(text)


@pytest.mark.parametrize(
    "eps, expected",
    [(Epsilon(1, 2), Epsilon(1, 5)), (Epsilon(1, 10), Epsilon(1, 21)), (Epsilon(1, 1000), Epsilon(1, 2001))],
)
def test_derived_epsilon_prime_examples(eps, expected):
    assert derived_epsilon_prime(eps) == expected


def test_epsilon_prime_1_10_bound_by_hand():
    # (1 + 1/21) / (1 - 1/21) = 22/20 <= 11/10
    e = Fraction(1, 21)
    assert (1 + e) / (1 - e) == Fraction(11, 10)


@given(st.integers(1, 10**6), st.integers(2, 10**6))
def test_epsilon_prime_bound(p, q):
    if p >= q:
        return
    eps = Epsilon(p, q)
    ep = derived_epsilon_prime(eps)
    lhs = (1 + ep.as_fraction()) / (1 - ep.as_fraction())
    assert lhs <= 1 + eps.as_fraction()
    # the maximal admissible value gives equality
    assert lhs == 1 + eps.as_fraction()


def test_within_factor():
    assert within_factor(RatioValue(11, 5), RatioValue(2, 1), Epsilon(1, 10))
    assert not within_factor(RatioValue(221, 100), RatioValue(2, 1), Epsilon(1, 10))


def test_candidate_checks():
    inst = Instance((3, 5, 8))
    sol = CandidateSolution.of(inst.select(0b011), inst.select(0b100))
    sol.check(inst)
    assert sol.ratio == RatioValue(1, 1)
    with pytest.raises(InternalInvariantViolation):
        CandidateSolution.of(inst.select(0b011), inst.select(0b010))
    bad = CandidateSolution(inst.select(0b001), inst.select(0b100), RatioValue(1, 1))
    with pytest.raises(InternalInvariantViolation):
        bad.check(inst)
