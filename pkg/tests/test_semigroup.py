import random

import pytest

from torbase import NumericalSemigroup, ValidationError, semigroup
from torbase.semigroup import submonoid_contains

from .oracles import dp_membership


def test_normalization_drops_gcd_and_redundant_generators():
    s = semigroup((4, 6, 10))
    assert s.gens == (2, 3)
    assert s.original_input == (4, 6, 10)
    s = semigroup((5, 10, 11))
    assert s.gens == (5, 11)
    assert semigroup((11, 5, 5, 11)).gens == (5, 11)


def test_strict_mode_rejects_non_minimal_input():
    with pytest.raises(ValidationError):
        NumericalSemigroup((4, 6, 10), strict=True)
    with pytest.raises(ValidationError):
        NumericalSemigroup((4, 6), strict=True)  # gcd 2
    NumericalSemigroup((4, 6, 9), strict=True)


def test_validation_errors():
    with pytest.raises(ValidationError):
        semigroup((0, 3))
    with pytest.raises(ValidationError):
        semigroup((-4, 5))
    with pytest.raises(ValidationError):
        semigroup(())
    with pytest.raises(ValidationError):
        semigroup((10**6 + 1, 3))


def test_membership_against_dp_oracle():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.choice((2, 3, 4))
        gens = tuple(sorted(rng.sample(range(5, 80), n)))
        s = semigroup(gens)
        top = 2 * s.gens[-1] * s.gens[0]
        table = dp_membership(s.gens, top)
        for b in range(top + 1):
            assert s.contains(b) == table[b], (s.gens, b)


def test_frobenius_two_generators_closed_form():
    for a, b in [(4, 5), (3, 7), (5, 11), (7, 9)]:
        assert semigroup((a, b)).frobenius() == a * b - a - b


def test_frobenius_golden():
    assert semigroup((4, 5, 6)).frobenius() == 7
    assert semigroup((3, 4, 5)).frobenius() == 2
    assert semigroup((10, 15, 18)).frobenius() == 77


def test_fiber_elements_evaluate_to_degree():
    s = semigroup((4, 6, 9))
    fib = s.fiber(36)
    assert len(fib) > 1
    for u in fib:
        assert sum(a * x for a, x in zip(s.gens, u)) == 36
    assert len(set(fib.elements)) == len(fib)


def test_fiber_of_non_member_is_empty():
    s = semigroup((4, 5, 6))
    assert len(s.fiber(7)) == 0
    assert len(s.fiber(-3)) == 0


def test_parse_and_json_roundtrip():
    s = NumericalSemigroup.parse("<10, 15, 18>")
    assert s.gens == (10, 15, 18)
    with pytest.raises(ValidationError):
        NumericalSemigroup.parse("4,5,6")
    t = NumericalSemigroup.from_json(s.to_json())
    assert t == s


def test_submonoid_contains():
    # <10, 14> without dividing out the gcd: only even combinations
    assert submonoid_contains((10, 14), 24)
    assert not submonoid_contains((10, 14), 12)
    assert not submonoid_contains((10, 14), 25)
    assert submonoid_contains((10, 14), 0)


def test_gluing_decompositions_golden():
    assert semigroup((10, 14, 15, 21)).gluing_decompositions() == [
        ((10, 15), (14, 21)),
    ]
    got = semigroup((60, 280, 315, 378)).gluing_decompositions()
    assert sorted(got) == [
        ((60, 280), (315, 378)),
        ((60, 280, 315), (378,)),
        ((60, 315, 378), (280,)),
    ]
    assert len(semigroup((390, 546, 770, 1155)).gluing_decompositions()) == 5
    big = semigroup((210, 330, 3080, 3465, 5544))
    assert len(big.gluing_decompositions()) == 13


def test_factory_returns_cached_instances():
    assert semigroup((4, 5, 6)) is semigroup((4, 5, 6))
