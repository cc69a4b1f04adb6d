import random

import pytest

from torbase import Budget, ResourceLimitError, graver, is_primitive, semigroup
from torbase.binomial import normalize_sign

from .oracles import brute_graver, random_minimal_instance


def rel(u, v):
    return normalize_sign(tuple(a - b for a, b in zip(u, v)))


def test_graver_golden_4_5_6():
    gr = graver(semigroup((4, 5, 6)))
    assert {b.z for b in gr} == {
        rel((0, 0, 2), (3, 0, 0)),
        rel((0, 0, 3), (2, 2, 0)),
        rel((0, 0, 4), (1, 4, 0)),
        rel((0, 0, 5), (0, 6, 0)),
        rel((0, 2, 0), (1, 0, 1)),
        rel((0, 2, 1), (4, 0, 0)),
        rel((0, 4, 0), (5, 0, 0)),
    }


def test_graver_golden_two_generators():
    gr = graver(semigroup((4, 5)))
    assert {b.z for b in gr} == {rel((0, 4), (5, 0))}


def test_graver_golden_3_4_5():
    gr = graver(semigroup((3, 4, 5)))
    assert {b.z for b in gr} == {
        rel((0, 0, 2), (2, 1, 0)),
        rel((0, 0, 3), (1, 3, 0)),
        rel((0, 0, 3), (5, 0, 0)),
        rel((0, 0, 4), (0, 5, 0)),
        rel((0, 1, 1), (3, 0, 0)),
        rel((0, 2, 0), (1, 0, 1)),
        rel((0, 3, 0), (4, 0, 0)),
    }


def test_graver_golden_10_15_18():
    gr = graver(semigroup((10, 15, 18)))
    assert {b.z for b in gr} == {
        rel((0, 0, 5), (0, 6, 0)),
        rel((0, 0, 5), (3, 4, 0)),
        rel((0, 0, 5), (6, 2, 0)),
        rel((0, 0, 5), (9, 0, 0)),
        rel((0, 2, 0), (3, 0, 0)),
    }


def test_graver_counts():
    assert len(graver(semigroup((4, 6, 9)))) == 5
    assert len(graver(semigroup((390, 546, 770, 1155)))) == 170


def test_every_output_is_primitive():
    rng = random.Random(31)
    for _ in range(10):
        s = random_minimal_instance(rng, rng.choice((3, 4)), 5, 60)
        for b in graver(s):
            assert is_primitive(s, b), (s.gens, b.z)


def test_completion_equals_definitional_brute_force():
    rng = random.Random(37)
    for _ in range(8):
        s = random_minimal_instance(rng, rng.choice((2, 3)), 5, 40)
        gr = graver(s)
        assert {b.z for b in gr} == brute_graver(s, gr), s.gens


def test_graver_cap_raises():
    from torbase import NumericalSemigroup

    # a fresh instance: results are cached per object, which would mask the cap
    s = NumericalSemigroup((390, 546, 770, 1155))
    with pytest.raises(ResourceLimitError):
        graver(s, Budget(graver_cap=10))


def test_kernel_vectors_sum_to_zero_degree():
    s = semigroup((24, 46, 55, 88))
    for b in graver(s):
        assert sum(a * z for a, z in zip(s.gens, b.z)) == 0
        assert b.degree == sum(a * x for a, x in zip(s.gens, b.u))
