import random
from math import lcm

from torbase import (
    circuits,
    family_report,
    free_arrangement_witness,
    is_betti_divisible,
    is_circuit_semigroup,
    is_free,
    is_free_for_arrangement,
    is_telescopic,
    is_universally_free,
    robustness_flags,
    semigroup,
    unique_writing,
    universally_free_witness,
)
from torbase.binomial import normalize_sign

from .oracles import (
    free_by_permutations,
    random_minimal_instance,
    universally_free_by_permutations,
)


def rel(u, v):
    return normalize_sign(tuple(a - b for a, b in zip(u, v)))


def test_circuits_closed_form():
    s = semigroup((4, 6, 9))
    assert {b.z for b in circuits(s)} == {
        rel((3, 0, 0), (0, 2, 0)),
        rel((9, 0, 0), (0, 0, 4)),
        rel((0, 3, 0), (0, 0, 2)),
    }
    s = semigroup((3, 4, 5))
    assert {b.z for b in circuits(s)} == {
        rel((4, 0, 0), (0, 3, 0)),
        rel((5, 0, 0), (0, 0, 3)),
        rel((0, 5, 0), (0, 0, 4)),
    }


def test_circuit_degrees_are_pairwise_lcms():
    s = semigroup((36, 40, 75))
    assert sorted(b.degree for b in circuits(s)) == [360, 600, 900]
    assert {lcm(a, b) for a in s.gens for b in s.gens if a != b} == {360, 600, 900}


def test_free_but_not_for_identity_arrangement():
    s = semigroup((8, 9, 10, 12))
    assert not is_free_for_arrangement(s, (8, 9, 10, 12))
    assert is_free_for_arrangement(s, (9, 10, 8, 12))
    assert is_free(s)
    assert not is_universally_free(s)
    w = free_arrangement_witness(s)
    assert w is not None and is_free_for_arrangement(s, w)


def test_complete_intersection_but_not_free():
    s = semigroup((10, 14, 15, 21))
    from torbase import is_complete_intersection

    assert is_complete_intersection(s)
    assert not is_free(s)
    assert not is_telescopic(s)


def test_universally_free_golden():
    assert is_universally_free(semigroup((10, 15, 18)))
    assert is_universally_free(semigroup((390, 546, 770, 1155)))
    assert not is_universally_free(semigroup((210, 330, 3080, 3465, 5544)))
    assert is_free(semigroup((210, 330, 3080, 3465, 5544)))
    assert is_free(semigroup((30, 105, 546, 770)))


def test_universally_free_witness_names_a_failure():
    s = semigroup((8, 9, 10, 12))
    w = universally_free_witness(s)
    assert w is not None
    gen, subset = w
    assert gen in subset
    rest = tuple(g for g in subset if g != gen)
    from torbase.classify import splits_off

    assert not splits_off(gen, rest)


def test_subset_criterion_matches_all_permutations():
    suite = [
        (4, 5, 6), (3, 4, 5), (4, 6, 9), (10, 15, 18), (8, 9, 10, 12),
        (10, 14, 15, 21), (15, 18, 20), (36, 40, 75), (30, 36, 40, 75),
        (390, 546, 770, 1155), (210, 330, 3080, 3465, 5544),
        (30, 105, 546, 770), (60, 280, 315, 378),
    ]
    for gens in suite:
        s = semigroup(gens)
        assert is_universally_free(s) == universally_free_by_permutations(s)
        assert is_free(s) == free_by_permutations(s)


def test_unique_writing_golden():
    uw = unique_writing(semigroup((60, 280, 315, 378)))
    assert uw.d == (7, 3, 2, 5)
    assert uw.f == (2, 4, 3, 9)
    s = semigroup((60, 280, 315, 378))
    assert is_free_for_arrangement(s, (378, 315, 280, 60))
    assert is_telescopic(s) is True
    assert not is_universally_free(s)


def test_unique_writing_reconstructs_generators():
    rng = random.Random(47)
    for _ in range(10):
        s = random_minimal_instance(rng, rng.choice((3, 4)), 6, 90)
        uw = unique_writing(s)
        n = len(s.gens)
        for i, a in enumerate(s.gens):
            prod = uw.f[i]
            for j in range(n):
                if j != i:
                    prod *= uw.d[j]
            assert prod == a


def test_betti_divisible_golden():
    assert is_betti_divisible(semigroup((10, 15, 18)))
    assert not is_betti_divisible(semigroup((390, 546, 770, 1155)))
    assert not is_betti_divisible(semigroup((4, 5, 6)))


def test_circuit_semigroup_golden():
    assert not is_circuit_semigroup(semigroup((36, 40, 75)))
    assert is_circuit_semigroup(semigroup((30, 36, 40, 75)))
    assert is_circuit_semigroup(semigroup((15, 18, 20)))


def test_robustness_flags_unique_betti():
    # a unique Betti degree forces universal Markov = universal Groebner
    flags = robustness_flags(semigroup((4, 6, 9)))
    assert not flags.generalized_robust  # Betti degrees {12, 18}
    rng = random.Random(53)
    for _ in range(6):
        s = random_minimal_instance(rng, 3, 5, 60)
        flags = robustness_flags(s)
        from torbase import betti_elements

        assert flags.generalized_robust == (len(betti_elements(s)) == 1)


def test_family_report_golden_large():
    rep = family_report(semigroup((390, 546, 770, 1155)))
    fam = rep.families
    assert fam["F0"] is False
    assert fam["F1"] and fam["F2"] and fam["F3"] and fam["F4"]


def test_family_report_random_consistency():
    # family_report carries internal cross-checks and inclusion asserts
    rng = random.Random(59)
    for _ in range(8):
        s = random_minimal_instance(rng, 3, 5, 70)
        rep = family_report(s)
        assert rep.to_json()["gens"] == list(s.gens)
