from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from torbase import (
    betti_elements,
    circuits,
    critical_binomials,
    graver,
    minimal_markov,
    semigroup,
    universal_markov,
)
from torbase.binomial import negative_part, normalize_sign, positive_part
from torbase.groebner import universal_groebner_by_fiber_edges

from .oracles import dp_membership, restrict_to_subset


def gens_strategy(max_n=4, lo=5, hi=60):
    return st.lists(
        st.integers(lo, hi), min_size=2, max_size=max_n, unique=True
    ).map(tuple)


@given(gens_strategy())
@settings(max_examples=60, deadline=None)
def test_membership_matches_dp(gens):
    s = semigroup(gens)
    top = s.frobenius() + 2 * s.gens[0] + 1
    table = dp_membership(s.gens, max(top, 1))
    for b in range(len(table)):
        assert s.contains(b) == table[b]


@given(
    st.lists(st.integers(-9, 9), min_size=2, max_size=6)
    .map(tuple)
    .filter(lambda z: any(x != 0 for x in z))
)
@settings(max_examples=100)
def test_normalize_sign_is_idempotent_and_consistent(z):
    w = normalize_sign(z)
    assert normalize_sign(w) == w
    nz = [x for x in w if x != 0]
    assert nz[0] > 0
    u, v = positive_part(w), negative_part(w)
    assert tuple(a - b for a, b in zip(u, v)) == w
    assert all(a == 0 or b == 0 for a, b in zip(u, v))


@given(gens_strategy(max_n=3, lo=5, hi=50))
@settings(max_examples=25, deadline=None)
def test_inclusion_chains(gens):
    s = semigroup(gens)
    gr = graver(s)
    u = universal_groebner_by_fiber_edges(s)
    assert circuits(s).issubset(u)
    assert u.issubset(gr)
    assert critical_binomials(s).issubset(universal_markov(s))
    assert minimal_markov(s).issubset(universal_markov(s))
    assert universal_markov(s).issubset(gr)


@given(gens_strategy(max_n=3, lo=5, hi=40))
@settings(max_examples=15, deadline=None)
def test_elimination_on_generator_pairs(gens):
    # restricting a basis to two generators must match the two-generator ideal,
    # whose only primitive relation is x_i^(aj/g) - x_j^(ai/g)
    s = semigroup(gens)
    n = len(s.gens)
    gr = graver(s)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = s.gens[i], s.gens[j]
            g = gcd(a, b)
            expect = {normalize_sign((b // g, -(a // g)))}
            assert restrict_to_subset(gr, s, (i, j)) == expect


@given(gens_strategy(max_n=4, lo=5, hi=70))
@settings(max_examples=30, deadline=None)
def test_betti_degrees_carry_minimal_generators(gens):
    s = semigroup(gens)
    m = minimal_markov(s)
    betti = betti_elements(s)
    assert sorted(set(b.degree for b in m)) == sorted(betti)
    # every Betti degree has a disconnected fiber
    for d in betti:
        fib = s.fiber(d)
        assert len(fib.components()) > 1
