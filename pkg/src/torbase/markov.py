"""Betti degrees, Markov bases, and critical binomials.

The fiber graph of degree b has the factorizations of b as vertices, two
being adjacent when they share support.  b is a Betti degree exactly when
that graph is disconnected.  Candidate degrees are located with the much
cheaper generator graph (vertices the generators a_i with b - a_i in S,
edges where b - a_i - a_j in S), which has the same number of components;
every candidate is then confirmed on the actual fiber.
"""

from __future__ import annotations

from .binomial import BasisSet, binomial_from_parts, make_binomial
from .errors import InternalConsistencyError
from .semigroup import NumericalSemigroup, submonoid_contains


def _cached(s, key, fn):
    hit = s._cache.get(key)
    if hit is None:
        hit = fn()
        s._cache[key] = hit
    return hit


def _generator_graph_connected(s, b):
    gens = s.gens
    verts = [i for i, a in enumerate(gens) if s.contains(b - a)]
    if len(verts) <= 1:
        return True
    root = verts[0]
    seen = {root}
    stack = [root]
    vset = set(verts)
    while stack:
        i = stack.pop()
        for j in vset - seen:
            if s.contains(b - gens[i] - gens[j]):
                seen.add(j)
                stack.append(j)
    return len(seen) == len(verts)


def betti_elements(s):
    """Degrees whose fiber graph is disconnected, in increasing order.

    The scan bound frobenius + (two largest generators) is safe: above it
    every pair b - a_i - a_j lies in S, so the generator graph is complete.
    """
    return _cached(s, "betti", lambda: _betti_elements(s))


def _betti_elements(s):
    gens = s.gens
    if len(gens) < 2:
        return ()
    top = s.frobenius() + gens[-1] + (gens[-2] if len(gens) > 1 else 0)
    out = []
    for b in range(2, top + 1):
        if not s.contains(b):
            continue
        if _generator_graph_connected(s, b):
            continue
        # confirm on the fiber itself
        if len(s.fiber(b).components()) < 2:
            raise InternalConsistencyError(
                "generator graph disconnected but fiber connected at %d" % b
            )
        out.append(b)
    return tuple(out)


def minimal_markov(s):
    """A deterministic minimal Markov basis.

    Per Betti degree, take the lexicographically smallest factorization of
    each fiber component and join every later component to the first one.
    """
    return _cached(s, "minimal_markov", lambda: _minimal_markov(s))


def _minimal_markov(s):
    elems = []
    for b in betti_elements(s):
        comps = s.fiber(b).component_elements()
        reps = sorted(comp[0] for comp in comps)
        for rep in reps[1:]:
            elems.append(binomial_from_parts(reps[0], rep, s.gens))
    return BasisSet("markov-minimal", elems, {"gens": list(s.gens)})


def universal_markov(s):
    """Union of all minimal Markov bases: every cross-component pair of
    factorizations at every Betti degree."""
    return _cached(s, "universal_markov", lambda: _universal_markov(s))


def _universal_markov(s):
    elems = []
    for b in betti_elements(s):
        comps = s.fiber(b).component_elements()
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                for u in comps[i]:
                    for v in comps[j]:
                        elems.append(binomial_from_parts(u, v, s.gens))
    return BasisSet("markov-universal", elems, {"gens": list(s.gens)})


def critical_exponents(s):
    """c_i = least c >= 1 with c * a_i in the monoid of the other generators."""
    return _cached(s, "critical_exponents", lambda: _critical_exponents(s))


def _critical_exponents(s):
    gens = s.gens
    out = []
    for i, a in enumerate(gens):
        rest = gens[:i] + gens[i + 1 :]
        c = 1
        while not submonoid_contains(rest, c * a):
            c += 1
        out.append(c)
    return tuple(out)


def critical_binomials(s):
    """All binomials x_i^{c_i} - x^r with r a factorization of c_i a_i over
    the other generators."""
    return _cached(s, "critical_binomials", lambda: _critical_binomials(s))


def _critical_binomials(s):
    gens = s.gens
    n = len(gens)
    cs = critical_exponents(s)
    elems = []
    for i, (a, c) in enumerate(zip(gens, cs)):
        for r in s.fiber(c * a).elements:
            if r[i] != 0:
                continue
            u = [0] * n
            u[i] = c
            elems.append(binomial_from_parts(tuple(u), r, gens))
    return BasisSet("critical", elems, {"gens": list(s.gens), "exponents": list(cs)})


def moves_connect_betti_fibers(s, vectors):
    """True iff every Betti fiber is connected by the given kernel moves.

    This is exactly the condition for the corresponding binomials to
    generate the toric ideal.
    """
    moves = set()
    for z in vectors:
        moves.add(tuple(z))
        moves.add(tuple(-x for x in z))
    for b in betti_elements(s):
        elems = s.fiber(b).elements
        index = {u: k for k, u in enumerate(elems)}
        if len(elems) <= 1:
            continue
        seen = {0}
        stack = [0]
        while stack:
            k = stack.pop()
            u = elems[k]
            for z in moves:
                w = tuple(x + y for x, y in zip(u, z))
                if any(x < 0 for x in w):
                    continue
                j = index.get(w)
                if j is not None and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != len(elems):
            return False
    return True


def is_complete_intersection(s):
    """True iff the toric ideal needs only n - 1 generators."""
    return len(minimal_markov(s)) == len(s.gens) - 1
