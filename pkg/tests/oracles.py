"""Slow, independent reference implementations used to check the engines.

Everything here is written from the definitions, deliberately ignoring the
faster routes the library takes, so agreement is meaningful.
"""

import itertools

from torbase.binomial import normalize_sign
from torbase.semigroup import semigroup


def dp_membership(gens, top):
    """Boolean table t[b] = (b is a nonnegative combination of gens)."""
    t = [False] * (top + 1)
    t[0] = True
    for b in range(1, top + 1):
        t[b] = any(b >= g and t[b - g] for g in gens)
    return t


def fiber_graph_components(fiber):
    """Connected components of the shared-support graph, by brute force."""
    pts = fiber.elements
    comp = list(range(len(pts)))

    def root(i):
        while comp[i] != i:
            i = comp[i]
        return i

    for i, j in itertools.combinations(range(len(pts)), 2):
        if any(a > 0 and b > 0 for a, b in zip(pts[i], pts[j])):
            ri, rj = root(i), root(j)
            if ri != rj:
                comp[ri] = rj
    return len({root(i) for i in range(len(pts))})


def brute_betti(s, bound=None):
    """Betti degrees found by scanning every degree and every fiber."""
    if bound is None:
        big = sorted(s.gens)[-2:]
        bound = max(s.frobenius(), 0) + sum(big)
    out = []
    for b in range(2, bound + 1):
        fib = s.fiber(b)
        if len(fib) > 1 and fiber_graph_components(fib) > 1:
            out.append(b)
    return out


def brute_graver(s, completion):
    """All primitive kernel binomials with degree up to the completion's max.

    Collects every disjoint-support factorization pair, then keeps the ones
    no other pair divides on both sides.  Completeness beyond the bound
    cannot be brute-forced, but spurious or missing elements inside it would
    show up here.
    """
    bound = max(b.degree for b in completion)
    pairs = set()
    for d in range(2, bound + 1):
        pts = s.fiber(d).elements
        for u, v in itertools.combinations(pts, 2):
            if any(a > 0 and b > 0 for a, b in zip(u, v)):
                continue
            pairs.add(normalize_sign(tuple(a - b for a, b in zip(u, v))))

    def divides(zp, z):
        fwd = all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(zp, z))
        bwd = all(a * b <= 0 and abs(a) <= abs(b) for a, b in zip(zp, z))
        return fwd or bwd

    out = set()
    for z in pairs:
        if not any(zp != z and divides(zp, z) for zp in pairs):
            out.add(z)
    return out


def buchberger_fifo(s, order, seed):
    """Plain FIFO Buchberger on marked binomial pairs, no scheduling tricks.

    Returns the reduced basis as a sorted tuple of (lead, tail) pairs.
    """
    def mark(u, v):
        c = order.compare(u, v)
        assert c != 0
        return (u, v) if c > 0 else (v, u)

    def top_reduce(u, v, basis):
        changed = True
        while changed:
            changed = False
            for lead, tail in basis:
                if all(a >= b for a, b in zip(u, lead)):
                    u = tuple(a - b + c for a, b, c in zip(u, lead, tail))
                    if u == v:
                        return None
                    u, v = mark(u, v)
                    changed = True
        return u, v

    basis = [mark(b.u, b.v) for b in seed]
    queue = list(itertools.combinations(range(len(basis)), 2))
    while queue:
        i, j = queue.pop(0)
        if i >= len(basis) or j >= len(basis):
            continue
        (lu, lt), (ru, rt) = basis[i], basis[j]
        lcm_ = tuple(max(a, b) for a, b in zip(lu, ru))
        p = tuple(l - a + b for l, a, b in zip(lcm_, lu, lt))
        q = tuple(l - a + b for l, a, b in zip(lcm_, ru, rt))
        if p == q:
            continue
        red = top_reduce(*mark(p, q), basis)
        if red is not None:
            basis.append(red)
            queue.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize: drop any element whose lead is divisible by another lead
    basis = list(dict.fromkeys(basis))
    keep = []
    for idx, (lead, tail) in enumerate(basis):
        redundant = any(
            k != idx
            and all(a >= b for a, b in zip(lead, basis[k][0]))
            and (basis[k][0] != lead or k < idx)
            for k in range(len(basis))
        )
        if not redundant:
            keep.append((lead, tail))
    basis = keep
    # tail-reduce
    done = []
    for lead, tail in basis:
        changed = True
        while changed:
            changed = False
            for ol, ot in basis:
                if (ol, ot) == (lead, tail):
                    continue
                if all(a >= b for a, b in zip(tail, ol)):
                    tail = tuple(a - b + c for a, b, c in zip(tail, ol, ot))
                    changed = True
        done.append((lead, tail))
    return tuple(sorted(done))


def free_by_permutations(s):
    """Directly try every arrangement of the generators."""
    from torbase.classify import is_free_for_arrangement

    return any(
        is_free_for_arrangement(s, p)
        for p in itertools.permutations(s.gens)
    )


def universally_free_by_permutations(s):
    """Directly check every arrangement of the generators."""
    from torbase.classify import is_free_for_arrangement

    return all(
        is_free_for_arrangement(s, p)
        for p in itertools.permutations(s.gens)
    )


def restrict_to_subset(basis, s, subset_idx):
    """Elements supported inside the index subset, as restricted z vectors."""
    out = set()
    for b in basis:
        if all(b.z[i] == 0 for i in range(len(s.gens)) if i not in subset_idx):
            out.add(normalize_sign(tuple(b.z[i] for i in subset_idx)))
    return out


def random_minimal_instance(rng, n, lo=10, hi=120):
    """A semigroup whose minimal generating set has exactly n elements."""
    while True:
        g = tuple(sorted(rng.sample(range(lo, hi + 1), n)))
        s = semigroup(g)
        if s.gens == g:
            return s
