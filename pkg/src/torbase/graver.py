"""Graver basis by lattice completion, plus the definitional primitivity test.

Completion starts from a minimal Markov basis (which generates the kernel
lattice), repeatedly adds normal forms of sign-inconsistent pairwise sums,
and finally keeps the conformally minimal vectors.  Reduction uses the
conformal divisibility order: g reduces r when sign(g_i) agrees with
sign(r_i) and |g_i| <= |r_i| everywhere.
"""

from __future__ import annotations

import heapq

from .binomial import BasisSet, make_binomial, negative_part, positive_part
from .config import default_budget
from .errors import ResourceLimitError
from .markov import minimal_markov


def _conformal(f, g):
    """No coordinate where f and g have opposite signs."""
    return all(x * y >= 0 for x, y in zip(f, g))


def _reduces(g, r):
    """g conformally divides r."""
    for x, y in zip(g, r):
        if x > 0 and not (0 < x <= y):
            return False
        if x < 0 and not (y <= x < 0):
            return False
    return True


def _masks(z):
    pos = neg = 0
    for i, x in enumerate(z):
        if x > 0:
            pos |= 1 << i
        elif x < 0:
            neg |= 1 << i
    return pos, neg


class _Pool:
    """Vector set bucketed by sign-support masks for fast reducer lookup."""

    def __init__(self):
        self.buckets = {}

    def add(self, z):
        self.buckets.setdefault(_masks(z), []).append(z)

    def reducer(self, r):
        rpos, rneg = _masks(r)
        for (pos, neg), vecs in self.buckets.items():
            if pos & ~rpos or neg & ~rneg:
                continue
            for g in vecs:
                if _reduces(g, r):
                    return g
        return None

    def __iter__(self):
        for vecs in self.buckets.values():
            yield from vecs


def _normal_form(r, pool):
    while True:
        g = pool.reducer(r)
        if g is None:
            return r
        r = tuple(x - y for x, y in zip(r, g))
        if not any(r):
            return r


def graver(s, budget=None):
    """The Graver basis: all conformally minimal nonzero kernel vectors."""
    hit = s._cache.get("graver")
    if hit is not None:
        return hit
    out = _graver(s, budget or default_budget())
    s._cache["graver"] = out
    return out


def _graver(s, budget):
    gens = s.gens
    n = len(gens)
    if n < 2:
        return BasisSet("graver", [], {"gens": list(gens)})
    seed = [b.z for b in minimal_markov(s)]
    pool = _Pool()
    members = set()
    heap = []  # (l1 norm, vector) so small candidates are processed first

    def push(z):
        if any(z) and z not in members:
            heapq.heappush(heap, (sum(abs(x) for x in z), z))

    def add(z):
        for w in (z, tuple(-x for x in z)):
            if w not in members:
                members.add(w)
                pool.add(w)

    current = []
    for z in seed:
        for w in (z, tuple(-x for x in z)):
            for other in current:
                if not _conformal(w, other):
                    push(tuple(a + b for a, b in zip(w, other)))
            current.append(w)
        add(z)

    processed = 0
    while heap:
        processed += 1
        if processed > budget.graver_cap:
            raise ResourceLimitError(
                "graver completion exceeded %d candidates" % budget.graver_cap
            )
        if processed % 4096 == 0:
            budget.check_deadline()
        _, z = heapq.heappop(heap)
        if z in members:
            continue
        r = _normal_form(z, pool)
        if not any(r):
            continue
        deg = sum(a * x for a, x in zip(gens, positive_part(r)))
        if deg > budget.degree_cap:
            raise ResourceLimitError("graver degree exceeded %d" % budget.degree_cap)
        for other in list(pool):
            if not _conformal(r, other):
                push(tuple(a + b for a, b in zip(r, other)))
        add(r)

    # final conformal-minimality filter, one representative per +/- pair
    all_vecs = list(pool)
    keep = []
    for z in all_vecs:
        if z[next(i for i, x in enumerate(z) if x)] < 0:
            continue  # handle each +/- pair once, via its normalized rep
        minimal = True
        for g in all_vecs:
            if g != z and _reduces(g, z):
                minimal = False
                break
        if minimal:
            keep.append(z)
    elems = [make_binomial(z, gens) for z in keep]
    return BasisSet("graver", elems, {"gens": list(gens)})


def _box(u):
    """All vectors 0 <= w <= u (componentwise)."""
    out = [()]
    for bound in u:
        out = [w + (k,) for w in out for k in range(bound + 1)]
    return out


def is_primitive(s, binomial):
    """Definitional test: no other kernel pair (w, y) with w <= u, y <= v.

    Exhaustive search over the divisor boxes of both monomials; intended as
    an oracle for small instances, not for production use.
    """
    gens = s.gens
    u, v = binomial.u, binomial.v
    by_degree = {}
    for w in _box(u):
        d = sum(a * x for a, x in zip(gens, w))
        by_degree.setdefault(d, []).append(w)
    zero = tuple(0 for _ in gens)
    for y in _box(v):
        d = sum(a * x for a, x in zip(gens, y))
        for w in by_degree.get(d, ()):
            if (w, y) == (zero, zero) or (w, y) == (u, v):
                continue
            return False
    return True
