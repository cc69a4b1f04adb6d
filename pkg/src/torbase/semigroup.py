"""Numerical semigroups: membership, Apery sets, fibers, gluings.

Everything here is exact integer arithmetic.  A semigroroup is stored by its
minimal generating set; the Apery set with respect to the multiplicity is
computed eagerly so that membership queries are O(1) afterwards.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from math import gcd, lcm

from .errors import ValidationError

MAX_GENERATOR = 10**6


def _sieve(gens, top):
    """Boolean membership table for <gens> on 0..top."""
    reach = bytearray(top + 1)
    reach[0] = 1
    for g in gens:
        for x in range(g, top + 1):
            if not reach[x] and reach[x - g]:
                reach[x] = 1
    return reach


def _minimal_generators(uniq):
    """Minimal generating set of <uniq>, for a sorted duplicate-free list.

    a is redundant iff a = g + s with g a generator, s a nonzero element;
    that decomposition never involves a itself, so one simultaneous pass
    over the full-semigroup sieve is enough.
    """
    top = uniq[-1]
    reach = _sieve(uniq, top)
    out = []
    for a in uniq:
        redundant = any(g < a and reach[a - g] for g in uniq)
        if not redundant:
            out.append(a)
    return out


def _apery_table(gens):
    """Smallest element of S in each residue class mod gens[0] (Dijkstra)."""
    m = gens[0]
    INF = None
    dist = [INF] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] != d:
            continue
        for g in gens[1:]:
            nd = d + g
            nr = (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    if any(d is None for d in dist):
        # cannot happen when gcd(gens) == 1
        raise ValidationError("generators are not coprime")
    return tuple(dist)


class NumericalSemigroup:
    """Numerical semigroup given by positive integer generators.

    By default the input is normalized: divided by its gcd, deduplicated,
    and reduced to the minimal generating set.  With strict=True any of
    those repairs raises ValidationError instead.
    """

    __slots__ = ("gens", "apery", "original_input", "_cache")

    def __init__(self, gens, strict=False):
        gens = tuple(int(g) for g in gens)
        if not gens:
            raise ValidationError("at least one generator is required")
        for g in gens:
            if g < 1:
                raise ValidationError("generator %r is not a positive integer" % (g,))
            if g > MAX_GENERATOR:
                raise ValidationError(
                    "generator %d exceeds the cap %d" % (g, MAX_GENERATOR)
                )
        self.original_input = gens
        g0 = 0
        for g in gens:
            g0 = gcd(g0, g)
        if g0 != 1:
            if strict:
                raise ValidationError("generators have gcd %d != 1" % g0)
            gens = tuple(g // g0 for g in gens)
        uniq = sorted(set(gens))
        minimal = tuple(_minimal_generators(uniq))
        if strict and minimal != gens:
            raise ValidationError(
                "generators %r are not a sorted minimal generating set" % (gens,)
            )
        self.gens = minimal
        self.apery = _apery_table(self.gens)
        self._cache = {}

    # -- basic queries -----------------------------------------------------

    def __contains__(self, b):
        return self.contains(b)

    def contains(self, b):
        """True iff b lies in the semigroup."""
        if b < 0:
            return False
        return self.apery[b % self.gens[0]] <= b

    def frobenius(self):
        """Largest integer not in the semigroup (-1 for N itself)."""
        return max(self.apery) - self.gens[0]

    def multiplicity(self):
        return self.gens[0]

    def embedding_dimension(self):
        return len(self.gens)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return "NumericalSemigroup%r" % (self.gens,)

    def text(self):
        return "<%s>" % ",".join(str(g) for g in self.gens)

    @classmethod
    def parse(cls, s, strict=False):
        s = s.strip()
        if not (s.startswith("<") and s.endswith(">")):
            raise ValidationError("expected <a1,a2,...,an>, got %r" % s)
        try:
            gens = [int(tok) for tok in s[1:-1].split(",")]
        except ValueError:
            raise ValidationError("expected <a1,a2,...,an>, got %r" % s) from None
        return cls(gens, strict=strict)

    def to_json(self):
        return {"gens": list(self.gens)}

    @classmethod
    def from_json(cls, obj, strict=False):
        if not isinstance(obj, dict) or "gens" not in obj:
            raise ValidationError("semigroup JSON must be an object with 'gens'")
        return cls(obj["gens"], strict=strict)

    # -- fibers ------------------------------------------------------------

    def fiber(self, b):
        """All factorizations of b over the generators, as a Fiber."""
        key = ("fiber", b)
        hit = self._cache.get(key)
        if hit is None:
            hit = Fiber(b, tuple(sorted(_factorizations(self.gens, b))))
            self._cache[key] = hit
        return hit

    # -- gluings -----------------------------------------------------------

    def gluing_decompositions(self):
        """Unordered partitions {B, C} of the generators that are gluings.

        {B, C} is a gluing iff lcm(gcd B, gcd C) lies in <B> and in <C>
        (both monoids taken inside N, unscaled).
        """
        gens = self.gens
        n = len(gens)
        out = []
        for mask in range(0, (1 << (n - 1)) - 1):
            # gens[0] always goes to B, so each unordered partition shows once
            part_b = (gens[0],) + tuple(
                gens[i] for i in range(1, n) if (mask >> (i - 1)) & 1
            )
            part_c = tuple(
                gens[i] for i in range(1, n) if not ((mask >> (i - 1)) & 1)
            )
            big = lcm(_gcd_all(part_b), _gcd_all(part_c))
            if submonoid_contains(part_b, big) and submonoid_contains(part_c, big):
                out.append((part_b, part_c))
        out.sort()
        return out


def _gcd_all(vals):
    g = 0
    for v in vals:
        g = gcd(g, v)
    return g


@lru_cache(maxsize=200000)
def semigroup(gens):
    """Cached constructor; gens is a tuple of positive integers."""
    return NumericalSemigroup(gens)


def submonoid_contains(gens, value):
    """Membership of value in the (possibly non-numerical) monoid <gens>."""
    d = _gcd_all(gens)
    if value % d != 0:
        return False
    return semigroup(tuple(g // d for g in gens)).contains(value // d)


def _factorizations(gens, b):
    """All u >= 0 with sum(u_i * gens_i) == b.

    Prunes with membership in the prefix monoids, so the search tree stays
    proportional to the output even for large degrees.
    """
    if b < 0:
        return []
    n = len(gens)
    out = []
    u = [0] * n
    prefixes = []
    for i in range(n):
        pref = gens[: i + 1]
        d = _gcd_all(pref)
        prefixes.append((d, semigroup(tuple(g // d for g in pref))))

    def contains(i, r):
        d, sub = prefixes[i]
        return r % d == 0 and sub.contains(r // d)

    def rec(i, residual):
        if i == 0:
            if residual % gens[0] == 0:
                u[0] = residual // gens[0]
                out.append(tuple(u))
                u[0] = 0
            return
        g = gens[i]
        for k in range(residual // g + 1):
            rest = residual - k * g
            if contains(i - 1, rest):
                u[i] = k
                rec(i - 1, rest)
        u[i] = 0

    rec(n - 1, b)
    return out


class Fiber:
    """A fiber (set of factorizations) together with its support graph.

    Two factorizations are adjacent when they share a coordinate where
    both are positive.
    """

    __slots__ = ("degree", "elements", "_components", "_index")

    def __init__(self, degree, elements):
        self.degree = degree
        self.elements = elements
        self._components = None
        self._index = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def adjacent(self, i, j):
        a, b = self.elements[i], self.elements[j]
        return any(x > 0 and y > 0 for x, y in zip(a, b))

    def components(self):
        """Connected components of the support graph, as index lists."""
        if self._components is not None:
            return self._components
        m = len(self.elements)
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        if m:
            n = len(self.elements[0])
            for coord in range(n):
                first = None
                for idx, u in enumerate(self.elements):
                    if u[coord] > 0:
                        if first is None:
                            first = idx
                        else:
                            union(first, idx)
        groups = {}
        for idx in range(m):
            groups.setdefault(find(idx), []).append(idx)
        self._components = [sorted(v) for _, v in sorted(groups.items())]
        return self._components

    def component_elements(self):
        """Components as sorted tuples of factorization vectors."""
        return [
            tuple(self.elements[i] for i in comp) for comp in self.components()
        ]
