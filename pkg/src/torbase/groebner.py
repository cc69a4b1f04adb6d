"""Binomial Buchberger, reduced Groebner bases, and the Groebner fan.

All ideals here are graded by the generator degrees, so comparisons only
ever happen between monomials of equal degree and any rational weight
vector plus a lexicographic tiebreak behaves as a term order.  The fan is
walked by facet flipping: each facet of a basis' cone is certified with an
exact LP, a relative-interior point of the facet is nudged across, and the
neighboring reduced basis is recomputed there.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .binomial import (
    BasisSet,
    make_binomial,
    normalize_sign,
    primitive_vector,
)
from .config import default_budget
from .errors import InternalConsistencyError, ResourceLimitError, ValidationError
from .graver import graver
from .linprog import OPTIMAL, lp_max
from .markov import minimal_markov


@dataclass(frozen=True)
class MonomialOrder:
    """Nonnegative rational weights with a lexicographic permutation tiebreak."""

    weights: tuple
    tiebreak: tuple

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValidationError("order weights must be nonnegative")
        if sorted(self.tiebreak) != list(range(len(self.weights))):
            raise ValidationError("tiebreak must be a permutation of 0..n-1")

    @classmethod
    def make(cls, weights, tiebreak=None):
        weights = tuple(Fraction(w) for w in weights)
        if tiebreak is None:
            tiebreak = tuple(range(len(weights)))
        return cls(weights, tuple(tiebreak))

    @classmethod
    def lex(cls, tiebreak):
        return cls(tuple(Fraction(0) for _ in tiebreak), tuple(tiebreak))

    def compare(self, u, v):
        """+1 if x^u > x^v, -1 if smaller, 0 only when u == v."""
        if u == v:
            return 0
        s = sum(w * (a - b) for w, a, b in zip(self.weights, u, v))
        if s > 0:
            return 1
        if s < 0:
            return -1
        for idx in self.tiebreak:
            d = u[idx] - v[idx]
            if d:
                return 1 if d > 0 else -1
        return 0

    def to_json(self):
        return {
            "weights": [str(w) for w in self.weights],
            "tiebreak": list(self.tiebreak),
        }

    @classmethod
    def from_json(cls, obj):
        return cls.make(
            [Fraction(w) for w in obj["weights"]], tuple(obj["tiebreak"])
        )


class MarkedBasis:
    """A reduced Groebner basis with its marking (lead/tail split)."""

    __slots__ = ("order", "elements")

    def __init__(self, order, elements):
        self.order = order
        self.elements = tuple(sorted(elements))  # (lead, tail) pairs

    def key(self):
        return self.elements

    def __len__(self):
        return len(self.elements)

    def cone_normals(self):
        """Primitive lead-minus-tail vectors, deduplicated."""
        seen = []
        for lead, tail in self.elements:
            z = primitive_vector(tuple(a - b for a, b in zip(lead, tail)))
            if z not in seen:
                seen.append(z)
        return seen

    def binomials(self, gens):
        return [
            make_binomial(tuple(a - b for a, b in zip(lead, tail)), gens)
            for lead, tail in self.elements
        ]

    def to_json(self):
        out = []
        for lead, tail in self.elements:
            z = normalize_sign(tuple(a - b for a, b in zip(lead, tail)))
            u = tuple(x if x > 0 else 0 for x in z)
            v = tuple(-x if x < 0 else 0 for x in z)
            out.append(
                {
                    "u": list(u),
                    "v": list(v),
                    "lead": "u" if u == lead else "v",
                }
            )
        return {"order": self.order.to_json(), "elements": out}


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _top_reduce(lead, tail, basis, order):
    """Reduce until no basis lead divides the larger monomial.  None if zero."""
    while True:
        if lead == tail:
            return None
        if order.compare(lead, tail) < 0:
            lead, tail = tail, lead
        for glead, gtail in basis:
            if _divides(glead, lead):
                lead = tuple(a - b + c for a, b, c in zip(lead, glead, gtail))
                break
        else:
            return lead, tail


def _tail_reduce(tail, basis):
    changed = True
    while changed:
        changed = False
        for glead, gtail in basis:
            if _divides(glead, tail):
                tail = tuple(a - b + c for a, b, c in zip(tail, glead, gtail))
                changed = True
                break
    return tail


def reduced_groebner(s, order, seed=None):
    """The reduced Groebner basis of the toric ideal for the given order.

    seed may carry extra known ideal binomials (as (m1, m2) monomial pairs);
    the fan walk passes the neighboring basis to make completion cheap.
    """
    gens = s.gens
    if len(order.weights) != len(gens):
        raise ValidationError("order dimension does not match generator count")
    basis = []
    start = [(b.u, b.v) for b in minimal_markov(s)]
    if seed:
        start.extend(seed)
    seen = set()
    for u, v in start:
        if order.compare(u, v) < 0:
            u, v = v, u
        if (u, v) not in seen:
            seen.add((u, v))
            basis.append((u, v))
    basis.sort()

    def lcm_vec(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    heap = []

    def push_pair(i, j):
        l1, l2 = basis[i][0], basis[j][0]
        if all(min(a, b) == 0 for a, b in zip(l1, l2)):
            return  # coprime leads: S-pair reduces to zero
        big = lcm_vec(l1, l2)
        deg = sum(a * x for a, x in zip(gens, big))
        heapq.heappush(heap, (deg, big, i, j))

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push_pair(i, j)
    while heap:
        _, big, i, j = heapq.heappop(heap)
        (l1, t1), (l2, t2) = basis[i], basis[j]
        m1 = tuple(a - b + c for a, b, c in zip(big, l1, t1))
        m2 = tuple(a - b + c for a, b, c in zip(big, l2, t2))
        red = _top_reduce(m1, m2, basis, order)
        if red is None:
            continue
        basis.append(red)
        k = len(basis) - 1
        for i2 in range(k):
            push_pair(i2, k)

    # minimalize: drop elements whose lead is divisible by another lead
    basis.sort()
    keep = []
    for idx, (lead, tail) in enumerate(basis):
        dominated = False
        for jdx, (l2, _) in enumerate(basis):
            if jdx != idx and _divides(l2, lead) and (l2 != lead or jdx < idx):
                dominated = True
                break
        if not dominated:
            keep.append((lead, tail))
    # tail-reduce against the other survivors
    reduced = []
    for lead, tail in keep:
        others = [g for g in keep if g[0] != lead]
        reduced.append((lead, _tail_reduce(tail, others)))
    return MarkedBasis(order, reduced)


def _shift_nonneg(w, gens):
    """Add a multiple of the degree vector to make all weights nonnegative.

    The degree vector pairs to zero with every kernel vector, so this never
    changes a comparison between monomials of equal degree.
    """
    worst = min(wi / ai for wi, ai in zip(w, gens))
    if worst >= 0:
        return tuple(w)
    t = -worst + 1
    return tuple(wi + t * ai for wi, ai in zip(w, gens))


def _interior_order(w, gens):
    return MonomialOrder.make(_shift_nonneg(list(w), gens))


def _facet_point(normals, j):
    """Relative-interior point of the candidate facet normals[j], or None.

    Maximizes the minimum slack of the other cone inequalities on the
    hyperplane normals[j] . w == 0; positive optimum certifies a facet.
    """
    n = len(normals[j])
    others = [z for k, z in enumerate(normals) if k != j]
    if not others:
        return [Fraction(0)] * n  # half-space cone: the hyperplane is the facet
    # variables: w_0..w_{n-1}, t ;  maximize t
    c = [0] * n + [1]
    a_ub = [[0] * n + [1]]  # t <= 1
    b_ub = [1]
    for z in others:
        a_ub.append([-x for x in z] + [1])  # t - w.z <= 0
        b_ub.append(0)
    a_eq = [list(normals[j]) + [0]]
    b_eq = [0]
    status, x, value = lp_max(c, a_ub, b_ub, a_eq, b_eq)
    if status != OPTIMAL or value <= 0:
        return None
    return x[:n]


def _flip(s, basis, normals, j, budget):
    """Cross the facet with normal normals[j]; return the neighbor basis."""
    point = _facet_point(normals, j)
    if point is None:
        return None
    zj = normals[j]
    eps = Fraction(1)
    for _ in range(256):
        w_new = [p - eps * z for p, z in zip(point, zj)]
        neighbor = reduced_groebner(
            s, _interior_order(w_new, s.gens), seed=basis.elements
        )
        ok = all(
            sum(p * x for p, x in zip(point, z)) >= 0
            for z in neighbor.cone_normals()
        )
        if ok and neighbor.key() != basis.key():
            return neighbor
        eps /= 2
    raise InternalConsistencyError("facet flip failed to converge")


def groebner_fan(s, budget=None):
    """All distinct marked reduced Groebner bases, sorted canonically."""
    hit = s._cache.get("fan")
    if hit is not None:
        return hit
    budget = budget or default_budget()
    gens = s.gens
    if len(gens) < 2:
        s._cache["fan"] = []
        return []
    start = reduced_groebner(
        s, MonomialOrder.make([Fraction(1)] * len(gens))
    )
    seen = {start.key(): start}
    queue = [start]
    while queue:
        budget.check_deadline()
        basis = queue.pop(0)
        normals = basis.cone_normals()
        for j in range(len(normals)):
            neighbor = _flip(s, basis, normals, j, budget)
            if neighbor is None:
                continue
            if neighbor.key() not in seen:
                if len(seen) >= budget.fan_cap:
                    raise ResourceLimitError(
                        "fan exceeded %d cones" % budget.fan_cap
                    )
                seen[neighbor.key()] = neighbor
                queue.append(neighbor)
    fan = [seen[k] for k in sorted(seen)]
    s._cache["fan"] = fan
    return fan


def initial_ideal_generator_counts(s, budget=None):
    """Sorted sizes of the reduced bases across the fan."""
    return sorted(len(g) for g in groebner_fan(s, budget))


def universal_groebner(s, budget=None):
    """Union of all reduced Groebner bases, unmarked.

    Falls back to the fiber-edge characterization over the Graver basis if
    the fan traversal blows its budget.
    """
    try:
        fan = groebner_fan(s, budget)
    except ResourceLimitError:
        return universal_groebner_by_fiber_edges(s, budget)
    elems = []
    for basis in fan:
        elems.extend(basis.binomials(s.gens))
    return BasisSet(
        "groebner-universal",
        elems,
        {"gens": list(s.gens), "method": "fan", "bases": len(fan)},
    )


def _is_fiber_edge(points, u, v):
    """True iff segment [u, v] is an edge of conv(points)."""
    n = len(u)
    diff = [a - b for a, b in zip(u, v)]
    a_eq = [diff]
    b_eq = [0]
    rows = []
    for p in points:
        if p == u or p == v:
            continue
        rows.append([x - y for x, y in zip(p, u)])  # want w.(p - u) <= -1
    if not rows:
        return True
    # Constraint generation: exact LPs get slow with many rows, so solve over a
    # working subset and add the most violated row until none remain.
    active = []
    w = [Fraction(0)] * n
    while True:
        # Scan with cleared denominators so the inner loop is integer only.
        scale = 1
        for wi in w:
            scale = scale * wi.denominator // gcd(scale, wi.denominator)
        iw = [int(wi * scale) for wi in w]
        worst = None
        worst_val = -scale
        for row in rows:
            val = sum(wi * ri for wi, ri in zip(iw, row))
            if val > worst_val:
                worst_val = val
                worst = row
        if worst_val <= -scale:
            return True
        active.append(worst)
        status, w, _ = lp_max([0] * n, active, [-1] * len(active), a_eq, b_eq)
        if status != OPTIMAL:
            return False


def universal_groebner_by_fiber_edges(s, budget=None):
    """Graver elements whose segment is an edge of its fiber's hull."""
    elems = []
    for b in graver(s, budget):
        points = s.fiber(b.degree).elements
        if _is_fiber_edge(points, b.u, b.v):
            elems.append(b)
    return BasisSet(
        "groebner-universal",
        elems,
        {"gens": list(s.gens), "method": "fiber-edge"},
    )
