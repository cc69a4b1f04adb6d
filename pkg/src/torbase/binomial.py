"""Pure-difference binomials as integer kernel vectors, plus basis sets.

A binomial x^u - x^v with sum(u_i a_i) == sum(v_i a_i) is stored as the
vector z = u - v, sign-normalized so the first nonzero entry is positive.
u and v are then the positive and negative parts of z.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidationError


def normalize_sign(z):
    """Flip z so its first nonzero entry is positive."""
    for x in z:
        if x > 0:
            return tuple(z)
        if x < 0:
            return tuple(-y for y in z)
    raise ValidationError("zero vector is not a binomial")


def positive_part(z):
    return tuple(x if x > 0 else 0 for x in z)


def negative_part(z):
    return tuple(-x if x < 0 else 0 for x in z)


def primitive_vector(z):
    """Divide out the gcd of the entries (keeping orientation)."""
    g = 0
    for x in z:
        g = gcd(g, abs(x))
    if g in (0, 1):
        return tuple(z)
    return tuple(x // g for x in z)


@dataclass(frozen=True)
class KernelBinomial:
    """Sign-normalized kernel vector with its degree sum(u_i a_i)."""

    z: tuple
    degree: int

    @property
    def u(self):
        return positive_part(self.z)

    @property
    def v(self):
        return negative_part(self.z)

    def to_json(self):
        return {"u": list(self.u), "v": list(self.v)}

    def __str__(self):
        return "%r - %r" % (self.u, self.v)


def make_binomial(z, gens):
    """Build a KernelBinomial from an arbitrary kernel vector."""
    z = normalize_sign(z)
    if len(z) != len(gens):
        raise ValidationError("vector length does not match generator count")
    u = positive_part(z)
    degree = sum(ui * ai for ui, ai in zip(u, gens))
    wdeg = sum(zi * ai for zi, ai in zip(z, gens))
    if wdeg != 0:
        raise ValidationError("vector %r is not in the kernel" % (z,))
    return KernelBinomial(z, degree)


def binomial_from_parts(u, v, gens):
    return make_binomial(tuple(a - b for a, b in zip(u, v)), gens)


def binomial_from_json(obj, gens):
    if not isinstance(obj, dict) or "u" not in obj or "v" not in obj:
        raise ValidationError("binomial JSON needs 'u' and 'v'")
    return binomial_from_parts(tuple(obj["u"]), tuple(obj["v"]), gens)


class BasisSet:
    """A deduplicated, deterministically ordered set of kernel binomials."""

    __slots__ = ("kind", "elements", "meta")

    def __init__(self, kind, binomials, meta=None):
        seen = {}
        for b in binomials:
            seen[b.z] = b
        self.kind = kind
        self.elements = tuple(
            sorted(seen.values(), key=lambda b: (b.degree, b.u))
        )
        self.meta = dict(meta or {})

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b):
        return any(e.z == b.z for e in self.elements)

    def zset(self):
        return frozenset(b.z for b in self.elements)

    def degrees(self):
        return tuple(sorted({b.degree for b in self.elements}))

    def issubset(self, other):
        return self.zset() <= other.zset()

    def same_elements(self, other):
        return self.zset() == other.zset()

    def to_json(self):
        return {
            "kind": self.kind,
            "elements": [b.to_json() for b in self.elements],
            "meta": self.meta,
        }
