"""Closed-form bases for universally free semigroups with three generators.

Such semigroups are exactly the Betti divisible ones and have the shape
A = {d2*d3, d1*d3, f3*d1*d2} with d1, d2, d3 pairwise coprime and
gcd(f3, d3) = 1.  Their bases then have explicit descriptions:

  Markov = critical = Graver = {x1^d1 - x2^d2} union
           {x3^d3 - x1^((f3-k)d1) x2^(k d2) : k = 0..f3}      (f3 + 2 elements)
  universal Groebner = circuits =
           {x1^d1 - x2^d2, x1^(f3 d1) - x3^d3, x2^(f3 d2) - x3^d3}
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .binomial import BasisSet, binomial_from_parts
from .classify import is_universally_free, unique_writing
from .errors import InternalConsistencyError, ValidationError
from .markov import betti_elements, critical_exponents
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Ed3Parameters:
    d1: int
    d2: int
    d3: int
    f3: int

    def generators(self):
        """Role order (a1, a2, a3) = (d2 d3, d1 d3, f3 d1 d2)."""
        return (self.d2 * self.d3, self.d1 * self.d3, self.f3 * self.d1 * self.d2)

    def to_json(self):
        return {"d": [self.d1, self.d2, self.d3], "f3": self.f3}


def validate_parameters(p):
    vals = (p.d1, p.d2, p.d3, p.f3)
    if any(v < 1 for v in vals):
        raise ValidationError("parameters must be positive")
    for i, a in enumerate((p.d1, p.d2, p.d3)):
        for b in (p.d1, p.d2, p.d3)[i + 1 :]:
            if gcd(a, b) != 1:
                raise ValidationError("d1, d2, d3 must be pairwise coprime")
    if gcd(p.f3, p.d3) != 1:
        raise ValidationError("f3 must be coprime to d3")
    gens = p.generators()
    s = NumericalSemigroup(gens)
    if set(s.gens) != set(gens) or len(set(gens)) != 3:
        raise ValidationError(
            "parameters do not give a minimal 3-generator semigroup: %r" % (gens,)
        )
    return s


def closed_form_bases(p):
    """Bases straight from the parameters, in sorted-generator coordinates.

    Returns (semigroup, dict) with keys markov, critical, graver, circuits,
    universal_groebner.
    """
    s = validate_parameters(p)
    role_gens = p.generators()
    order = sorted(range(3), key=lambda i: role_gens[i])
    inv = [order.index(i) for i in range(3)]

    def vec(role_exps):
        out = [0, 0, 0]
        for role, e in enumerate(role_exps):
            out[inv[role]] = e
        return tuple(out)

    def binom(u_roles, v_roles):
        return binomial_from_parts(vec(u_roles), vec(v_roles), s.gens)

    markov = [binom((p.d1, 0, 0), (0, p.d2, 0))]
    for k in range(p.f3 + 1):
        markov.append(
            binom((0, 0, p.d3), ((p.f3 - k) * p.d1, k * p.d2, 0))
        )
    ugb = [
        binom((p.d1, 0, 0), (0, p.d2, 0)),
        binom((p.f3 * p.d1, 0, 0), (0, 0, p.d3)),
        binom((0, p.f3 * p.d2, 0), (0, 0, p.d3)),
    ]
    meta = {"gens": list(s.gens), "params": p.to_json()}
    return s, {
        "markov": BasisSet("markov-universal", markov, meta),
        "critical": BasisSet("critical", markov, meta),
        "graver": BasisSet("graver", markov, meta),
        "circuits": BasisSet("circuits", ugb, meta),
        "universal_groebner": BasisSet("groebner-universal", ugb, meta),
    }


def classify_ed3(s):
    """(is_universally_free, parameters-or-None) for a 3-generator semigroup.

    Role 3 goes to the generator with f_i > 1; when all f_i are 1 the two
    Betti degrees coincide and the last generator takes role 3.
    """
    if len(s.gens) != 3:
        raise ValidationError("classify_ed3 needs exactly three generators")
    if not is_universally_free(s):
        return False, None
    uw = unique_writing(s)
    big = [i for i in range(3) if uw.f[i] != 1]
    if len(big) > 1:
        raise InternalConsistencyError(
            "universally free but unique writing has two f_i > 1"
        )
    r3 = big[0] if big else 2
    rest = [i for i in range(3) if i != r3]
    r1, r2 = rest
    p = Ed3Parameters(uw.d[r1], uw.d[r2], uw.d[r3], uw.f[r3])
    rebuilt, _ = closed_form_bases(p)
    if rebuilt.gens != s.gens:
        raise InternalConsistencyError("ed3 parameter recovery failed")
    expect = {uw.d[r1] * uw.d[r2] * uw.d[r3], p.f3 * uw.d[r1] * uw.d[r2] * uw.d[r3]}
    if set(betti_elements(s)) != expect:
        raise InternalConsistencyError("ed3 Betti degrees do not match shape")
    return True, p
