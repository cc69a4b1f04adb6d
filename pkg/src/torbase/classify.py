"""Family classification: freeness, circuits, Betti divisibility, robustness.

The freeness notions are all phrased through gluings.  An arrangement
(b_1, ..., b_n) of the generators is free when, for every i, the element
lcm(b_i, gcd(b_{i+1}, ..., b_n)) lies in the monoid generated by the tail.
Free = some arrangement works; telescopic = the descending arrangement
works; universally free = all of them work, which is equivalent to the
subset condition checked by universally_free_witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .binomial import BasisSet, binomial_from_parts, make_binomial
from .errors import InternalConsistencyError, ValidationError
from .graver import graver
from .groebner import universal_groebner
from .markov import (
    betti_elements,
    critical_binomials,
    critical_exponents,
    is_complete_intersection,
    minimal_markov,
    moves_connect_betti_fibers,
    universal_markov,
)
from .semigroup import NumericalSemigroup, submonoid_contains


def _cached(s, key, fn):
    hit = s._cache.get(key)
    if hit is None:
        hit = fn()
        s._cache[key] = hit
    return hit


def _gcd_all(vals):
    g = 0
    for v in vals:
        g = gcd(g, v)
    return g


# -- circuits ----------------------------------------------------------------


def circuits(s):
    """x_i^{a_j/g} - x_j^{a_i/g} for every generator pair, g = gcd(a_i, a_j)."""
    return _cached(s, "circuits", lambda: _circuits(s))


def _circuits(s):
    gens = s.gens
    n = len(gens)
    elems = []
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(gens[i], gens[j])
            z = [0] * n
            z[i] = gens[j] // g
            z[j] = -(gens[i] // g)
            elems.append(make_binomial(tuple(z), gens))
    return BasisSet("circuits", elems, {"gens": list(gens)})


# -- freeness ----------------------------------------------------------------


def splits_off(head, tail):
    """The single gluing step: lcm(head, gcd(tail)) in <tail>."""
    return submonoid_contains(tail, lcm(head, _gcd_all(tail)))


def is_free_for_arrangement(s, arrangement):
    """Check the gluing chain for one arrangement of the generators."""
    arrangement = tuple(arrangement)
    if sorted(arrangement) != list(s.gens):
        raise ValidationError(
            "arrangement %r is not a permutation of the generators" % (arrangement,)
        )
    for i in range(len(arrangement) - 1):
        if not splits_off(arrangement[i], arrangement[i + 1 :]):
            return False
    return True


def free_arrangement_witness(s):
    """Lexicographically smallest free arrangement, or None."""
    return _cached(s, "free_witness", lambda: _free_witness(tuple(s.gens)))


def _free_witness(gens):
    if len(gens) <= 1:
        return gens
    for i, a in enumerate(gens):
        rest = gens[:i] + gens[i + 1 :]
        if splits_off(a, rest):
            sub = _free_witness(rest)
            if sub is not None:
                return (a,) + sub
    return None


def is_free(s):
    return free_arrangement_witness(s) is not None


def is_telescopic(s):
    """Free for the descending arrangement."""
    if len(s.gens) <= 1:
        return True
    return is_free_for_arrangement(s, tuple(reversed(s.gens)))


def universally_free_witness(s):
    """None if every arrangement is free; else a failing (head, tail-set).

    Uses the subset form: every generator must split off from every subset
    it belongs to (of size >= 2).  Subsets are scanned smallest first.
    """
    return _cached(s, "uf_witness", lambda: _uf_witness(s))


def _uf_witness(s):
    gens = s.gens
    n = len(gens)
    subsets = []
    for mask in range(1, 1 << n):
        members = tuple(gens[i] for i in range(n) if (mask >> i) & 1)
        if len(members) >= 2:
            subsets.append(members)
    subsets.sort(key=lambda t: (len(t), t))
    for sub in subsets:
        for k, a in enumerate(sub):
            rest = sub[:k] + sub[k + 1 :]
            if not splits_off(a, rest):
                return (a, sub)
    return None


def is_universally_free(s):
    return universally_free_witness(s) is None


# -- unique writing and Betti divisibility -----------------------------------


@dataclass(frozen=True)
class UniqueWriting:
    """a_i = f_i * prod_{j != i} d_j with d_i = gcd of the other generators."""

    d: tuple
    f: tuple


def unique_writing(s):
    return _cached(s, "unique_writing", lambda: _unique_writing(s))


def _unique_writing(s):
    gens = s.gens
    n = len(gens)
    if n < 2:
        raise ValidationError("unique writing needs at least two generators")
    d = tuple(_gcd_all(gens[:i] + gens[i + 1 :]) for i in range(n))
    f = []
    for i in range(n):
        prod = 1
        for j in range(n):
            if j != i:
                prod *= d[j]
        if gens[i] % prod != 0:
            raise InternalConsistencyError("unique writing does not divide")
        f.append(gens[i] // prod)
    f = tuple(f)
    for i in range(n):
        for j in range(i + 1, n):
            if gcd(d[i], d[j]) != 1:
                raise InternalConsistencyError("d_i are not pairwise coprime")
        if gcd(f[i], d[i]) != 1:
            raise InternalConsistencyError("gcd(f_i, d_i) != 1")
    return UniqueWriting(d, f)


def is_betti_divisible(s):
    """Betti degrees form a divisibility chain.

    Computed both from the Betti degrees themselves and from the shape of
    the unique writing (two smallest f_i equal 1, remaining ones chained by
    divisibility); the two routes must agree.
    """
    return _cached(s, "betti_divisible", lambda: _is_betti_divisible(s))


def _is_betti_divisible(s):
    betti = betti_elements(s)
    direct = all(betti[i + 1] % betti[i] == 0 for i in range(len(betti) - 1))
    if len(s.gens) >= 2:
        f = sorted(unique_writing(s).f)
        shape = f[0] == 1 and f[1] == 1 and all(
            f[i + 1] % f[i] == 0 for i in range(1, len(f) - 1)
        )
        if shape != direct:
            raise InternalConsistencyError(
                "betti divisibility: degree route %r != shape route %r"
                % (direct, shape)
            )
    return direct


# -- circuit semigroups and robustness ----------------------------------------


def is_circuit_semigroup(s):
    """True iff the circuits generate the toric ideal."""
    return _cached(
        s,
        "circuit_semigroup",
        lambda: moves_connect_betti_fibers(s, [b.z for b in circuits(s)]),
    )


@dataclass(frozen=True)
class RobustnessFlags:
    robust: bool
    generalized_robust: bool
    strongly_robust: bool
    unique_betti_degree: bool


def robustness_flags(s, budget=None):
    return _cached(s, "robustness", lambda: _robustness_flags(s, budget))


def _robustness_flags(s, budget):
    mm = minimal_markov(s)
    um = universal_markov(s)
    gr = graver(s)
    ug = universal_groebner(s, budget)
    unique_betti = len(betti_elements(s)) == 1
    generalized = um.same_elements(ug) if len(s.gens) >= 2 else True
    if len(s.gens) >= 2 and generalized != (
        unique_betti or len(betti_elements(s)) == 0
    ):
        # U = M holds exactly when there is at most one Betti degree
        raise InternalConsistencyError("generalized robustness mismatch")
    robust = ug.issubset(um) and moves_connect_betti_fibers(
        s, [b.z for b in ug]
    ) and len(ug) == len(mm)
    strongly = gr.same_elements(um) and len(gr) == len(mm)
    return RobustnessFlags(robust, generalized, strongly, unique_betti)


# -- the F families and the report --------------------------------------------


@dataclass
class ClassificationReport:
    gens: tuple
    ci: bool
    free: bool
    telescopic: bool
    universally_free: bool
    betti_divisible: bool
    circuit: bool
    families: dict
    robustness: RobustnessFlags | None
    witness: dict

    def to_json(self):
        out = {
            "gens": list(self.gens),
            "ci": self.ci,
            "free": self.free,
            "telescopic": self.telescopic,
            "universally_free": self.universally_free,
            "betti_divisible": self.betti_divisible,
            "circuit": self.circuit,
            "families": dict(self.families),
            "witness": self.witness,
        }
        if self.robustness is not None:
            out["robust"] = self.robustness.robust
            out["generalized_robust"] = self.robustness.generalized_robust
            out["strongly_robust"] = self.robustness.strongly_robust
            out["unique_betti_degree"] = self.robustness.unique_betti_degree
        return out


def family_report(s, with_bases=True, budget=None):
    """Full classification; with_bases=False skips Graver/fan-based families."""
    free = is_free(s)
    telescopic = is_telescopic(s)
    uf = is_universally_free(s)
    bdiv = is_betti_divisible(s)
    circ = is_circuit_semigroup(s)
    ci = is_complete_intersection(s)

    witness = {}
    arr = free_arrangement_witness(s)
    if arr is not None:
        witness["free_arrangement"] = list(arr)
    failing = universally_free_witness(s)
    if failing is not None:
        witness["universally_free_failure"] = {
            "generator": failing[0],
            "subset": list(failing[1]),
        }
    witness["gluings"] = [
        [list(b), list(c)] for b, c in s.gluing_decompositions()
    ]

    families = {"F0": bdiv, "F3": uf, "F5": circ}
    robustness = None
    if with_bases:
        um = universal_markov(s)
        gr = graver(s)
        ug = universal_groebner(s, budget)
        cc = circuits(s)
        families["F1"] = um.same_elements(gr)
        families["F2"] = cc.same_elements(ug)
        families["F4"] = cc.issubset(um)
        robustness = robustness_flags(s, budget)
        _assert_family_inclusions(families)

    report = ClassificationReport(
        gens=s.gens,
        ci=ci,
        free=free,
        telescopic=telescopic,
        universally_free=uf,
        betti_divisible=bdiv,
        circuit=circ,
        families=families,
        robustness=robustness,
        witness=witness,
    )
    _assert_classification_implications(report)
    return report


def _assert_classification_implications(report):
    checks = [
        ("betti_divisible -> universally_free",
         not report.betti_divisible or report.universally_free),
        ("universally_free -> free", not report.universally_free or report.free),
        ("telescopic -> free", not report.telescopic or report.free),
        ("free -> ci", not report.free or report.ci),
        ("universally_free -> circuit",
         not report.universally_free or report.circuit),
    ]
    for name, ok in checks:
        if not ok:
            raise InternalConsistencyError("implication violated: " + name)


def _assert_family_inclusions(families):
    checks = [
        ("F0 -> F1", not families["F0"] or families["F1"]),
        ("F0 -> F2", not families["F0"] or families["F2"]),
        ("F1 -> F4", not families["F1"] or families["F4"]),
        ("F3 -> F4", not families["F3"] or families["F4"]),
        ("F2 -> F3", not families["F2"] or families["F3"]),
        ("F3 -> F5", not families["F3"] or families["F5"]),
    ]
    for name, ok in checks:
        if not ok:
            raise InternalConsistencyError("family inclusion violated: " + name)
