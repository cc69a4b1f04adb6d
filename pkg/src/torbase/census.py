"""Census of free semigroups by Frobenius number, and conjecture scans.

Free semigroups are enumerated constructively: every free semigroup with
more than two generators is a gluing a1*N + d*S' with S' free, d >= 2
coprime to a1, a1 in S', and Frobenius number d*F(S') + a1*(d-1).  Every
candidate is revalidated from scratch (minimal generators, Frobenius,
freeness), so the closed formula is certified rather than trusted.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd, lcm

from .classify import is_free, is_telescopic, is_universally_free
from .errors import ResourceLimitError, ValidationError
from .semigroup import NumericalSemigroup, semigroup, submonoid_contains
from . import groebner, markov

BRUTE_FORCE_CAP = 40


def _divisor_pairs(m):
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append((d, m // d))
        d += 1
    return out


def enumerate_free_with_frobenius(f, _memo=None):
    """All free numerical semigroups with Frobenius number f, as gens tuples."""
    if _memo is None:
        _memo = {}
    if f in _memo:
        return _memo[f]
    found = set()
    if f == -1:
        _memo[f] = ((1,),)
        return _memo[f]
    if f >= 1:
        # two generators: (a-1)(b-1) = f + 1
        for p, q in _divisor_pairs(f + 1):
            a, b = p + 1, q + 1
            if a >= 2 and a != b and gcd(a, b) == 1:
                found.add(tuple(sorted((a, b))))
        # three or more: glue a1 onto d * S'
        for d in range(2, (f + 2) // 3 + 1):
            for fp in range(1, f // d + 1):
                rem = f - d * fp
                if rem <= 0 or rem % (d - 1) != 0:
                    continue
                a1 = rem // (d - 1)
                if a1 < 2 or gcd(a1, d) != 1:
                    continue
                for gens in enumerate_free_with_frobenius(fp, _memo):
                    if len(gens) < 2:
                        continue
                    sp = semigroup(gens)
                    if not sp.contains(a1):
                        continue
                    cand = tuple(sorted({a1} | {d * g for g in gens}))
                    if len(cand) != len(gens) + 1:
                        continue
                    try:
                        t = NumericalSemigroup(cand)
                    except ValidationError:
                        continue
                    if t.gens != cand:
                        continue  # not a minimal generating set
                    if t.frobenius() != f or not is_free(t):
                        continue
                    found.add(cand)
    _memo[f] = tuple(sorted(found))
    return _memo[f]


def brute_force_with_frobenius(f, cap=BRUTE_FORCE_CAP):
    """All free numerical semigroups with Frobenius f, by gap-set enumeration.

    Walks membership decisions for 1..f-1 with closure propagation; f itself
    must stay out and must never become a sum of two members.  The surviving
    semigroups are filtered by is_free, making this an oracle for the
    constructive gluing enumerator.
    """
    if f > cap:
        raise ResourceLimitError("brute force capped at Frobenius %d" % cap)
    if f == -1:
        return ((1,),)
    if f < 1:
        return ()
    results = []
    member = bytearray(f + 1)
    member[0] = 1

    def forced(k):
        return any(member[i] and member[k - i] for i in range(1, k // 2 + 1))

    def rec(k):
        if k == f:
            if not forced(f):
                results.append(_extract_generators(member, f))
            return
        if forced(k):
            member[k] = 1
            rec(k + 1)
            member[k] = 0
        else:
            member[k] = 1
            rec(k + 1)
            member[k] = 0
            rec(k + 1)

    rec(1)
    free = []
    for g in sorted(set(results)):
        s = semigroup(g)
        assert s.gens == g and s.frobenius() == f
        if is_free(s):
            free.append(g)
    return tuple(free)


def _extract_generators(member, f):
    """Minimal generators of the semigroup with the given truncated members."""
    top = 2 * f + 2
    full = bytearray(top + 1)
    for i in range(f + 1):
        full[i] = member[i]
    for i in range(f + 1, top + 1):
        full[i] = 1
    gens = []
    for a in range(1, top + 1):
        if not full[a]:
            continue
        if any(full[b] and full[a - b] for b in range(1, a // 2 + 1)):
            continue
        gens.append(a)
    return tuple(gens)


def census_row(f):
    """(free, telescopic, universally free) counts at Frobenius f."""
    rows = [semigroup(g) for g in enumerate_free_with_frobenius(f)]
    nf = len(rows)
    nt = sum(1 for s in rows if is_telescopic(s))
    nsf = sum(1 for s in rows if is_universally_free(s))
    return nf, nt, nsf


# -- conjecture scans ----------------------------------------------------------


def circuits_subset_universal_markov(s):
    """C_A is contained in M_A iff every circuit joins two different fiber
    components at its own degree (which must then be a Betti degree)."""
    gens = s.gens
    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            big = lcm(gens[i], gens[j])
            fib = s.fiber(big)
            comps = fib.components()
            if len(comps) < 2:
                return False
            g = gcd(gens[i], gens[j])
            u = [0] * n
            v = [0] * n
            u[i] = gens[j] // g
            v[j] = gens[i] // g
            lookup = {}
            for ci, comp in enumerate(comps):
                for idx in comp:
                    lookup[fib.elements[idx]] = ci
            if lookup[tuple(u)] == lookup[tuple(v)]:
                return False
    return True


def _circuit_lcm_prefilter(s):
    """Cheap necessary condition: every pairwise lcm is a Betti candidate."""
    gens = s.gens
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            big = lcm(gens[i], gens[j])
            if markov._generator_graph_connected(s, big):
                return False
    return True


def _partition_universally_free(part):
    d = 0
    for g in part:
        d = gcd(d, g)
    scaled = tuple(g // d for g in part)
    if len(scaled) == 1:
        return True  # a copy of N
    sub = semigroup(scaled)
    return is_universally_free(sub)


def has_universally_free_gluing(s):
    """Some partition {B, C} with lcm(gcd B, gcd C) = lcm(all generators)
    and both parts universally free."""
    gens = s.gens
    n = len(gens)
    target = 1
    for g in gens:
        target = lcm(target, g)
    for mask in range(0, (1 << (n - 1)) - 1):
        part_b = (gens[0],) + tuple(
            gens[i] for i in range(1, n) if (mask >> (i - 1)) & 1
        )
        part_c = tuple(
            gens[i] for i in range(1, n) if not ((mask >> (i - 1)) & 1)
        )
        db = 0
        for g in part_b:
            db = gcd(db, g)
        dc = 0
        for g in part_c:
            dc = gcd(dc, g)
        if lcm(db, dc) != target:
            continue
        if _partition_universally_free(part_b) and _partition_universally_free(
            part_c
        ):
            return True
    return False


def evaluate_conjecture(s, which):
    """Returns (lhs, rhs) for the requested conjecture on one semigroup."""
    rhs = is_universally_free(s)
    if which == "1":
        if rhs:
            lhs = circuits_subset_universal_markov(s)
        else:
            lhs = _circuit_lcm_prefilter(s) and circuits_subset_universal_markov(s)
    elif which == "glue":
        lhs = has_universally_free_gluing(s)
    elif which == "2":
        mu = len(markov.minimal_markov(s))
        counts = groebner.initial_ideal_generator_counts(s)
        lhs = all(c == mu for c in counts)
    else:
        raise ValidationError("unknown conjecture %r" % which)
    return lhs, rhs


@dataclass
class ScanJob:
    dim: int
    lo: int
    hi: int
    conjecture: str = "1"
    checkpoint: str | None = None
    checkpoint_every: int = 20000

    def tuples(self):
        return itertools.combinations(range(self.lo, self.hi + 1), self.dim)


def _is_minimal_tuple(t):
    g = 0
    for a in t:
        g = gcd(g, a)
    if g != 1:
        return False
    for i, a in enumerate(t):
        rest = t[:i] + t[i + 1 :]
        if submonoid_contains(rest, a):
            return False
    return True


def scan(job, resume=True):
    """Run a conjecture scan; yields finding dicts, appends them to the
    checkpoint file (JSON lines), and records cursor lines for resume.

    Output is deterministic: resuming produces the identical byte stream
    the uninterrupted run would have written.
    """
    start = 0
    emitted = []
    if job.checkpoint and resume:
        try:
            with open(job.checkpoint, "r", encoding="utf-8") as fh:
                for line in fh:
                    rec = json.loads(line)
                    if rec.get("type") == "cursor":
                        start = max(start, rec["next_index"])
                    elif rec.get("type") == "finding":
                        emitted.append(rec)
                        start = max(start, rec["index"] + 1)
                    elif rec.get("type") == "done":
                        # finished log: nothing left to do, keep it untouched
                        return emitted
        except FileNotFoundError:
            pass
    mode = "a" if resume else "w"
    out = open(job.checkpoint, mode, encoding="utf-8") if job.checkpoint else None

    def emit(rec):
        if out:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
            out.flush()
        return rec

    findings = list(emitted)
    try:
        for index, t in enumerate(job.tuples()):
            if index < start:
                continue
            if _is_minimal_tuple(t):
                try:
                    s = semigroup(t)
                    lhs, rhs = evaluate_conjecture(s, job.conjecture)
                    if lhs != rhs:
                        rec = emit(
                            {
                                "type": "finding",
                                "index": index,
                                "conjecture": job.conjecture,
                                "tuple": list(t),
                                "lhs": lhs,
                                "rhs": rhs,
                            }
                        )
                        findings.append(rec)
                except ResourceLimitError as exc:
                    rec = emit(
                        {
                            "type": "finding",
                            "index": index,
                            "conjecture": job.conjecture,
                            "tuple": list(t),
                            "skipped": str(exc),
                        }
                    )
                    findings.append(rec)
            if out and (index + 1) % job.checkpoint_every == 0:
                out.write(
                    json.dumps(
                        {"type": "cursor", "next_index": index + 1}, sort_keys=True
                    )
                    + "\n"
                )
                out.flush()
        if out:
            out.write(
                json.dumps({"type": "done", "conjecture": job.conjecture}) + "\n"
            )
    finally:
        if out:
            out.close()
    return findings
