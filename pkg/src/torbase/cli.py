"""Command line interface.

Subcommands: bases, classify, betti, groebner, ed3, census, scan.
Exit codes: 0 success, 2 validation error, 3 resource limit exceeded,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .census import (
    ScanJob,
    brute_force_with_frobenius,
    census_row,
    enumerate_free_with_frobenius,
    scan,
)
from .classify import circuits, family_report
from .config import Budget
from .ed3 import Ed3Parameters, classify_ed3, closed_form_bases
from .errors import (
    InternalConsistencyError,
    ResourceLimitError,
    TorbaseError,
    ValidationError,
)
from .graver import graver
from .groebner import (
    MonomialOrder,
    groebner_fan,
    initial_ideal_generator_counts,
    reduced_groebner,
    universal_groebner,
)
from .markov import (
    betti_elements,
    critical_binomials,
    minimal_markov,
    universal_markov,
)
from .semigroup import NumericalSemigroup


def _parse_gens(values):
    return NumericalSemigroup(values)


def _print(obj, as_json):
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        _pretty(obj)


def _pretty(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print("%s%s:" % (pad, k))
                _pretty(v, indent + 1)
            else:
                print("%s%s: %s" % (pad, k, _flat(v)))
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                _pretty(v, indent)
                print()
            else:
                print("%s%s" % (pad, _flat(v)))
    else:
        print("%s%s" % (pad, obj))


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


BASIS_KINDS = ("circuits", "critical", "markov", "umarkov", "graver", "ugb")


def _basis(s, kind, budget):
    if kind == "circuits":
        return circuits(s)
    if kind == "critical":
        return critical_binomials(s)
    if kind == "markov":
        return minimal_markov(s)
    if kind == "umarkov":
        return universal_markov(s)
    if kind == "graver":
        return graver(s, budget)
    if kind == "ugb":
        return universal_groebner(s, budget)
    raise ValidationError("unknown basis kind %r" % kind)


def _cmd_bases(args, budget):
    s = _parse_gens(args.gens)
    kinds = BASIS_KINDS if args.kind == "all" else (args.kind,)
    out = {"semigroup": s.to_json(), "bases": {}}
    for kind in kinds:
        out["bases"][kind] = _basis(s, kind, budget).to_json()
    _print(out, args.json)
    return 0


def _cmd_classify(args, budget):
    s = _parse_gens(args.gens)
    report = family_report(s, with_bases=args.families, budget=budget)
    _print(report.to_json(), args.json)
    return 0


def _cmd_betti(args, budget):
    s = _parse_gens(args.gens)
    out = {"semigroup": s.to_json(), "betti": list(betti_elements(s))}
    _print(out, args.json)
    return 0


def _parse_order(spec, n):
    """Weights 'w1,...,wn' optionally followed by ':p1,...,pn' (1-based)."""
    if ":" in spec:
        wpart, tpart = spec.split(":", 1)
        tiebreak = tuple(int(x) - 1 for x in tpart.split(","))
    else:
        wpart, tiebreak = spec, None
    try:
        weights = [Fraction(x) for x in wpart.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValidationError("bad weight list %r" % wpart) from None
    if len(weights) != n:
        raise ValidationError("expected %d weights" % n)
    if tiebreak is not None and sorted(tiebreak) != list(range(n)):
        raise ValidationError("tiebreak must be a permutation of 1..%d" % n)
    return MonomialOrder.make(weights, tiebreak)


def _cmd_groebner(args, budget):
    s = _parse_gens(args.gens)
    out = {"semigroup": s.to_json()}
    if args.order:
        order = _parse_order(args.order, len(s.gens))
        out["reduced_basis"] = reduced_groebner(s, order).to_json()
    if args.fan:
        fan = groebner_fan(s, budget)
        out["fan"] = [g.to_json() for g in fan]
        out["fan_size"] = len(fan)
    if args.sizes:
        out["initial_ideal_generator_counts"] = initial_ideal_generator_counts(
            s, budget
        )
    if not (args.order or args.fan or args.sizes):
        raise ValidationError("groebner needs --order, --fan, or --sizes")
    _print(out, args.json)
    return 0


def _cmd_ed3(args, budget):
    if args.d:
        try:
            d1, d2, d3 = (int(x) for x in args.d.split(","))
        except ValueError:
            raise ValidationError("--d expects three integers d1,d2,d3") from None
        params = Ed3Parameters(d1, d2, d3, args.f3)
        s, bases = closed_form_bases(params)
        out = {
            "semigroup": s.to_json(),
            "params": params.to_json(),
            "bases": {k: v.to_json() for k, v in bases.items()},
        }
        if args.verify:
            from . import ed3 as _ed3mod
            from .graver import graver as _graver

            ok = (
                bases["graver"].same_elements(_graver(s, budget))
                and bases["markov"].same_elements(universal_markov(s))
                and bases["critical"].same_elements(critical_binomials(s))
                and bases["universal_groebner"].same_elements(
                    universal_groebner(s, budget)
                )
                and bases["circuits"].same_elements(circuits(s))
            )
            if not ok:
                raise InternalConsistencyError(
                    "closed-form bases disagree with computed bases"
                )
            out["verified"] = True
        _print(out, args.json)
        return 0
    if args.gens:
        s = _parse_gens(args.gens)
        uf, params = classify_ed3(s)
        out = {
            "semigroup": s.to_json(),
            "universally_free": uf,
            "params": params.to_json() if params else None,
        }
        _print(out, args.json)
        return 0
    raise ValidationError("ed3 needs --d d1,d2,d3 or generators")


def _cmd_census(args, budget):
    f = args.frobenius
    free = enumerate_free_with_frobenius(f)
    nf, nt, nsf = census_row(f)
    out = {
        "frobenius": f,
        "free": nf,
        "telescopic": nt,
        "universally_free": nsf,
        "semigroups": [list(g) for g in free],
    }
    if args.verify_brute:
        brute = brute_force_with_frobenius(f, cap=args.brute_cap)
        from .classify import is_free as _is_free
        from .semigroup import semigroup as _sg

        brute_free = tuple(sorted(g for g in brute if _is_free(_sg(g))))
        if brute_free != free:
            raise InternalConsistencyError(
                "gluing census disagrees with brute force at f=%d" % f
            )
        out["verified_against_brute_force"] = True
    _print(out, args.json)
    return 0


def _cmd_scan(args, budget):
    job = ScanJob(
        dim=args.dim,
        lo=args.min,
        hi=args.max,
        conjecture=args.conjecture,
        checkpoint=args.checkpoint,
    )
    findings = scan(job, resume=not args.no_resume)
    out = {
        "conjecture": args.conjecture,
        "dim": args.dim,
        "range": [args.min, args.max],
        "findings": findings,
    }
    _print(out, args.json)
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="torbase",
        description="Toric bases and classification for numerical semigroups",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine readable output")

    p = sub.add_parser("bases", help="compute toric bases")
    p.add_argument("gens", nargs="+", type=int)
    p.add_argument("--kind", default="all", choices=BASIS_KINDS + ("all",))
    add_json(p)
    p.set_defaults(fn=_cmd_bases)

    p = sub.add_parser("classify", help="family classification")
    p.add_argument("gens", nargs="+", type=int)
    p.add_argument(
        "--families",
        action="store_true",
        help="also compute the basis-comparison families F1/F2/F4 and robustness",
    )
    add_json(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("betti", help="Betti degrees")
    p.add_argument("gens", nargs="+", type=int)
    add_json(p)
    p.set_defaults(fn=_cmd_betti)

    p = sub.add_parser("groebner", help="Groebner bases and fan")
    p.add_argument("gens", nargs="+", type=int)
    p.add_argument("--order", help="weights w1,..,wn optionally :p1,..,pn tiebreak")
    p.add_argument("--fan", action="store_true")
    p.add_argument("--sizes", action="store_true")
    add_json(p)
    p.set_defaults(fn=_cmd_groebner)

    p = sub.add_parser("ed3", help="three-generator closed forms")
    p.add_argument("gens", nargs="*", type=int)
    p.add_argument("--d", help="d1,d2,d3")
    p.add_argument("--f3", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    add_json(p)
    p.set_defaults(fn=_cmd_ed3)

    p = sub.add_parser("census", help="free semigroups by Frobenius number")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--verify-brute", action="store_true")
    p.add_argument("--brute-cap", type=int, default=40)
    add_json(p)
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("scan", help="conjecture scan over generator tuples")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--conjecture", default="1", choices=("1", "2", "glue"))
    p.add_argument("--checkpoint")
    p.add_argument("--no-resume", action="store_true")
    add_json(p)
    p.set_defaults(fn=_cmd_scan)

    return top


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    budget = Budget.from_env()
    try:
        return args.fn(args, budget)
    except ValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 4


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
