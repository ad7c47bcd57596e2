"""Command-line front end: ``unihopf census|verify|tables``."""

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import TruncSeries, is_prime
from .census import CACHE_ENV, DEFAULT_BUDGET, get_census
from .enumerative import (
    bell_and_atomic,
    c_sequence,
    check_counting2,
    check_counting_inequality,
    class_counts,
    fit_conjecture,
    lagrange_quotient_check,
)
from .errors import BudgetExceeded
from .instances import (
    INSTANCE_NAMES,
    SuperclassFunctions,
    Functions,
    fU_atomic_generators,
    fU_connected_generators,
    instance,
    scf_atomic_generators,
)
from .species import check_hopf_axioms, freeness_certificate

TABLE_KINDS = ("bell", "atomic", "k", "superclass", "c", "inequality", "inequality2", "fit", "lagrange")


def _cache_dir(args):
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "unihopf"


def _prime(s):
    p = int(s)
    if not is_prime(p):
        raise argparse.ArgumentTypeError("%s is not prime" % s)
    return p


def _positive(s):
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _primes(s):
    return [_prime(x) for x in s.split(",") if x]


def _emit(args, kind, p, rows, text_lines):
    if args.format == "json":
        print(json.dumps({"kind": kind, "p": p, "rows": rows}, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def cmd_census(args):
    cen = get_census(args.n, args.p, cache_dir=_cache_dir(args), budget=args.budget)
    rows = [
        {
            "n": args.n,
            "elements": cen.size,
            "classes": cen.num_classes,
            "superclasses": cen.num_superclasses,
        }
    ]
    text = [
        "U_%d(F_%d)" % (args.n, args.p),
        "elements: %d, classes: %d, superclasses: %d"
        % (cen.size, cen.num_classes, cen.num_superclasses),
    ]
    _emit(args, "census", args.p, rows, text)
    return 0


def cmd_verify(args):
    h = instance(args.monoid, args.p, cache_dir=_cache_dir(args), budget=args.budget)
    reports = [check_hopf_axioms(h, args.n_max)]
    failed = not reports[0].ok
    observed = reports[0].observed
    expectations = []
    if args.expect_commutative:
        expectations.append(("commutative", True))
    if args.expect_noncommutative:
        expectations.append(("commutative", False))
    if args.expect_cocommutative:
        expectations.append(("cocommutative", True))
    exp_lines = []
    for prop, want in expectations:
        got = observed[prop]
        ok = got == want
        failed |= not ok
        exp_lines.append(
            "%s expected %s=%s, observed %s" % ("ok" if ok else "FAIL", prop, want, got)
        )
    freeness = args.freeness or args.monoid == "free-d"
    if freeness:
        if args.monoid in ("scfU", "free-d"):
            target, gens = SuperclassFunctions(args.p), scf_atomic_generators(args.p)
        elif args.monoid == "fU":
            target = Functions(args.p)
            gens = (fU_connected_generators if args.generators == "connected" else fU_atomic_generators)(
                args.p
            )
        else:
            print("no freeness certificate for %s" % args.monoid, file=sys.stderr)
            return 2
        reports.append(freeness_certificate(target, gens, args.n_max))
        failed |= not reports[-1].ok
    rows = []
    for r in reports:
        rows.append(
            {
                "n": args.n_max,
                "value": "pass" if r.ok else "fail",
                "subject": r.subject,
                "checks": {k: {"checked": c, "failed": f} for k, (c, f) in r.counts.items()},
                "witnesses": {k: [repr(w) for w in ws] for k, ws in r.failures.items()},
            }
        )
    text = [str(r) for r in reports] + exp_lines
    text.append("verify %s: %s" % (args.monoid, "FAIL" if failed else "pass"))
    _emit(args, "verify", args.p, rows, text)
    return 1 if failed else 0


def _series_rows(values, start=0):
    return [{"n": n, "value": v} for n, v in enumerate(values) if n >= start]


def cmd_tables(args):
    kind = args.kind
    cache = _cache_dir(args)
    n_max = args.n_max
    ok = True
    if kind in ("bell", "atomic"):
        B, A = bell_and_atomic(n_max)
        vals = B if kind == "bell" else A
        rows = _series_rows(vals, 0 if kind == "bell" else 1)
        text = ["n=%d: %d" % (r["n"], r["value"]) for r in rows]
        _emit(args, kind, None, rows, text)
        return 0
    if kind in ("k", "superclass", "c"):
        T = class_counts(args.p, n_max, cache, args.budget)
        if kind == "k":
            rows = _series_rows(T.k)
        elif kind == "superclass":
            rows = _series_rows(T.superclasses)
        else:
            c = c_sequence(T.k)
            rows = _series_rows(c, 1)
            ok = all(r["value"] >= 0 for r in rows)
        text = ["n=%d: %d" % (r["n"], r["value"]) for r in rows]
        text.append(",".join(str(r["value"]) for r in rows))
        _emit(args, kind, args.p, rows, text)
        return 0 if ok else 1
    if kind in ("inequality", "inequality2"):
        fn = check_counting_inequality if kind == "inequality" else check_counting2
        rep = fn(args.p, n_max, cache, args.budget)
        rows = [
            {"n": r["n"], "value": r["margin"], "lhs": r["lhs"], "rhs": r["rhs"], "ok": r["ok"]}
            for r in rep.rows
        ]
        text = [rep.title] + rep.lines()
        text.append("all hold" if rep.ok else "VIOLATED")
        _emit(args, kind, args.p, rows, text)
        return 0 if rep.ok else 1
    if kind == "fit":
        if args.n is None or not args.primes:
            print("fit needs --n and --primes", file=sys.stderr)
            return 2
        res = fit_conjecture(args.n, args.primes, cache, args.budget)
        if res.poly is None:
            rows = [{"n": args.n, "value": None, "error": res.error}]
            text = ["n=%d: no fit (%s)" % (args.n, res.error)]
        else:
            rows = [
                {
                    "n": args.n,
                    "value": str(res.poly),
                    "nonnegative": res.nonnegative,
                    "overdetermined": res.overdetermined,
                    "table_match": res.table_match,
                }
            ]
            text = ["c_%d = %s" % (args.n, res.poly), str(res.poly)]
            if not res.overdetermined:
                text.append("note: as many points as coefficients; the fit is not cross-checked")
            if res.table_match is not None:
                text.append("tabulated value %s" % ("matches" if res.table_match else "DIFFERS"))
        _emit(args, kind, args.primes, rows, text)
        return 0 if res.ok else 1
    if kind == "lagrange":
        T = class_counts(args.p, n_max, cache, args.budget)
        B, _ = bell_and_atomic(n_max)
        cf = TruncSeries(T.k, n_max)
        scf = TruncSeries(T.superclasses, n_max)
        lp = TruncSeries(B, n_max)
        reps = [
            lagrange_quotient_check(cf, scf, "cf/scf"),
            lagrange_quotient_check(scf, lp, "scf/LxPi"),
            lagrange_quotient_check(cf, lp, "cf/LxPi"),
        ]
        rows = [
            {"n": n, "value": {r.title: str(r.rows[n]["value"]) for r in reps}}
            for n in range(n_max + 1)
        ]
        text = []
        for r in reps:
            text.append("%s: %s" % (r.title, ",".join(str(x["value"]) for x in r.rows)))
        ok = all(r.ok for r in reps)
        text.append("all nonnegative integers" if ok else "NEGATIVE OR FRACTIONAL COEFFICIENT")
        _emit(args, kind, args.p, rows, text)
        return 0 if ok else 1
    raise AssertionError(kind)


def build_parser():
    ap = argparse.ArgumentParser(prog="unihopf", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cache-dir", help="census cache (default $%s or ~/.cache/unihopf)" % CACHE_ENV)
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="max group size for censuses")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", parents=[common], help="count classes and superclasses of U_n(F_p)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=_prime, required=True)
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[common], help="check the Hopf monoid axioms")
    v.add_argument("--monoid", choices=INSTANCE_NAMES, required=True)
    v.add_argument("--p", type=_prime, default=2)
    v.add_argument("--n-max", type=int, default=3)
    v.add_argument("--expect-commutative", action="store_true")
    v.add_argument("--expect-noncommutative", action="store_true")
    v.add_argument("--expect-cocommutative", action="store_true")
    v.add_argument("--freeness", action="store_true", help="also certify freeness (fU, scfU)")
    v.add_argument(
        "--generators",
        choices=("atomic", "connected"),
        default="atomic",
        help="fU generator set for the freeness certificate",
    )
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", parents=[common], help="enumerative tables")
    t.add_argument("--kind", choices=TABLE_KINDS, required=True)
    t.add_argument("--p", type=_prime, default=2)
    t.add_argument("--n-max", type=int, default=6)
    t.add_argument("--n", type=int)
    t.add_argument("--primes", type=_primes)
    t.set_defaults(func=cmd_tables)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print("budget exceeded: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
