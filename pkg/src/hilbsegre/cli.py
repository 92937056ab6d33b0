"""Command-line front end.

    hilbsegre integrals --n-max 4 --d symbolic --format json
    hilbsegre verify main-theorem --k-max 3 --m-max 6 --n-max 5
    hilbsegre series fit --d-list 1,2,4,5 --order 6

Integral tables are cached in a versioned JSON file under ``--cache-dir``
(default ``$HILBSEGRE_CACHE_DIR`` or ``~/.cache/hilbsegre``).
"""

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from .coeff import D, DPoly, as_rational, rational_to_str
from .integrals import (
    SegreConsistencyError,
    check_chain_vanishing,
    check_delta23_tails,
    check_balanced_chain_sum,
    check_special_sum,
    check_xi,
    integral_record,
    binomial_regrouping_identity,
    rising_product_identity,
)
from .closed_forms import chain_closed_form, double_chain_closed_form
from .operators import apply_op, chain, delta
from .series import (
    SeriesFitError,
    closed_form_for_degree,
    expected_q,
    fit_universal_exponents,
    mop_closed_form,
)
from .symalg import RAW, Element, Monomial, Rules, ThetaSym, degree_of, grading_signature

log = logging.getLogger("hilbsegre")

CACHE_VERSION = 1
CACHE_ENV = "HILBSEGRE_CACHE_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- cache -----------------------------------------------------------------------


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hilbsegre"


class IntegralCache:
    """Integral values keyed by ``(rules, d, n)`` in one JSON file.

    A file written under a different :data:`CACHE_VERSION` is ignored and
    overwritten on the next save.
    """

    def __init__(self, directory):
        self.path = None if directory is None else Path(directory) / f"integrals.v{CACHE_VERSION}.json"
        self.entries = {}
        self.dirty = False
        if self.path is not None and self.path.exists():
            try:
                data = json.loads(self.path.read_text())
            except (OSError, ValueError):
                data = {}
            if data.get("version") == CACHE_VERSION:
                self.entries = data.get("entries", {})
            else:
                log.info("ignoring cache %s with version %r", self.path, data.get("version"))

    @staticmethod
    def key(rules, d, n):
        dtag = "symbolic" if d is None else rational_to_str(d)
        return f"prune={int(rules.prune)};theta1={int(rules.kill_theta1)};d={dtag};n={n}"

    def get(self, rules, d, n):
        raw = self.entries.get(self.key(rules, d, n))
        if raw is None:
            return None
        if d is None:
            return DPoly.from_json(raw)
        return as_rational(Fraction(int(raw[0]), int(raw[1])))

    def put(self, rules, d, n, value):
        if d is None:
            raw = value.to_json()
        else:
            f = Fraction(value)
            raw = [str(f.numerator), str(f.denominator)]
        self.entries[self.key(rules, d, n)] = raw
        self.dirty = True

    def save(self):
        if self.path is None or not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"version": CACHE_VERSION, "entries": self.entries}, sort_keys=True, indent=1)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".integrals-")
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, self.path)
        self.dirty = False


class IntegralSource:
    """Integral values through the cache, computing what is missing."""

    def __init__(self, cache, rules, workers=1):
        self.cache, self.rules, self.workers = cache, rules, workers

    def value(self, n, d=None):
        got = self.cache.get(self.rules, d, n)
        if got is not None:
            return got
        rec = integral_record(n, D if d is None else d, self.rules, self.workers)
        log.info("computed n=%d d=%s (width %d)", n, "symbolic" if d is None else d, rec.chain_count)
        self.cache.put(self.rules, d, n, rec.value)
        return rec.value

    def fixed(self, n, d):
        return self.value(n, as_rational(d))


# -- argument helpers ------------------------------------------------------------------


def _int_list(text):
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _d_mode(text):
    if text.strip().lower() == "symbolic":
        return None
    return _int_list(text)


def _rational(text):
    try:
        return as_rational(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _nonneg(name, value):
    if value < 0:
        raise UsageError(f"{name} must be non-negative")


def _fmt(x):
    """Integers print bare, other rationals as ``num/den``."""
    x = as_rational(x)
    return str(x)


# -- integrals ---------------------------------------------------------------------------


def _render_integrals(rows, d_list, fmt):
    out = io.StringIO()
    if fmt == "json":
        recs = []
        for n, vals in rows:
            if d_list is None:
                recs.append({"n": n, "poly": vals.to_json()})
            else:
                recs.append(
                    {
                        "n": n,
                        "values": [
                            {"d": d, "value": [str(Fraction(v).numerator), str(Fraction(v).denominator)]}
                            for d, v in zip(d_list, vals)
                        ],
                    }
                )
        out.write("[\n" + ",\n".join(json.dumps(r) for r in recs) + "\n]\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        if d_list is None:
            width = max((len(p.coeffs) for _, p in rows), default=0)
            w.writerow(["n"] + [f"d^{i}" for i in range(width)])
            for n, p in rows:
                cs = p.to_strings()
                w.writerow([n] + cs + ["0/1"] * (width - len(cs)))
        else:
            w.writerow(["n"] + [f"d={d}" for d in d_list])
            for n, vals in rows:
                w.writerow([n] + [rational_to_str(v) for v in vals])
    else:
        for n, vals in rows:
            if d_list is None:
                out.write(f"n={n}: {vals}\n")
            else:
                out.write(f"n={n}: " + ", ".join(_fmt(v) for v in vals) + "\n")
    return out.getvalue()


def cmd_integrals(args):
    _nonneg("--n-max", args.n_max)
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    rules = Rules(prune=not args.no_prune, kill_theta1=args.theta1_rule)
    cache = IntegralCache(None if args.no_cache else args.cache_dir)
    src = IntegralSource(cache, rules, args.threads)
    rows = []
    try:
        for n in range(args.n_max + 1):
            if args.d is None:
                rows.append((n, src.value(n)))
            else:
                rows.append((n, [src.fixed(n, d) for d in args.d]))
    except SegreConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        cache.save()
    text = _render_integrals(rows, args.d, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify ------------------------------------------------------------------------------


def _run_grid(name, checks):
    """Run zero-argument checks in order; stop at the first failure."""
    count = 0
    for thunk in checks:
        res = thunk()
        count += 1
        if not res:
            print(f"{name}: {res.describe() if hasattr(res, 'describe') else res}")
            return False
    print(f"{name}: {count} checks passed")
    return True


class _Verdict:
    def __init__(self, passed, text):
        self.passed, self.text = passed, text

    def __bool__(self):
        return self.passed

    def describe(self):
        return self.text


def _suite_vanishing(args):
    def integral_at_3(n):
        def run():
            p = integral_record(n, D).value
            v = p.eval_at(3)
            return _Verdict(v == 0, f"FAIL (n={n}): integral at d=3 is {v}")

        return run

    ok = _run_grid("integral at d=3", [integral_at_3(n) for n in range(1, args.n_max + 1)])
    grid = [
        (k, r, m, n)
        for k in range(1, args.k_max + 1)
        for r in range(k + 1, 3 * k + 1)
        for m in range(args.m_max + 1)
        for n in range(k, args.n_max + 1)
    ]
    ok &= _run_grid("over-weighted chains", [lambda g=g: check_chain_vanishing(*g) for g in grid])
    return ok


def _suite_main(args):
    grid = [
        (k, m, n)
        for k in range(1, args.k_max + 1)
        for m in range(1, args.m_max + 1)
        for n in range(k, args.n_max + 1)
    ]
    ok = _run_grid("balanced chain sums", [lambda g=g: check_balanced_chain_sum(*g) for g in grid])
    grid = [
        (k, r, m, n)
        for k in range(args.k_max + 1)
        for r in range(k + 1)
        for m in range(1, args.m_max + 1)
        for n in range(1, args.n_max + 1)
    ]
    ok &= _run_grid("delta2/delta3 tails", [lambda g=g: check_delta23_tails(*g) for g in grid])
    return ok


def _suite_special_sum(args):
    grid = [
        (k, m, n)
        for k in range(args.k_max + 1)
        for m in range(1, args.m_max + 1)
        for n in range(1, args.n_max + 1)
    ]
    return _run_grid("special sum", [lambda g=g: check_special_sum(*g) for g in grid])


def _suite_xi(args):
    prefixes = [()] + [(j,) for j in range(4)] if args.prefix_max >= 1 else [()]
    if args.prefix_max >= 2:
        prefixes += [(i, j) for i in range(4) for j in range(4)]
    grid = [
        (k, m, n, p)
        for k in range(args.k_max + 1)
        for m in range(args.m_max + 1)
        for n in range(1, args.n_max + 1)
        for p in prefixes
    ]
    return _run_grid("commutator combination", [lambda g=g: check_xi(*g) for g in grid])


def _suite_chains(args):
    def single(k, m, rules):
        def run():
            n = k + 3
            lhs = apply_op(chain(*([1] * k), 0), Element.segre(m, n), rules=rules)
            rhs = chain_closed_form(k, m, n, rules=rules)
            return _Verdict(lhs == rhs, f"FAIL (k={k}, m={m}): d1^k d0 differs from closed form")

        return run

    def double(k, s, m, rules):
        def run():
            n = k + 3
            op = chain(*([1] * (k - 1 - s)), 0, *([1] * s), 0)
            lhs = apply_op(op, Element.segre(m, n), rules=rules)
            rhs = double_chain_closed_form(k, s, m, n, rules=rules)
            return _Verdict(lhs == rhs, f"FAIL (k={k}, s={s}, m={m}): double chain differs from closed form")

        return run

    checks = []
    for rules in (Rules(), RAW):
        for k in range(args.k_max + 1):
            for m in range(args.m_max + 1):
                checks.append(single(k, m, rules))
                for s in range(k):
                    checks.append(double(k, s, m, rules))
    return _run_grid("chain closed forms", checks)


THETA_FUNCTIONS = {
    "constant 1": lambda a: 1,
    "a+1": lambda a: a + 1,
    "a^2": lambda a: a * a,
}


def _suite_identities(args):
    ok = _run_grid(
        "binomial identity",
        [
            (lambda k=k, M=M: _Verdict(binomial_regrouping_identity(k, M), f"FAIL (k={k}, M={M})"))
            for k in range(1, args.combi_k_max + 1)
            for M in range(k)
        ],
    )
    checks = []
    for name, fn in THETA_FUNCTIONS.items():
        for k in range(args.combi2_k_max + 1):
            for N in range(args.combi2_k_max + 1):
                for m in range(6):
                    for a in range(4):
                        checks.append(
                            lambda a=a, N=N, m=m, k=k, fn=fn, name=name: _Verdict(
                                rising_product_identity(a, N, m, k, fn), f"FAIL (a={a}, N={N}, m={m}, k={k}, theta={name})"
                            )
                        )
    ok &= _run_grid("rising-product identity", checks)
    return ok


def random_monomial(rng, max_factors=4, max_index=6, max_s=8):
    """A random theta-monomial; kinds and indices uniform."""
    ts = [ThetaSym(rng.randrange(2), rng.randrange(max_index + 1)) for _ in range(rng.randrange(max_factors + 1))]
    return Monomial(tuple(sorted(ts)), rng.randrange(max_s + 1))


def grading_violation(j, m):
    """``None`` if every term of ``delta_j(m)`` (raw rules) has signature
    ``(w+1, i+j)`` and degree ``deg(m) - 2``; else the offending term."""
    w, i = grading_signature(m)
    deg = degree_of(m)
    level = deg + 4
    out = delta(j, Element.monomial(m, level), rules=RAW)
    for mm, c in out.sorted_terms():
        if grading_signature(mm) != (w + 1, i + j) or degree_of(mm) != deg - 2:
            return mm, c
    return None


def _suite_grading(args):
    rng = random.Random(args.seed)
    checks = []
    for j in range(4):
        for _ in range(args.samples):
            m = random_monomial(rng)

            def run(j=j, m=m):
                bad = grading_violation(j, m)
                return _Verdict(bad is None, f"FAIL (delta_{j} on {m}): term {bad}")

            checks.append(run)
    return _run_grid("grading", checks)


SUITES = {
    "vanishing": _suite_vanishing,
    "main-theorem": _suite_main,
    "wkmain": _suite_special_sum,
    "xi": _suite_xi,
    "chains": _suite_chains,
    "identities": _suite_identities,
    "grading": _suite_grading,
}


def cmd_verify(args):
    for name in ("n_max", "k_max", "m_max", "prefix_max", "combi_k_max", "combi2_k_max", "samples"):
        _nonneg("--" + name.replace("_", "-"), getattr(args, name))
    if args.suite in ("vanishing", "main-theorem") and args.k_max > args.n_max:
        raise UsageError("--k-max may not exceed --n-max")
    try:
        ok = SUITES[args.suite](args)
    except ValueError as exc:
        raise UsageError(str(exc))
    return EXIT_OK if ok else EXIT_FAIL


# -- series --------------------------------------------------------------------------------


def _print_series(s, fmt):
    if fmt == "json":
        print(json.dumps(s.to_json()))
    elif fmt == "csv":
        print(",".join(s.to_strings()))
    else:
        print(", ".join(_fmt(c) for c in s.coeffs))


def cmd_series(args):
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if args.kind == "closed-form":
        _print_series(mop_closed_form(args.c2, args.c1sq, args.c1k, args.order), args.format)
        return EXIT_OK

    cache = IntegralCache(None if args.no_cache else args.cache_dir)
    src = IntegralSource(cache, Rules(), args.threads)
    try:
        if args.kind == "compare":
            bad = 0
            for d in args.d:
                closed = closed_form_for_degree(d, args.order)
                mism = [(n, src.fixed(n, d), closed[n]) for n in range(args.order + 1)]
                mism = [x for x in mism if x[1] != x[2]]
                for n, got, want in mism:
                    print(f"d={d} n={n}: recursion {_fmt(got)} != closed form {_fmt(want)}")
                print(f"d={d}: " + ("MISMATCH" if mism else "equal"))
                bad += len(mism)
            return EXIT_FAIL if bad else EXIT_OK

        try:
            fit = fit_universal_exponents(args.d_list, args.order, src.fixed)
        except SeriesFitError as exc:
            print(f"fit failed: {exc}")
            return EXIT_FAIL
        except ValueError as exc:
            raise UsageError(str(exc))
        for name in ("Q", "L", "C"):
            s = getattr(fit, name)
            print(f"{name} = {s}" if args.format == "text" else f"{name}: " + ",".join(s.to_strings()))
        checks = [
            ("L = -3Q", fit.l_is_minus_3q()),
            ("C = 0", fit.c_is_zero()),
            ("Q = -log(1+t) + log(1+2t)/2", fit.Q == expected_q(args.order)),
        ]
        for text, good in checks:
            print(f"{text}: {'yes' if good else 'NO'}")
        return EXIT_OK if all(g for _, g in checks) else EXIT_FAIL
    finally:
        cache.save()


# -- parser --------------------------------------------------------------------------------


def _add_cache_args(p):
    p.add_argument("--cache-dir", type=Path, default=None, help=f"cache directory (env {CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the expansion")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbsegre",
        description="Segre integrals on Hilbert schemes of points of the plane, by operator recursion.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrals", help="table of integrals for n = 0..n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d", type=_d_mode, default=None, metavar="symbolic|D[,D...]", help="default: symbolic")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--no-prune", action="store_true", help="keep monomials that vanish for dimension reasons")
    p.add_argument("--theta1-rule", action="store_true", help="also kill monomials containing theta_1")
    p.add_argument("--output", "-o", help="write the table here instead of stdout")
    _add_cache_args(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("verify", help="run a checker grid")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--prefix-max", type=int, default=1, help="longest Ad-prefix for the xi suite (at most 2)")
    p.add_argument("--combi-k-max", type=int, default=10)
    p.add_argument("--combi2-k-max", type=int, default=3)
    p.add_argument("--samples", type=int, default=200, help="random monomials per operator (grading)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="closed-form series, comparison and fit")
    ssub = p.add_subparsers(dest="kind", required=True)
    q = ssub.add_parser("closed-form")
    q.add_argument("--c2", type=_rational, required=True)
    q.add_argument("--c1sq", type=_rational, required=True)
    q.add_argument("--c1k", type=_rational, required=True)
    q.add_argument("--order", type=int, default=6)
    q.add_argument("--format", choices=("json", "csv", "text"), default="text")
    q = ssub.add_parser("compare")
    q.add_argument("--d", type=_int_list, required=True)
    q.add_argument("--order", type=int, default=4)
    _add_cache_args(q)
    q = ssub.add_parser("fit")
    q.add_argument("--d-list", type=_int_list, required=True)
    q.add_argument("--order", type=int, default=5)
    q.add_argument("--format", choices=("text", "csv"), default="text")
    _add_cache_args(q)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    if getattr(args, "cache_dir", "absent") is None:
        args.cache_dir = default_cache_dir()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
