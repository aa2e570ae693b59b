"""Command-line front end.

Subcommands build sieve tables, run claim-set verifications into a JSON
ledger, evaluate the density constants, count quadratic primes, tabulate
progressions, print the decomposition report, and export summatory curves
as CSV/JSON plus a gnuplot script. All output is deterministic: identical
invocations produce identical bytes.

Exit codes: 0 success, 2 usage error, 3 capacity error, 4 claim falsified
outside documented expectations.
"""

import argparse
import csv
import os
import sys
from math import gcd, isqrt

from . import ledger as ledger_mod
from . import partial_sums, progressions, quadratic
from .backends import BACKEND
from .errors import CapacityError, ParameterError, RangeError
from .records import dump_json
from .sieve import build_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_FALSIFIED = 4

CURVE_QUANTITIES = {
    "mertens": ("table", partial_sums.mertens),
    "liouville_summatory": ("table", partial_sums.liouville_summatory),
    "sum_lambda_over_phi": ("table", partial_sums.sum_lambda_over_phi),
    "sum_mu_over_phi": ("table", partial_sums.sum_mu_over_phi),
    "lambda_psi_quadratic": ("plain", quadratic.lambda_psi_quadratic),
    "harmonic_sum_A": ("plain", quadratic.harmonic_sum_A),
}


def _parse_grid(text):
    try:
        grid = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParameterError(f"bad grid {text!r}; expected comma-separated integers")
    if not grid:
        raise ParameterError("grid is empty")
    if grid != sorted(set(grid)):
        raise ParameterError("grid values must be strictly increasing")
    return grid


def _parse_polynomial(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ParameterError(f"bad polynomial {text!r}; expected a,b,c")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise ParameterError(f"bad polynomial {text!r}; coefficients must be integers")
    return quadratic.QuadraticPoly(a, b, c)


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _emit(obj, path):
    fh, close = _open_out(path)
    try:
        dump_json(obj, fh)
    finally:
        if close:
            fh.close()


# -- subcommands --------------------------------------------------------


def cmd_sieve(args):
    t = build_table(args.limit)
    primes = t.primes()
    print(f"backend {BACKEND}")
    print(f"limit {t.limit}")
    print(f"primes {len(primes)}")
    print(f"largest_prime {int(primes[-1])}")
    print(f"mertens {partial_sums.mertens(t, t.limit)}")
    print(f"liouville_summatory {partial_sums.liouville_summatory(t, t.limit)}")
    return EXIT_OK


def cmd_verify(args):
    led = ledger_mod.run_claim_set(args.claim_set, limit=args.limit,
                                   prime_bound=args.prime_bound)
    for e in led.entries:
        flag = "" if not e.documented_exception else " (documented)"
        print(f"{e.status:13s} {e.claim_id}{flag}")
    counts = led.counts()
    print(f"verified {counts['verified']} falsified {counts['falsified']} "
          f"indeterminate {counts['indeterminate']}")
    if args.out:
        _emit(led.to_dict(), args.out)
    else:
        led.write(sys.stdout)
    return EXIT_FALSIFIED if led.unexpected_failures() else EXIT_OK


def cmd_constants(args):
    P = args.prime_bound or 10**6
    estimates = {
        "c0": partial_sums.product_c0(P).to_dict(),
        "sum_lambda_n_phi": partial_sums.product_sum_lambda_n_phi(P).to_dict(),
        "reciprocal_p_pminus1": partial_sums.product_artin_like(P).to_dict(),
        "a2": quadratic.a2_constant(P).to_dict(),
    }
    if args.format == "csv":
        fh, close = _open_out(args.out)
        try:
            w = csv.writer(fh)
            w.writerow(["name", "value", "truncation_prime", "tail_estimate",
                        "reference"])
            for name, est in estimates.items():
                w.writerow([name, repr(est["value"]), est["truncation_prime"],
                            repr(est["tail_estimate"]), est["reference_value"]])
        finally:
            if close:
                fh.close()
    else:
        _emit(estimates, args.out)
    return EXIT_OK


def cmd_count(args):
    f = _parse_polynomial(args.polynomial) if args.polynomial \
        else quadratic.QuadraticPoly(1, 0, 1)
    n_max = args.limit or 10**4
    count, values = quadratic.count_quadratic_primes(f, n_max)
    print(f"polynomial {f}")
    print(f"n_max {n_max}")
    print(f"count {count}")
    rep = quadratic.admissibility(f)
    print(f"admissible {rep.admissible} fixed_divisor {rep.fixed_divisor}")
    if rep.admissible:
        P = args.prime_bound or 10**5
        est = quadratic.hardy_littlewood_constant(f, P)
        print(f"density_constant {est.value!r} (primes to {P})")
    if values and args.verbose:
        for n, v in values[:50]:
            print(f"  n={n} value={v}")
    return EXIT_OK


def cmd_progressions(args):
    x = args.limit or 10**5
    t = build_table(x)
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh)
        w.writerow(["q", "a", "psi", "pi", "psi_phi_over_x"])
        for q in range(1, (args.q_max or 12) + 1):
            for a in range(1, q + 1):
                if gcd(a, q) != 1:
                    continue
                psi = progressions.psi_progression(t, x, q, a)
                pi = progressions.pi_progression(t, x, q, a)
                ratio = psi * t.euler_phi(q) / x
                w.writerow([q, a, repr(psi), pi, repr(ratio)])
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_decompose(args):
    x = args.limit or 10**6
    t = build_table(isqrt(x) + 2)
    rep = progressions.compute_decomposition(t, x, args.B)
    if args.format == "json":
        _emit(rep.to_dict(), args.out)
        return EXIT_OK
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh)
        w.writerow(["x", "term", "value", "kind"])
        for row in rep.term_rows():
            w.writerow([row[0], row[1], repr(row[2]), row[3]])
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_export(args):
    grid = _parse_grid(args.grid)
    kind, fn = CURVE_QUANTITIES[args.quantity]
    if kind == "table":
        t = build_table(grid[-1])
        rows = [(x, fn(t, x)) for x in grid]
    else:
        rows = [(x, fn(x)) for x in grid]

    if args.format == "json":
        _emit({"quantity": args.quantity,
               "points": [[x, v] for x, v in rows]}, args.out)
        return EXIT_OK

    out = args.out or f"{args.quantity}.csv"
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", args.quantity])
        for x, v in rows:
            w.writerow([x, v if isinstance(v, int) else repr(v)])
    script = os.path.splitext(out)[0] + ".gp"
    with open(script, "w") as fh:
        fh.write("set datafile separator ','\n")
        fh.write("set logscale x\n")
        fh.write("set xlabel 'x'\n")
        fh.write(f"set ylabel '{args.quantity}'\n")
        fh.write(f"plot '{os.path.basename(out)}' using 1:2 skip 1 "
                 f"with linespoints title '{args.quantity}'\n")
    print(f"wrote {out} and {script}")
    return EXIT_OK


# -- parser -------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadprime",
        description="Numerical verification lab for primes of the form n^2+1.")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker count accepted for interface parity; "
                             "scans run serially so outputs stay byte-identical")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--limit", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--prime-bound", type=int, default=None)

    p = sub.add_parser("sieve", help="build a table and print summary stats")
    common(p)
    p.set_defaults(fn=cmd_sieve)

    p = sub.add_parser("verify", help="run a claim set and write the ledger")
    p.add_argument("claim_set", choices=ledger_mod.CLAIM_SETS)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("constants", help="evaluate the four density constants")
    common(p)
    p.set_defaults(fn=cmd_constants)

    p = sub.add_parser("count", help="count primes along a quadratic polynomial")
    common(p)
    p.add_argument("--polynomial", default=None, metavar="a,b,c")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("progressions", help="psi/pi table over residue classes")
    common(p)
    p.add_argument("--q-max", type=int, default=None)
    p.set_defaults(fn=cmd_progressions)

    p = sub.add_parser("decompose", help="decomposition report at one x")
    common(p)
    p.add_argument("-B", type=float, default=3.0)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("export", help="export a summatory curve + plot script")
    p.add_argument("quantity", choices=sorted(CURVE_QUANTITIES))
    p.add_argument("--grid", required=True, metavar="x1,x2,...")
    common(p)
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.fn(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParameterError, RangeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
