"""Claims ledger: aggregated machine-readable verdicts from module scans.

Each runner executes one module's claim suite at desk scale and appends
:class:`ClaimVerdict` rows. Failures that reproduce known, documented
findings carry ``documented_exception=True`` and do not count as
unexpected; everything else falsified flips the ledger status.
"""

import math
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from . import identities, partial_sums, progressions, quadratic
from .records import (ClaimVerdict, dump_json, FALSIFIED, INDETERMINATE,
                      VERIFIED)
from .sieve import build_table

LEDGER_VERSION = 1

CLAIM_SETS = ("identities", "decomposition", "constants", "progressions",
              "quadratic", "all")


@dataclass
class ClaimsLedger:
    entries: list = field(default_factory=list)
    ledger_version: int = LEDGER_VERSION

    def add(self, verdict):
        self.entries.append(verdict)

    def extend(self, verdicts):
        self.entries.extend(verdicts)

    def unexpected_failures(self):
        return [e for e in self.entries
                if e.status == FALSIFIED and not e.documented_exception]

    def counts(self):
        out = {VERIFIED: 0, FALSIFIED: 0, INDETERMINATE: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_dict(self):
        return {"ledger_version": self.ledger_version,
                "entries": [e.to_dict() for e in self.entries]}

    def write(self, fh):
        dump_json(self.to_dict(), fh)


def _verdict(claim_id, statement, inputs, computed, expected, ok,
             documented_exception=False, note=""):
    return ClaimVerdict(
        claim_id=claim_id, statement=statement, inputs=inputs,
        computed=computed, expected=expected,
        status=VERIFIED if ok else FALSIFIED,
        documented_exception=documented_exception and not ok, note=note)


# -- identities ---------------------------------------------------------


def run_identities(t, limit=None):
    limit = min(limit or 10**6, t.limit - 2)
    out = []

    s = identities.square_indicator_scan(t, limit)
    n = np.arange(limit + 1)
    root = np.sqrt(n.astype(np.float64)).astype(np.int64)
    is_sq = (root * root == n) | ((root + 1) * (root + 1) == n)
    bad = int((s[1:] != is_sq[1:].astype(s.dtype)).sum())
    out.append(_verdict(
        f"square-indicator-scan-{limit}",
        "sum of lambda(d) over d | n equals the perfect-square indicator",
        {"limit": limit}, {"mismatches": bad}, "0 mismatches", bad == 0))

    lhs, lam = identities.mobius_square_divisors_scan(t, limit)
    bad = int((lhs[1:] != lam[1:].astype(lhs.dtype)).sum())
    out.append(_verdict(
        f"mobius-square-divisors-scan-{limit}",
        "sum of mu(n/d^2) over d^2 | n equals lambda(n)",
        {"limit": limit}, {"mismatches": bad}, "0 mismatches", bad == 0))

    xmax = min(limit, 10**5)
    floor_lhs = identities.lambda_floor_sum_scan(t, xmax)
    targets = np.sqrt(np.arange(xmax + 1, dtype=np.float64)).astype(np.int64)
    fix = (targets + 1) ** 2 <= np.arange(xmax + 1)
    targets[fix] += 1
    bad = int((floor_lhs[1:] != targets[1:]).sum())
    out.append(_verdict(
        f"liouville-floor-sum-scan-{xmax}",
        "sum of lambda(n) floor(x/n) equals floor(sqrt x)",
        {"xmax": xmax}, {"mismatches": bad}, "0 mismatches", bad == 0))

    samples = [2, 8, 12, 30, 36, 97, 360, 1024, 5040, 99991, 2 * 3 * 5 * 7 * 11]
    worst = 0.0
    for m in samples:
        c = identities.check_vonmangoldt_divisor_sum(t, m)
        worst = max(worst, abs(c.lhs - c.rhs))
    out.append(_verdict(
        "vonmangoldt-divisor-sum-samples",
        "Lambda(n) equals -sum of mu(d) log d over d | n",
        {"samples": samples}, {"max_abs_residual": worst},
        f"residual <= {identities.LOG_TOL}", worst <= identities.LOG_TOL))

    sq_fail_at_square = []
    sq_fail_elsewhere = []
    for m in samples:
        vm_c, li_c, sq_c = identities.check_hyperbola_splits(t, m)
        if not (vm_c.equal and li_c.equal):
            sq_fail_elsewhere.append(("linear", m))
        if not sq_c.equal:
            (sq_fail_at_square if sq_c.detail["is_square"]
             else sq_fail_elsewhere).append(("squared", m))
    out.append(_verdict(
        "hyperbola-splits-samples",
        "threshold splits of the divisor sums reproduce the full sums",
        {"samples": samples},
        {"failures_at_squares": sq_fail_at_square,
         "failures_elsewhere": sq_fail_elsewhere},
        "no failures",
        not sq_fail_at_square and not sq_fail_elsewhere,
        documented_exception=not sq_fail_elsewhere,
        note="the squared split drops the cross term exactly at perfect squares"))

    decades = [10**k for k in range(2, 7) if 10**k + 1 <= t.limit]
    worst = 0.0
    for x in decades:
        c = identities.check_summation_identity(t, x)
        worst = max(worst, c.detail["relative_residual"])
    out.append(_verdict(
        "square-to-linear-summation-decades",
        "sum Lambda(m^2+1), m <= sqrt x, equals sum Lambda(n+1) s(n)^2, n <= x",
        {"grid": decades}, {"max_relative_residual": worst},
        f"relative residual <= {identities.SUM_TOL}",
        worst <= identities.SUM_TOL))

    failures = []
    p = 3
    while p <= 10**4:
        if identities.is_prime_wide(p):
            v = identities.wilson_quadratic_check(p)
            if v.status != VERIFIED:
                failures.append(p)
        p += 2
    out.append(_verdict(
        "wilson-quadratic-sweep-10000",
        "((p-1)/2)! = +-round(sqrt p) mod p iff p = a^2 + 1, odd p <= 10^4",
        {"p_max": 10**4}, {"failing_primes": failures}, "no failing primes",
        not failures,
        documented_exception=failures == [3],
        note="p = 3 is the lone exception: 1! = 1 = -2 mod 3 while 3 = a^2 + 1 "
             "has no integer solution with a = round(sqrt 3) = 2"))

    c = identities.check_squared_divisor_floor_sum(t, min(limit, 3000))
    out.append(_verdict(
        f"squared-divisor-floor-sum-{c.n_or_x}",
        "sum over n <= x of s(n)^2 equals floor(sqrt x), two routes",
        {"x": c.n_or_x},
        {"direct": c.lhs, "target": c.rhs,
         "double_floor_sum": c.detail["double_floor_sum"]},
        "direct route equals floor(sqrt x)", c.equal,
        note="the double floor-sum route disagrees; only the direct route holds"))
    return out


# -- decomposition ------------------------------------------------------

DECOMP_TOL = 1e-6


def run_decomposition(t, xs=(10**4, 10**6), B=3.0):
    out = []
    for x in xs:
        if isqrt(x) + 1 > t.limit:
            continue
        rep = progressions.compute_decomposition(t, x, B)
        exact = {"residual_MS": rep.residual_MS, "residual_S0": rep.residual_S0}
        claimed = {"residual_total": rep.residual_total,
                   "residual_S1": rep.residual_S1}
        out.append(_verdict(
            f"decomposition-repartitions-{x}",
            "M = S0 + S1 and S0 = T0 + T1 as exact re-partitions",
            {"x": x, "B": B}, exact, f"relative residuals <= {DECOMP_TOL}",
            max(exact.values()) <= DECOMP_TOL))
        out.append(_verdict(
            f"decomposition-partitions-{x}",
            "total = M + E and S1 = T2 + T3 as claimed partitions",
            {"x": x, "B": B},
            dict(claimed, total=rep.total, M=rep.M, E=rep.E,
                 collapsed_over_total=rep.detail["collapsed_over_total"]),
            f"relative residuals <= {DECOMP_TOL}",
            max(claimed.values()) <= DECOMP_TOL,
            documented_exception=True,
            note="both partitions fail by O(1): the squared split is wrong at "
                 "perfect squares and the lcm collapse overcounts; measured "
                 "T2 + T3 equals 2 * total exactly"))
    return out


# -- constants ----------------------------------------------------------


def run_constants(P=10**6):
    out = []
    specs = [
        ("product-c0", partial_sums.product_c0,
         partial_sums.C0_REFERENCE, 1e-9, False, ""),
        ("product-lambda-n-phi", partial_sums.product_sum_lambda_n_phi,
         partial_sums.LAMBDA_N_PHI_REFERENCE, 1e-6, False, ""),
        ("product-reciprocal-p-pminus1", partial_sums.product_artin_like,
         0.3739558, 1e-7, False,
         "printed reference 0.373955832771 is wrong past the 7th decimal; "
         "the product evaluates to 0.37395581..."),
    ]
    for claim_id, fn, ref, tol, exc, note in specs:
        est = fn(P)
        diff = abs(est.value - ref)
        out.append(_verdict(
            f"{claim_id}-{P}",
            f"truncated Euler product matches reference {ref}",
            {"P": P}, {"value": est.value, "reference": ref, "abs_diff": diff,
                       "tail_estimate": est.tail_estimate},
            f"|value - reference| <= {tol}", diff <= tol,
            documented_exception=exc, note=note))

    est = quadratic.a2_constant(P)
    diff = abs(est.value - quadratic.A2_REFERENCE)
    out.append(_verdict(
        f"a2-constant-{P}",
        "conditionally convergent density product for n^2 + 1 primes",
        {"P": P},
        {"value": est.value, "reference": quadratic.A2_REFERENCE,
         "abs_diff": diff, "tail_estimate": est.tail_estimate},
        "|value - reference| <= 5e-3", diff <= 5e-3,
        note="conditional convergence; partial products oscillate by decade"))
    return out


# -- progressions -------------------------------------------------------


def run_progressions(t, x=None):
    x = min(x or 10**6, t.limit)
    out = []
    worst = 0.0
    worst_pair = None
    for q in range(1, 21):
        for a in range(1, q + 1):
            if gcd(a, q) != 1:
                continue
            dev = abs(progressions.siegel_walfisz_ratio(t, x, q, a) - 1.0)
            if dev > worst:
                worst, worst_pair = dev, (q, a)
    out.append(_verdict(
        f"siegel-walfisz-band-{x}",
        "psi(x, q, a) phi(q) / x within 10% of 1 for q <= 20, gcd(a, q) = 1",
        {"x": x, "q_max": 20},
        {"max_deviation": worst, "worst_pair": list(worst_pair)},
        "max deviation <= 0.1", worst <= 0.1))

    q_max = isqrt(x)
    avg = progressions.average_error_sum(t, x, min(q_max, 200), 1)
    out.append(ClaimVerdict(
        claim_id=f"average-error-sum-{x}",
        statement="averaged |psi(x, q, 1) - x/phi(q)| over q stays o(x) in size",
        inputs={"x": x, "q_max": min(q_max, 200)},
        computed={"sum": avg, "sum_over_x": avg / x},
        expected="logged for growth comparison across x",
        status=INDETERMINATE,
        note="average-type bound; measured, not pass/failed at one x"))
    return out


# -- quadratic ----------------------------------------------------------


_trapezoid = getattr(np, "trapezoid", None) or np.trapz


def _log_integral(N, lo=2.0, points=4000):
    grid = np.exp(np.linspace(math.log(lo), math.log(N), points))
    return float(_trapezoid(1.0 / np.log(grid), grid))


def run_quadratic(n_max=10**5):
    out = []
    f = quadratic.QuadraticPoly(1, 0, 1)

    count10, values = quadratic.count_quadratic_primes(f, 10)
    got = sorted(v for _, v in values)
    out.append(_verdict(
        "quadratic-prime-count-10",
        "n^2 + 1 is prime for exactly 5 of n in [1, 10]",
        {"n_max": 10}, {"count": count10, "values": got},
        "count 5, values [2, 5, 17, 37, 101]",
        count10 == 5 and got == [2, 5, 17, 37, 101]))

    count, _ = quadratic.count_quadratic_primes(f, n_max, collect_values=False)
    predicted = quadratic.A2_REFERENCE / 2.0 * _log_integral(n_max)
    ratio = count / predicted
    out.append(_verdict(
        f"quadratic-prime-density-{n_max}",
        "count of prime n^2 + 1 tracks the conjectured density constant",
        {"n_max": n_max},
        {"count": count, "predicted": predicted, "ratio": ratio},
        "ratio in [0.90, 1.10]", 0.90 <= ratio <= 1.10))

    violations = []
    for n, p in quadratic.quadratic_primes(n_max):
        if n < 2:
            continue
        v = quadratic.sqrt_fractional_check(p)
        if v.status != VERIFIED:
            violations.append(p)
    out.append(_verdict(
        f"sqrt-fractional-sweep-{n_max}",
        "{sqrt p} < 0.55 / sqrt p for every prime p = n^2 + 1, n >= 2",
        {"n_max": n_max}, {"violations": violations}, "no violations",
        not violations))

    hits = quadratic.prime_power_scan(min(n_max, 10**4))
    out.append(_verdict(
        "prime-power-absence-scan",
        "no proper prime power p^k, k >= 2, of the form m^2 + 1 in range",
        {"m_max": min(n_max, 10**4)}, {"hits": hits}, "empty", not hits))

    rep = quadratic.admissibility(f)
    rep_bad = quadratic.admissibility(quadratic.QuadraticPoly(1, 1, 2))
    out.append(_verdict(
        "admissibility-contrast",
        "x^2 + 1 is admissible; x^2 + x + 2 fails on its fixed divisor 2",
        {"polynomials": ["x^2+1", "x^2+x+2"]},
        {"good": rep.admissible, "bad": rep_bad.admissible,
         "bad_fixed_divisor": rep_bad.fixed_divisor},
        "good admissible, bad not",
        rep.admissible and not rep_bad.admissible and rep_bad.fixed_divisor == 2))
    return out


# -- two-route / partial-sum checks fold into identities set ------------


def run_two_route(t, x=10**4):
    direct = partial_sums.sum_lambda_over_phi(t, x)
    rearranged = partial_sums.sum_lambda_over_phi_rearranged(t, x)
    diff = abs(direct - rearranged)
    return [_verdict(
        f"lambda-over-phi-two-routes-{x}",
        "sum lambda(n)/phi(n) agrees between the direct and rearranged routes",
        {"x": x}, {"direct": direct, "rearranged": rearranged, "abs_diff": diff},
        "difference <= 1e-10", diff <= 1e-10)]


# -- orchestration ------------------------------------------------------

DEFAULT_LIMITS = {
    "identities": 10**6 + 2,
    "decomposition": 10**3 + 2,  # holds sqrt(1e6)+1 comfortably
    "progressions": 10**6,
}


def required_limit(claim_set):
    if claim_set == "all":
        return max(DEFAULT_LIMITS.values())
    return DEFAULT_LIMITS.get(claim_set, 0)


def run_claim_set(claim_set, limit=None, prime_bound=None, table=None):
    """Run one named claim set (or all) and return the filled ledger."""
    if claim_set not in CLAIM_SETS:
        raise ValueError(f"unknown claim set {claim_set!r}")
    ledger = ClaimsLedger()
    need = limit or required_limit(claim_set)
    t = table
    if t is None and need >= 2:
        t = build_table(need)

    if claim_set in ("identities", "all"):
        ledger.extend(run_identities(t, limit))
        ledger.extend(run_two_route(t, min(10**4, t.limit)))
    if claim_set in ("decomposition", "all"):
        xs = tuple(x for x in (10**4, 10**6) if isqrt(x) + 1 <= t.limit)
        ledger.extend(run_decomposition(t, xs))
    if claim_set in ("constants", "all"):
        ledger.extend(run_constants(prime_bound or 10**6))
    if claim_set in ("progressions", "all"):
        ledger.extend(run_progressions(t, limit))
    if claim_set in ("quadratic", "all"):
        ledger.extend(run_quadratic(10**5))
    return ledger
