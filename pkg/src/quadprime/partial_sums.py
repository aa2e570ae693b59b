"""Summatory functions and infinite-product constants.

Mertens-type partial sums, lambda/phi and lambda*Lambda sums, the three
printed product constants, and the phi(n^2) series. Product tails are
bounded by integral comparison and reported next to the values.
"""

import math

import numpy as np

from .errors import RangeError
from .records import ClaimVerdict, ConstantEstimate, SummatoryCurve, INDETERMINATE
from .sieve import primes_upto

C0_REFERENCE = 0.615132657318171877819725438740602
LAMBDA_N_PHI_REFERENCE = 0.458937522009
RECIPROCAL_P_PMINUS1_REFERENCE = 0.373955832771

DECADE_GRID = (10**2, 10**3, 10**4, 10**5, 10**6)


def _check_x(t, x):
    if x > t.limit:
        raise RangeError(f"x={x} exceeds table limit {t.limit}")
    if x < 1:
        raise RangeError(f"x must be >= 1, got {x}")


def mertens(t, x):
    """M(x) = sum of mu(n), n <= x; exact integer."""
    _check_x(t, x)
    return int(t.mobius_table()[1 : x + 1].astype(np.int64).sum())


def liouville_summatory(t, x):
    """L(x) = sum of lambda(n), n <= x; exact integer."""
    _check_x(t, x)
    return int(t.liouville_table()[1 : x + 1].astype(np.int64).sum())


def sum_lambda_over_phi(t, x):
    _check_x(t, x)
    lam = t.liouville_table()[1 : x + 1].astype(np.float64)
    phi = t.phi_table()[1 : x + 1].astype(np.float64)
    return math.fsum(lam / phi)


def sum_mu_over_phi(t, x):
    _check_x(t, x)
    mu = t.mobius_table()[1 : x + 1].astype(np.float64)
    phi = t.phi_table()[1 : x + 1].astype(np.float64)
    return math.fsum(mu / phi)


def sum_lambda_over_phi_rearranged(t, x):
    """Same sum via the mu^2/phi divisor rearrangement.

    sum_{n<=x} lambda(n)/phi(n)
      = sum_{d<=x} mu(d)^2 lambda(d) / (d phi(d)) * sum_{m<=x/d} lambda(m)/m,
    an exact finite rearrangement used as the second route of the
    two-route consistency check.
    """
    _check_x(t, x)
    lam = t.liouville_table()[: x + 1].astype(np.float64)
    mu = t.mobius_table()[: x + 1]
    phi = t.phi_table()[: x + 1].astype(np.float64)
    n = np.arange(x + 1, dtype=np.float64)
    n[0] = 1.0
    lam_over_n = lam / n
    prefix = np.zeros(x + 1, np.float64)
    np.cumsum(lam_over_n[1:], out=prefix[1:])
    terms = []
    for d in range(1, x + 1):
        if mu[d]:
            terms.append(lam[d] / (d * phi[d]) * prefix[x // d])
    return math.fsum(terms)


def sum_lambda_vonmangoldt(t, x):
    _check_x(t, x)
    lam = t.liouville_table()[1 : x + 1].astype(np.float64)
    vm = t.vonmangoldt_table()[1 : x + 1]
    return math.fsum(lam * vm)


def sum_mu_vonmangoldt(t, x):
    _check_x(t, x)
    mu = t.mobius_table()[1 : x + 1].astype(np.float64)
    vm = t.vonmangoldt_table()[1 : x + 1]
    return math.fsum(mu * vm)


def _truncated_product(P, log_factor, tail_bound, reference, tolerance):
    primes = primes_upto(P).astype(np.float64)
    value = math.exp(math.fsum(log_factor(primes)))
    tail = tail_bound(P)
    return ConstantEstimate(
        value=value, truncation_prime=int(P), tail_estimate=tail,
        reference_value=reference, converged=tail <= tolerance)


def product_c0(P, tolerance=1e-9):
    """prod over p <= P of (1 - 1/((p^2-1)(p-1))); tail ~ integral of 1/t^3."""
    return _truncated_product(
        P,
        lambda p: np.log1p(-1.0 / ((p * p - 1.0) * (p - 1.0))),
        lambda P: 1.0 / (2.0 * (P - 1.0) ** 2),
        C0_REFERENCE, tolerance)


def product_sum_lambda_n_phi(P, tolerance=1e-6):
    """prod over p <= P of (1 - p/((p^2+1)(p-1))); tail via sum 1/p^2."""
    return _truncated_product(
        P,
        lambda p: np.log1p(-p / ((p * p + 1.0) * (p - 1.0))),
        lambda P: 2.0 / (P - 1.0),
        LAMBDA_N_PHI_REFERENCE, tolerance)


def product_artin_like(P, tolerance=1e-7):
    """prod over p <= P of (1 - 1/(p(p-1))); tail via sum 1/p^2."""
    return _truncated_product(
        P,
        lambda p: np.log1p(-1.0 / (p * (p - 1.0))),
        lambda P: 2.0 / (P - 1.0),
        RECIPROCAL_P_PMINUS1_REFERENCE, tolerance)


def a0_phi_square_sum(N, phi_table=None):
    """Partial sum of sum_{n>=1} 1/phi(n^2) = sum 1/(n phi(n)).

    phi(n^2) = n phi(n), so only a table to N is needed. Tail bounded by
    integral comparison with c/n^2, c = zeta(2)-ish margin 2.
    """
    if phi_table is None:
        from .sieve import build_table
        phi_table = build_table(max(N, 2)).phi_table()
    if len(phi_table) <= N:
        raise RangeError(f"phi table too short for N={N}")
    n = np.arange(1, N + 1, dtype=np.float64)
    value = math.fsum(1.0 / (n * phi_table[1 : N + 1]))
    tail = 2.0 / N
    return ConstantEstimate(value=value, truncation_prime=N, tail_estimate=tail,
                            reference_value=None, converged=True,
                            detail={"series": "sum 1/phi(n^2)"})


def sum_musq_over_phi(t, x):
    """(sum mu(n)^2/phi(n), drift vs log x); the drift tends to a constant."""
    _check_x(t, x)
    mu = t.mobius_table()[1 : x + 1].astype(np.float64)
    phi = t.phi_table()[1 : x + 1].astype(np.float64)
    value = math.fsum((mu * mu) / phi)
    return value, value - math.log(x)


def product_sum_equivalence_check(t, x):
    """Ratio of sum lambda(n)/phi(n) to its claimed companion product.

    The product is prod_{p<=x} (1 - 1/p)(1 - 1/((p^2-1)(p-1))). The sum
    oscillates in sign, so this is measured and logged, never pass/failed.
    """
    _check_x(t, x)
    s = sum_lambda_over_phi(t, x)
    primes = primes_upto(x).astype(np.float64)
    log_prod = math.fsum(np.log1p(-1.0 / primes)
                         + np.log1p(-1.0 / ((primes * primes - 1.0) * (primes - 1.0))))
    prod = math.exp(log_prod)
    return ClaimVerdict(
        claim_id=f"lambda-phi-sum-vs-product-{x}",
        statement="sum lambda(n)/phi(n) comparable to prod (1-1/p)(1-1/((p^2-1)(p-1)))",
        inputs={"x": x},
        computed={"sum": s, "product": prod,
                  "ratio": s / prod if prod else float("nan")},
        expected="same order of magnitude; ratio logged with sign",
        status=INDETERMINATE,
        note="comparability claim measured, not asserted",
    )


def summatory_curve(t, fn, grid=DECADE_GRID):
    """Evaluate fn(t, x) on a grid and fit a growth exponent."""
    points = [(x, fn(t, x)) for x in sorted(grid) if x <= t.limit]
    return SummatoryCurve.from_points(points)
