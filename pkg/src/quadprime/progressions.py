"""Prime counting in arithmetic progressions and the M/E/S/T decomposition.

psi / pi counters are direct residue-class scans over the table; the
decomposition evaluates every term of the square-weighted sum's claimed
partition and records the partition residuals rather than assuming them.
"""

import math
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .backends import kernels
from .errors import ParameterError, RangeError

__all__ = [
    "psi_progression", "pi_progression", "siegel_walfisz_ratio",
    "average_error_sum", "compute_decomposition", "lambda_weighted_psi",
    "DecompositionReport", "lcm_moduli_multiplicity",
]


def _check_x(t, x):
    if x > t.limit:
        raise RangeError(f"x={x} exceeds table limit {t.limit}")
    if x < 1:
        raise RangeError(f"x must be >= 1, got {x}")


def psi_progression(t, x, q, a):
    """sum of Lambda(n) over n <= x, n == a (mod q); compensated summation."""
    _check_x(t, x)
    if q < 1:
        raise ParameterError(f"modulus q must be >= 1, got {q}")
    vm = t.vonmangoldt_table()
    start = a % q
    if start == 0:
        start = q
    return math.fsum(vm[start : x + 1 : q])


def pi_progression(t, x, q, a):
    """Exact count of primes p <= x with p == a (mod q)."""
    _check_x(t, x)
    if q < 1:
        raise ParameterError(f"modulus q must be >= 1, got {q}")
    spf = t.spf
    start = a % q
    if start == 0:
        start = q
    idx = np.arange(start, x + 1, q)
    idx = idx[idx >= 2]
    return int((spf[idx] == idx.astype(spf.dtype)).sum())


def siegel_walfisz_ratio(t, x, q, a):
    """psi(x, q, a) * phi(q) / x; tends to 1 for fixed small q."""
    if q >= 1 and gcd(a, q) != 1:
        raise ParameterError(f"need gcd(a, q) = 1, got a={a}, q={q}")
    phi_q = t.euler_phi(q) if q <= t.limit else None
    if phi_q is None:
        raise RangeError(f"q={q} exceeds table limit {t.limit}")
    return psi_progression(t, x, q, a) * phi_q / x


def average_error_sum(t, x, q_max, a):
    """sum over q <= q_max of |psi(x, q, a) - x/phi(q)|.

    Moduli with gcd(a, q) > 1 contribute |psi(x, q, a)| raw, since the
    x/phi(q) main term has no meaning there.
    """
    if a == 0:
        raise ParameterError("a must be nonzero")
    if q_max > x:
        raise ParameterError(f"q_max={q_max} must be <= x={x}")
    _check_x(t, x)
    phi = t.phi_table()
    terms = []
    for q in range(1, q_max + 1):
        psi_val = psi_progression(t, x, q, a)
        if gcd(a, q) == 1:
            terms.append(abs(psi_val - x / int(phi[q])))
        else:
            terms.append(abs(psi_val))
    return math.fsum(terms)


def lambda_weighted_psi(t, x, q):
    """(sum lambda(n) Lambda(n+1), sum Lambda(n+1)) over n <= x with q | n."""
    if x + 1 > t.limit:
        raise RangeError(f"need x+1={x + 1} <= table limit {t.limit}")
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    if q > x:
        return 0.0, 0.0
    vm = t.vonmangoldt_table()
    lam = t.liouville_table()
    idx = np.arange(q, x + 1, q)
    weights = vm[idx + 1]
    return math.fsum(lam[idx] * weights), math.fsum(weights)


@dataclass
class DecompositionReport:
    """All terms of the claimed partition of sum Lambda(n+1) s(n)^2, n <= sqrt x.

    total    full square-indicator-weighted sum
    M, E     double sums over pairs d, e <= x^(1/4) (Lambda and lambda*Lambda inner sums)
    S0, S1   diagonal (d == e) and off-diagonal parts of M
    T0, T1   split of S0 at x0 = (log x)^B
    T2, T3   lcm-collapsed single sums sum lambda(q) * W(q), split at x^(1/4)

    The four residuals measure the claimed partitions; residual_MS and
    residual_S0 are exact re-partitions, while residual_total and
    residual_S1 test genuine claims (and fail; see the detail fields).
    """

    x: int
    B: float
    x0: float
    total: float
    M: float
    E: float
    S0: float
    S1: float
    T0: float
    T1: float
    T2: float
    T3: float
    residual_MS: float
    residual_total: float
    residual_S0: float
    residual_S1: float
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        d = {k: getattr(self, k) for k in (
            "x", "B", "x0", "total", "M", "E", "S0", "S1",
            "T0", "T1", "T2", "T3",
            "residual_MS", "residual_total", "residual_S0", "residual_S1")}
        d["detail"] = dict(self.detail)
        return d

    def term_rows(self):
        rows = [(self.x, name, getattr(self, name), "") for name in
                ("total", "M", "E", "S0", "S1", "T0", "T1", "T2", "T3")]
        rows += [(self.x, name, getattr(self, name), "residual") for name in
                 ("residual_MS", "residual_total", "residual_S0", "residual_S1")]
        return rows


def _rel(delta, scale):
    return abs(delta) / max(abs(scale), 1e-300)


def compute_decomposition(t, x, B=3.0):
    """Evaluate every term of the decomposition at x and report residuals."""
    if B <= 2:
        raise ParameterError(f"B must be > 2, got {B}")
    X = isqrt(x)
    if X + 1 > t.limit:
        raise RangeError(f"need sqrt(x)+1={X + 1} <= table limit {t.limit}")
    P = isqrt(X)  # floor(x^(1/4))
    x0 = math.log(x) ** B

    vm = t.vonmangoldt_table()
    lam = t.liouville_table()

    # inner-sum tables over moduli q <= sqrt(x):
    #   w[q]  = sum Lambda(n+1) over n <= X with q | n
    #   wl[q] = sum lambda(n) Lambda(n+1) over the same n
    shifted = np.zeros(X + 1, np.float64)
    shifted[1:] = vm[2 : X + 2]
    lam_shifted = shifted * lam[: X + 1]
    w = kernels.multiple_sums(shifted, X)
    wl = kernels.multiple_sums(lam_shifted, X)

    s = kernels.divisor_sums_int(lam[: X + 1])
    sq = s[1 : X + 1].astype(np.float64)
    total = math.fsum(shifted[1 : X + 1] * sq * sq)

    M, E, S0, S1 = kernels.pair_decomposition(lam, w, wl, P)

    d_split = min(int(x0), P)
    T0 = 2.0 * math.fsum(w[1 : d_split + 1])
    T1 = 2.0 * math.fsum(w[d_split + 1 : P + 1])

    lam_w = lam[: X + 1].astype(np.float64) * w
    T2 = 2.0 * math.fsum(lam_w[1 : P + 1])
    T3 = 2.0 * math.fsum(lam_w[P + 1 : X + 1])

    # exact lcm-grouped S1 (diagnostic for the collapsed form)
    s1_grouped = _s1_lcm_grouped(lam, w, P)

    return DecompositionReport(
        x=x, B=B, x0=x0,
        total=total, M=M, E=E, S0=S0, S1=S1, T0=T0, T1=T1, T2=T2, T3=T3,
        residual_MS=_rel(M - S0 - S1, M),
        residual_total=_rel(total - M - E, total),
        residual_S0=_rel(S0 - T0 - T1, S0),
        residual_S1=_rel(S1 - T2 - T3, S1),
        detail={
            "quarter_bound": P,
            "half_bound": X,
            "s1_lcm_grouped": s1_grouped,
            "collapsed_T2_plus_T3": T2 + T3,
            "collapsed_over_total": (T2 + T3) / total if total else float("nan"),
        },
    )


def _s1_lcm_grouped(lam, w, pmax):
    """Off-diagonal double sum regrouped exactly by q = lcm(d, e)."""
    acc = {}
    for d in range(1, pmax + 1):
        ld = int(lam[d])
        for e in range(1, pmax + 1):
            if d == e:
                continue
            q = d * e // gcd(d, e)
            acc[q] = acc.get(q, 0) + ld * int(lam[e])
    return 2.0 * math.fsum(coef * w[q] for q, coef in sorted(acc.items()) if coef)


def lcm_moduli_multiplicity(x):
    """Multiplicity of each q = lcm(d, e), d != e, d, e <= x^(1/4), q <= sqrt x.

    Returns (counts dict, missing list): counts maps q to the number of
    ordered pairs producing it; missing lists the q <= sqrt x that no pair
    produces (the coverage claim under test).
    """
    X = isqrt(x)
    P = isqrt(X)
    counts = {}
    for d in range(1, P + 1):
        for e in range(1, P + 1):
            if d == e:
                continue
            q = d * e // gcd(d, e)
            if q <= X:
                counts[q] = counts.get(q, 0) + 1
    missing = [q for q in range(1, X + 1) if q not in counts]
    return counts, missing
