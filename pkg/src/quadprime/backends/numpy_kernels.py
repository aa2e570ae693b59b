"""Pure-numpy kernels: the fallback path for every hot loop.

All functions here are exact integer/float computations with the same
results as their jitted twins in ``numba_kernels`` (float sums may differ
by rounding order at the 1e-15 level, which every caller tolerates).
"""

import math
from math import isqrt

import numpy as np

NAME = "numpy"


def _primes_upto(n):
    """Boolean-sieve prime list for p <= n (small n only: base primes)."""
    if n < 2:
        return np.empty(0, np.int64)
    comp = np.zeros(n + 1, bool)
    for p in range(2, isqrt(n) + 1):
        if not comp[p]:
            comp[p * p :: p] = True
    comp[:2] = True
    return np.nonzero(~comp)[0]


def build_spf(limit, segment_size):
    """Smallest-prime-factor table for 0..limit, built segment by segment.

    spf[0] = spf[1] = 0; spf[n] is the least prime dividing n otherwise.
    The result is independent of segment_size.
    """
    spf = np.zeros(limit + 1, np.uint32)
    base = _primes_upto(isqrt(limit))
    for lo in range(2, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start >= hi:
                continue
            seg = spf[start:hi:p]
            seg[seg == 0] = p
    unmarked = spf == 0
    unmarked[:2] = False
    idx = np.nonzero(unmarked)[0]
    spf[idx] = idx
    return spf


def primes_from_spf(spf):
    n = len(spf) - 1
    idx = np.arange(n + 1, dtype=np.int64)
    primes = np.nonzero(spf == idx)[0]
    return primes[primes >= 2]


def omega_table(spf):
    """Omega(n) = number of prime-power divisors p^k | n, k >= 1."""
    n = len(spf) - 1
    omega = np.zeros(n + 1, np.uint8)
    for p in primes_from_spf(spf):
        pk = int(p)
        while pk <= n:
            omega[pk::pk] += 1
            pk *= int(p)
    return omega


def mobius_table(spf):
    n = len(spf) - 1
    mu = np.ones(n + 1, np.int8)
    mu[0] = 0
    for p in primes_from_spf(spf):
        p = int(p)
        mu[p::p] *= -1
        if p * p <= n:
            mu[p * p :: p * p] = 0
    return mu


def phi_table(spf):
    n = len(spf) - 1
    phi = np.arange(n + 1, dtype=np.int64)
    for p in primes_from_spf(spf):
        p = int(p)
        phi[p::p] -= phi[p::p] // p
    return phi


def vonmangoldt_table(spf):
    n = len(spf) - 1
    vm = np.zeros(n + 1, np.float64)
    for p in primes_from_spf(spf):
        p = int(p)
        lp = math.log(p)
        pk = p
        while pk <= n:
            vm[pk] = lp
            pk *= p
    return vm


def _divisor_sums(weights, out):
    """out[n] = sum of weights[d] over divisors d | n, 1 <= n < len(weights).

    Split at sqrt: small divisors get a scalar strided add each; large
    divisors are grouped by cofactor k so each k is one vectorized add.
    """
    n = len(weights) - 1
    r = isqrt(n)
    for d in range(1, r + 1):
        w = weights[d]
        if w:
            out[d::d] += w
    for k in range(1, n // (r + 1) + 1):
        hi = n // k
        out[k * (r + 1) : k * hi + 1 : k] += weights[r + 1 : hi + 1]
    return out


def divisor_sums_int(weights):
    return _divisor_sums(weights, np.zeros(len(weights), np.int64))


def divisor_sums_float(weights):
    return _divisor_sums(weights, np.zeros(len(weights), np.float64))


def multiple_sums(values, qmax):
    """out[q] = sum of values[q*m] over m >= 1 with q*m < len(values)."""
    out = np.zeros(qmax + 1, np.float64)
    for q in range(1, qmax + 1):
        out[q] = values[q::q].sum()
    return out


def floor_sum_scan(lam, xmax):
    """out[x] = sum_{n<=x} lam[n] * (x // n) for every x <= xmax.

    Per x, the sum is evaluated in O(sqrt x) using quotient blocks and a
    prefix-sum table of lam; exact integer arithmetic throughout.
    """
    lam64 = lam[: xmax + 1].astype(np.int64)
    prefix = np.zeros(xmax + 1, np.int64)
    np.cumsum(lam64[1:], out=prefix[1:])
    out = np.zeros(xmax + 1, np.int64)
    for x in range(1, xmax + 1):
        r = isqrt(x)
        n = np.arange(1, r + 1)
        s = int((lam64[1 : r + 1] * (x // n)).sum())
        kmax = x // (r + 1)
        if kmax:
            k = np.arange(1, kmax + 1)
            hi = x // k
            lo = np.maximum(r, x // (k + 1))
            s += int((k * (prefix[hi] - prefix[lo])).sum())
        out[x] = s
    return out


def pair_decomposition(lam, w, wl, pmax):
    """Double sums over pairs d, e <= pmax with weight lam[d]*lam[e].

    w[q] and wl[q] must hold the inner sums for modulus q = lcm(d, e)
    (q <= pmax**2 is required). Returns (M, E, S0, S1) where M/E run over
    all pairs against w/wl, S0 is the diagonal d == e of M and S1 the
    off-diagonal part, each including the overall factor 2.
    """
    m_acc = e_acc = s1_acc = 0.0
    m_c = e_c = s1_c = 0.0  # Kahan compensations
    for d in range(1, pmax + 1):
        ld = int(lam[d])
        for e in range(1, pmax + 1):
            q = d * e // math.gcd(d, e)
            wt = ld * int(lam[e])
            term = 2.0 * wt * w[q]
            y = term - m_c
            t = m_acc + y
            m_c = (t - m_acc) - y
            m_acc = t
            term = 2.0 * wt * wl[q]
            y = term - e_c
            t = e_acc + y
            e_c = (t - e_acc) - y
            e_acc = t
            if d != e:
                term = 2.0 * wt * w[q]
                y = term - s1_c
                t = s1_acc + y
                s1_c = (t - s1_acc) - y
                s1_acc = t
    s0 = 2.0 * math.fsum(w[1 : pmax + 1])
    return m_acc, e_acc, s0, s1_acc
