"""Numba-jitted kernels: the default path for every hot loop.

Mirrors ``numpy_kernels`` function for function; results agree exactly for
integer outputs and to rounding order for float sums.
"""

import math

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _isqrt(n):
    if n < 0:
        return 0
    r = int(math.sqrt(n))
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit(cache=True)
def build_spf(limit, segment_size):
    spf = np.zeros(limit + 1, np.uint32)
    root = _isqrt(limit)
    # base primes up to sqrt(limit)
    comp = np.zeros(root + 1, np.uint8)
    nbase = 0
    for p in range(2, root + 1):
        if comp[p] == 0:
            nbase += 1
            for m in range(p * p, root + 1, p):
                comp[m] = 1
    base = np.empty(nbase, np.int64)
    i = 0
    for p in range(2, root + 1):
        if comp[p] == 0:
            base[i] = p
            i += 1
    for lo in range(2, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        for bi in range(nbase):
            p = base[bi]
            start = p * p
            if start < lo:
                start = ((lo + p - 1) // p) * p
            for m in range(start, hi, p):
                if spf[m] == 0:
                    spf[m] = p
    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = n
    return spf


@njit(cache=True)
def omega_table(spf):
    n = len(spf) - 1
    omega = np.zeros(n + 1, np.uint8)
    for v in range(2, n + 1):
        m = v
        c = 0
        while m > 1:
            p = spf[m]
            while m % p == 0:
                m //= p
                c += 1
        omega[v] = c
    return omega


@njit(cache=True)
def mobius_table(spf):
    n = len(spf) - 1
    mu = np.zeros(n + 1, np.int8)
    if n >= 1:
        mu[1] = 1
    for v in range(2, n + 1):
        m = v
        sign = 1
        squarefree = True
        while m > 1:
            p = spf[m]
            m //= p
            if m % p == 0:
                squarefree = False
                break
            sign = -sign
        mu[v] = sign if squarefree else 0
    return mu


@njit(cache=True)
def phi_table(spf):
    n = len(spf) - 1
    phi = np.zeros(n + 1, np.int64)
    if n >= 1:
        phi[1] = 1
    for v in range(2, n + 1):
        m = v
        result = 1
        while m > 1:
            p = spf[m]
            pe = 1
            while m % p == 0:
                m //= p
                pe *= p
            result *= pe - pe // p
        phi[v] = result
    return phi


@njit(cache=True)
def vonmangoldt_table(spf):
    n = len(spf) - 1
    vm = np.zeros(n + 1, np.float64)
    for v in range(2, n + 1):
        p = spf[v]
        m = v
        while m % p == 0:
            m //= p
        if m == 1:
            vm[v] = math.log(p)
    return vm


@njit(cache=True)
def divisor_sums_int(weights):
    n = len(weights) - 1
    out = np.zeros(n + 1, np.int64)
    for d in range(1, n + 1):
        w = weights[d]
        if w != 0:
            for m in range(d, n + 1, d):
                out[m] += w
    return out


@njit(cache=True)
def divisor_sums_float(weights):
    n = len(weights) - 1
    out = np.zeros(n + 1, np.float64)
    for d in range(1, n + 1):
        w = weights[d]
        if w != 0.0:
            for m in range(d, n + 1, d):
                out[m] += w
    return out


@njit(cache=True)
def multiple_sums(values, qmax):
    n = len(values) - 1
    out = np.zeros(qmax + 1, np.float64)
    for q in range(1, qmax + 1):
        acc = 0.0
        c = 0.0
        for m in range(q, n + 1, q):
            y = values[m] - c
            t = acc + y
            c = (t - acc) - y
            acc = t
        out[q] = acc
    return out


@njit(cache=True)
def floor_sum_scan(lam, xmax):
    lam64 = lam[: xmax + 1].astype(np.int64)
    prefix = np.zeros(xmax + 1, np.int64)
    for i in range(1, xmax + 1):
        prefix[i] = prefix[i - 1] + lam64[i]
    out = np.zeros(xmax + 1, np.int64)
    for x in range(1, xmax + 1):
        r = _isqrt(x)
        s = 0
        for n in range(1, r + 1):
            s += lam64[n] * (x // n)
        kmax = x // (r + 1)
        for k in range(1, kmax + 1):
            hi = x // k
            lo = x // (k + 1)
            if lo < r:
                lo = r
            s += k * (prefix[hi] - prefix[lo])
        out[x] = s
    return out


@njit(cache=True)
def pair_decomposition(lam, w, wl, pmax):
    m_acc = 0.0
    e_acc = 0.0
    s1_acc = 0.0
    m_c = 0.0
    e_c = 0.0
    s1_c = 0.0
    for d in range(1, pmax + 1):
        ld = lam[d]
        for e in range(1, pmax + 1):
            a = d
            b = e
            while b:
                a, b = b, a % b
            q = d * e // a
            wt = ld * lam[e]
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
    s0 = 0.0
    c = 0.0
    for d in range(1, pmax + 1):
        y = 2.0 * w[d] - c
        t = s0 + y
        c = (t - s0) - y
        s0 = t
    return m_acc, e_acc, s0, s1_acc


def primes_from_spf(spf):
    n = len(spf) - 1
    idx = np.arange(n + 1, dtype=np.int64)
    primes = np.nonzero(spf == idx)[0]
    return primes[primes >= 2]
