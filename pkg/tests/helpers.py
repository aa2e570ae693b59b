"""Slow, independent reference implementations used as test oracles.

Everything here is trial division and brute force on purpose: no code is
shared with the package internals beyond the standard library.
"""

import math
from math import isqrt


def trial_factorize(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def trial_spf(n):
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            return p
    return n


def trial_is_prime(n):
    return n >= 2 and trial_spf(n) == n


def big_omega(n):
    return sum(e for _, e in trial_factorize(n))


def liouville(n):
    return -1 if big_omega(n) % 2 else 1


def mobius(n):
    f = trial_factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n):
    out = n
    for p, _ in trial_factorize(n):
        out -= out // p
    return out


def von_mangoldt(n):
    if n < 2:
        return 0.0
    f = trial_factorize(n)
    if len(f) == 1:
        return math.log(f[0][0])
    return 0.0


def divisors(n):
    out = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def psi_brute(x, q, a):
    return math.fsum(von_mangoldt(n) for n in range(1, x + 1) if n % q == a % q)


def pi_brute(x, q, a):
    return sum(1 for n in range(2, x + 1)
               if n % q == a % q and trial_is_prime(n))
