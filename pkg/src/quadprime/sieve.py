"""Smallest-prime-factor tables and 64-bit primality.

A :class:`SieveTable` is an immutable per-integer table on [1, N]: the
smallest prime factor of each n, plus lazily built derived tables for
Omega, lambda (Liouville), mu (Mobius), phi (Euler totient) and the
vonMangoldt weight. Construction goes through the active kernel backend;
after construction everything is read-only and safe to share.

Beyond the table, :func:`is_prime_wide` gives exact primality for any
n < 2**64 via a deterministic strong-probable-prime base set.
"""

import math
import os
import struct
from dataclasses import dataclass, field

import numpy as np

from .backends import kernels
from .errors import CapacityError, RangeError

DEFAULT_SEGMENT_SIZE = 1 << 16
DEFAULT_LIMIT_CAP = 1 << 32
MIN_SEGMENT_SIZE = 1 << 10

CACHE_ENV = "QUADPRIME_CACHE"
_CACHE_MAGIC = b"SPF1"
_CACHE_VERSION = 1


@dataclass
class Factorization:
    n: int
    factors: list  # ordered (prime, exponent) pairs

    def divisors(self):
        """All divisors of n, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


@dataclass
class SieveTable:
    limit: int
    segment_size: int
    spf: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    # -- derived tables (built once, then shared read-only) -------------

    def _table(self, name, builder):
        arr = self._cache.get(name)
        if arr is None:
            arr = builder(self.spf)
            arr.setflags(write=False)
            self._cache[name] = arr
        return arr

    def omega_table(self):
        return self._table("omega", kernels.omega_table)

    def liouville_table(self):
        arr = self._cache.get("lam")
        if arr is None:
            omega = self.omega_table()
            arr = np.where((omega & 1).astype(bool), -1, 1).astype(np.int8)
            arr[0] = 0
            arr.setflags(write=False)
            self._cache["lam"] = arr
        return arr

    def mobius_table(self):
        return self._table("mu", kernels.mobius_table)

    def phi_table(self):
        return self._table("phi", kernels.phi_table)

    def vonmangoldt_table(self):
        return self._table("vm", kernels.vonmangoldt_table)

    def primes(self):
        arr = self._cache.get("primes")
        if arr is None:
            arr = kernels.primes_from_spf(self.spf)
            arr.setflags(write=False)
            self._cache["primes"] = arr
        return arr

    # -- point queries ---------------------------------------------------

    def _check(self, n, lo=1):
        if not lo <= n <= self.limit:
            raise RangeError(f"n={n} outside table range [{lo}, {self.limit}]")

    def is_prime(self, n):
        self._check(n, lo=2)
        return int(self.spf[n]) == n

    def factorize(self, n):
        self._check(n, lo=2)
        factors = []
        m = n
        while m > 1:
            p = int(self.spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        return Factorization(n, factors)

    def divisors(self, n):
        if n == 1:
            return [1]
        return self.factorize(n).divisors()

    def big_omega(self, n):
        self._check(n)
        return int(self.omega_table()[n])

    def liouville(self, n):
        self._check(n)
        return int(self.liouville_table()[n])

    def mobius(self, n):
        self._check(n)
        return int(self.mobius_table()[n])

    def euler_phi(self, n):
        self._check(n)
        return int(self.phi_table()[n])

    def von_mangoldt(self, n):
        self._check(n)
        return float(self.vonmangoldt_table()[n])


def build_table(limit, segment_size=DEFAULT_SEGMENT_SIZE, limit_cap=DEFAULT_LIMIT_CAP,
                cache_dir=None):
    """Build (or load from cache) a SieveTable on [1, limit]."""
    if limit < 2:
        raise RangeError(f"limit must be >= 2, got {limit}")
    if limit > limit_cap:
        raise CapacityError(
            f"limit {limit} exceeds the configured cap {limit_cap} "
            f"(~{4 * limit_cap / 2**30:.1f} GiB of spf entries); raise limit_cap to override"
        )
    if segment_size < MIN_SEGMENT_SIZE:
        raise RangeError(f"segment_size must be >= {MIN_SEGMENT_SIZE}")

    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    if cache_dir:
        spf = _cache_load(cache_dir, limit)
        if spf is not None:
            return SieveTable(limit, segment_size, spf)

    spf = kernels.build_spf(limit, segment_size)
    spf.setflags(write=False)
    if cache_dir:
        _cache_store(cache_dir, limit, spf)
    return SieveTable(limit, segment_size, spf)


def _cache_path(cache_dir, limit):
    return os.path.join(cache_dir, f"spf_{limit}_v{_CACHE_VERSION}.bin")


def _cache_store(cache_dir, limit, spf):
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, limit)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<I", _CACHE_VERSION))
        fh.write(struct.pack("<Q", limit))
        fh.write(spf.astype("<u4", copy=False).tobytes())
    os.replace(tmp, path)


def _cache_load(cache_dir, limit):
    path = _cache_path(cache_dir, limit)
    if not os.path.exists(path):
        return None
    with open(path, "rb") as fh:
        if fh.read(4) != _CACHE_MAGIC:
            return None
        (version,) = struct.unpack("<I", fh.read(4))
        (stored_limit,) = struct.unpack("<Q", fh.read(8))
        if version != _CACHE_VERSION or stored_limit != limit:
            return None
        data = fh.read(4 * (limit + 1))
    if len(data) != 4 * (limit + 1):
        return None
    spf = np.frombuffer(data, dtype="<u4").astype(np.uint32)
    spf.setflags(write=False)
    return spf


# -- cached prime list for Euler-product truncations --------------------

_prime_cache = {"limit": 0, "primes": None}


def primes_upto(limit):
    """Array of primes <= limit, backed by a single cached sieve."""
    if limit < 2:
        return np.empty(0, np.int64)
    if _prime_cache["limit"] < limit:
        table = build_table(limit)
        _prime_cache["limit"] = limit
        _prime_cache["primes"] = table.primes().astype(np.int64)
    primes = _prime_cache["primes"]
    cut = np.searchsorted(primes, limit, side="right")
    return primes[:cut]


# -- deterministic 64-bit primality -------------------------------------

# (bound, witness set): strong-probable-prime tests with these witnesses
# are exact for all n below the bound.
_MR_TIERS = [
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_wide(n):
    """Exact primality for 0 <= n < 2**64."""
    if n < 0 or n >= 1 << 64:
        raise RangeError(f"is_prime_wide supports 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, witnesses in _MR_TIERS:
        if n < bound:
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_kth_root(v, k):
    """Largest r with r**k <= v (v >= 0, k >= 1)."""
    if v < 0 or k < 1:
        raise RangeError("integer_kth_root needs v >= 0, k >= 1")
    if v < 2 or k == 1:
        return v
    r = int(round(v ** (1.0 / k)))
    while r > 1 and r**k > v:
        r -= 1
    while (r + 1) ** k <= v:
        r += 1
    return r


def prime_power_log(v, max_exponent=40):
    """log p if v = p**k for prime p and 1 <= k <= max_exponent, else 0.0."""
    if v < 2:
        return 0.0
    if is_prime_wide(v):
        return math.log(v)
    for k in range(2, max_exponent + 1):
        if 1 << k > v:
            break
        r = integer_kth_root(v, k)
        if r**k == v and is_prime_wide(r):
            return math.log(r)
    return 0.0
