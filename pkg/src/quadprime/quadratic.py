"""Quadratic-polynomial prime machinery.

Prime counts along f(n) = a n^2 + b n + c, fixed divisors and root counts,
admissibility conditions, the two Hardy-Littlewood style density
constants, least primes, fractional-part checks, and truncated sums over
the primes of the form n^2 + 1.
"""

import math
from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import ParameterError, RangeError
from .records import ClaimVerdict, ConstantEstimate, VERIFIED, FALSIFIED
from .sieve import is_prime_wide, integer_kth_root, prime_power_log, primes_upto

A2_REFERENCE = 1.37281346  # printed reference value for the n^2+1 density constant

_MAX_PRIME_VALUE = (1 << 63) - 1
_VALUE_LIST_CAP = 10000


@dataclass
class QuadraticPoly:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise ParameterError("leading coefficient a must be nonzero")

    def __call__(self, n):
        return (self.a * n + self.b) * n + self.c

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self):
        return gcd(gcd(abs(self.a), abs(self.b)), abs(self.c))

    @property
    def irreducible(self):
        d = self.discriminant
        return d < 0 or isqrt(d) ** 2 != d

    def __str__(self):
        return f"{self.a}x^2{self.b:+d}x{self.c:+d}"


@dataclass
class AdmissibilityReport:
    gcd_abc: int
    disc_nonsquare: bool
    fixed_divisor: int
    odd_condition: bool
    admissible: bool


def admissibility(f):
    g = f.content
    disc_ok = f.irreducible
    fd = fixed_divisor([f.c, f.b, f.a])
    odd = gcd(abs(f.a + f.b), abs(f.c)) % 2 == 1
    return AdmissibilityReport(
        gcd_abc=g,
        disc_nonsquare=disc_ok,
        fixed_divisor=fd,
        odd_condition=odd,
        admissible=g == 1 and disc_ok and fd == 1,
    )


def fixed_divisor(coeffs):
    """gcd of f(Z) for f given by coeffs [c0, c1, ..., cd] (ascending).

    gcd(f(0), ..., f(deg f)) suffices: the finite differences of order
    k are k! times integer combinations, so any common divisor of the
    first deg+1 values divides every value.
    """
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    if deg < 1:
        raise ParameterError("fixed_divisor needs a nonconstant polynomial")
    g = 0
    for n in range(deg + 1):
        v = 0
        for ck in reversed(coeffs[: deg + 1]):
            v = v * n + ck
        g = gcd(g, abs(v))
    return g


def nu_f(f, q, direct_scan_bound=10**6):
    """Number of roots of f mod q in [0, q).

    Direct scan for small q; prime-power factorization plus CRT
    multiplicativity above the scan bound.
    """
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    if q == 1:
        return 1
    if q <= direct_scan_bound:
        return sum(1 for n in range(q) if f(n) % q == 0)
    count = 1
    for p, e in _trial_factorize(q):
        count *= _nu_prime_power(f, p, e)
        if count == 0:
            return 0
    return count


def _trial_factorize(q):
    factors = []
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return factors


def _nu_prime_power(f, p, e):
    """Roots mod p**e by lifting level by level (handles singular roots)."""
    roots = [n for n in range(p) if f(n) % p == 0]
    mod = p
    for _ in range(e - 1):
        mod *= p
        roots = [r + k * (mod // p) for r in roots for k in range(p)
                 if f(r + k * (mod // p)) % mod == 0]
    return len(roots)


def count_quadratic_primes(f, n_max, collect_values=True):
    """Count n in [1, n_max] with f(n) prime; optionally keep the values."""
    if abs(f(n_max)) > _MAX_PRIME_VALUE or abs(f(-n_max)) > _MAX_PRIME_VALUE:
        cap = isqrt(_MAX_PRIME_VALUE // max(abs(f.a), 1))
        raise RangeError(f"f(n) overflows 63 bits before n_max={n_max}; max n_max ~ {cap}")
    count = 0
    values = [] if collect_values else None
    for n in range(1, n_max + 1):
        v = f(n)
        if v >= 2 and is_prime_wide(v):
            count += 1
            if collect_values and len(values) < _VALUE_LIST_CAP:
                values.append((n, v))
    return count, values


def lambda_psi_quadratic(n_max):
    """sum over n <= n_max of Lambda(n*n + 1) (prime powers detected exactly)."""
    if n_max * n_max + 1 >= 1 << 64:
        raise RangeError(f"n_max={n_max} puts n^2+1 beyond the 64-bit primality range")
    return math.fsum(prime_power_log(n * n + 1) for n in range(1, n_max + 1))


def legendre_symbol(u, p):
    """(u | p) for odd prime p via Euler's criterion; 0 when p | u."""
    u %= p
    if u == 0:
        return 0
    r = pow(u, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _odd_primes_upto(P):
    primes = primes_upto(P)
    return [int(p) for p in primes[primes >= 3]]


def a2_constant(P, tolerance=1e-2):
    """Truncated product over odd p <= P of (1 - chi_p(-1)/(p-1)).

    chi_p(-1) = +1 for p = 1 (mod 4), -1 for p = 3 (mod 4). The product
    converges only conditionally, so the tail estimate is a heuristic
    2 / (sqrt(P) log P) proxy; partial products are logged per decade.
    """
    if P < 3:
        raise ParameterError(f"P must be >= 3, got {P}")
    log_acc = 0.0
    partials = {}
    decade = 10
    for p in _odd_primes_upto(P):
        chi = 1 if p % 4 == 1 else -1
        log_acc += math.log1p(-chi / (p - 1))
        while p > decade:
            decade *= 10
        if p <= decade:
            partials[decade] = math.exp(log_acc)
    value = math.exp(log_acc)
    tail = 2.0 / (math.sqrt(P) * math.log(P))
    return ConstantEstimate(
        value=value, truncation_prime=P, tail_estimate=tail,
        reference_value=A2_REFERENCE, converged=tail <= tolerance,
        detail={"partial_products_by_decade": partials, "tail_model": "heuristic 2/(sqrt(P) log P)"},
    )


def hardy_littlewood_constant(f, P, tolerance=1e-2):
    """Truncated density constant for primes along f.

    eps/sqrt(a) * prod_{p | gcd(a,b)} (1 + 1/(p-1))
               * prod_{2 < p, p not| gcd(a,b), p <= P} (1 - chi_p(disc)/(p-1))
    with chi the Legendre symbol and chi = 0 when p | disc. The eps
    prefactor has no agreed definition; the rule used here (eps = 1 when c
    is odd, else 1/2) is surfaced in the detail dict.
    """
    if P < 3:
        raise ParameterError(f"P must be >= 3, got {P}")
    rep = admissibility(f)
    if not rep.admissible:
        raise ParameterError(f"f={f} is not admissible: {rep}")
    eps = 1.0 if f.c % 2 != 0 else 0.5
    gab = gcd(abs(f.a), abs(f.b))
    disc = f.discriminant
    log_acc = 0.0
    fixed_factor = 1.0
    for p in _odd_primes_upto(P):
        if gab % p == 0:
            fixed_factor *= 1 + 1 / (p - 1)
        else:
            chi = legendre_symbol(disc, p)
            if chi:
                log_acc += math.log1p(-chi / (p - 1))
    if gab % 2 == 0:
        fixed_factor *= 1 + 1 / (2 - 1)
    value = eps / math.sqrt(f.a) * fixed_factor * math.exp(log_acc)
    tail = 2.0 / (math.sqrt(P) * math.log(P))
    return ConstantEstimate(
        value=value, truncation_prime=P, tail_estimate=tail,
        reference_value=A2_REFERENCE if (f.a, f.b, f.c) == (1, 0, 1) else None,
        converged=tail <= tolerance,
        detail={"epsilon": eps, "epsilon_rule": "1 if c odd else 1/2",
                "gcd_ab": gab, "discriminant": disc},
    )


def least_prime(f, n_max):
    """Smallest n >= 0 with f(n) a prime, as (n, f(n)); None if none <= n_max."""
    for n in range(n_max + 1):
        v = f(n)
        if v >= 2 and v < 1 << 64 and is_prime_wide(v):
            return n, v
    return None


def sqrt_fractional_check(p, c=0.55):
    """Check {sqrt p} < c / sqrt(p) for a prime p = n*n + 1.

    The fractional part is computed cancellation-free as 1/(sqrt(p) + n),
    exact to full double precision. Also reports {sqrt p} - 1/(2n).
    """
    if c <= 0.5:
        raise ParameterError(f"c must be > 1/2, got {c}")
    n = isqrt(p - 1)
    if n * n + 1 != p or not is_prime_wide(p):
        raise ParameterError(f"p={p} is not a prime of the form n^2+1")
    frac = 1.0 / (math.sqrt(p) + n)
    bound = c / math.sqrt(p)
    ok = frac < bound
    return ClaimVerdict(
        claim_id=f"sqrt-fractional-{p}",
        statement="{sqrt p} < c/sqrt(p) for primes p = n^2+1",
        inputs={"p": p, "n": n, "c": c},
        computed={"fractional_part": frac, "bound": bound,
                  "asymptotic_residual": frac - 1.0 / (2 * n) if n else None},
        expected="fractional part below bound",
        status=VERIFIED if ok else FALSIFIED,
        documented_exception=not ok and n == 1,  # p=2 small-case exception
    )


def prime_power_scan(n_max):
    """All p**k = m*m + 1 with k >= 2, 1 <= m <= n_max, as (p, k, m) triples.

    Even k is impossible (two squares differing by 1), so only odd k >= 3
    is scanned.
    """
    found = []
    for m in range(1, n_max + 1):
        v = m * m + 1
        k = 3
        while (1 << k) <= v:
            r = integer_kth_root(v, k)
            if r**k == v and is_prime_wide(r):
                found.append((r, k, m))
            k += 2
    return found


def quadratic_primes(n_max):
    """Generator of (n, p) with p = n*n + 1 prime, n <= n_max."""
    if 1 <= n_max:
        yield 1, 2
    for n in range(2, n_max + 1, 2):
        v = n * n + 1
        if is_prime_wide(v):
            yield n, v


def harmonic_sum_A(n_max):
    """sum of 1/p over primes p = n*n + 1 with generator n <= n_max."""
    return math.fsum(1.0 / p for _, p in quadratic_primes(n_max))


def zeta_A_truncated(s, n_max):
    """Truncated Euler product of the zeta function over primes n*n + 1."""
    if s <= 0.5:
        raise ParameterError(f"s must be > 1/2, got {s}")
    log_acc = math.fsum(-math.log1p(-p ** (-s)) for _, p in quadratic_primes(n_max))
    return math.exp(log_acc)


def restricted_psi_growth(n_grid):
    """(n, psi, psi/n) samples of sum Lambda(m^2+1), m <= n, on a grid."""
    rows = []
    for n in sorted(n_grid):
        v = lambda_psi_quadratic(n)
        rows.append((n, v, v / n))
    return rows
