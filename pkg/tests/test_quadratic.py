import math

import pytest

import helpers
from quadprime import quadratic
from quadprime.errors import ParameterError, RangeError
from quadprime.quadratic import QuadraticPoly
from quadprime.records import VERIFIED, FALSIFIED


def test_poly_basics():
    f = QuadraticPoly(1, 0, 1)
    assert f(10) == 101
    assert f.discriminant == -4
    assert f.content == 1
    assert f.irreducible
    assert str(f) == "1x^2+0x+1"
    assert not QuadraticPoly(1, 0, -4).irreducible  # (x-2)(x+2)
    with pytest.raises(ParameterError):
        QuadraticPoly(0, 1, 1)


def test_fixed_divisor():
    assert quadratic.fixed_divisor([1, 0, 1]) == 1      # x^2 + 1
    assert quadratic.fixed_divisor([2, 1, 1]) == 2      # x^2 + x + 2
    assert quadratic.fixed_divisor([0, 1, 1]) == 2      # x(x + 1)
    assert quadratic.fixed_divisor([6, 11, 6, 1]) == 6  # (x+1)(x+2)(x+3)
    with pytest.raises(ParameterError):
        quadratic.fixed_divisor([5])


def test_admissibility():
    good = quadratic.admissibility(QuadraticPoly(1, 0, 1))
    assert good.admissible and good.fixed_divisor == 1
    bad = quadratic.admissibility(QuadraticPoly(1, 1, 2))
    assert not bad.admissible and bad.fixed_divisor == 2
    square_disc = quadratic.admissibility(QuadraticPoly(1, 0, -4))
    assert not square_disc.admissible


def test_nu_f_small_primes():
    f = QuadraticPoly(1, 0, 1)
    assert quadratic.nu_f(f, 2) == 1
    for p in [5, 13, 17, 29]:   # p = 1 mod 4: two square roots of -1
        assert quadratic.nu_f(f, p) == 2, p
    for p in [3, 7, 11, 19]:    # p = 3 mod 4: none
        assert quadratic.nu_f(f, p) == 0, p
    assert quadratic.nu_f(f, 1) == 1


def test_nu_f_multiplicative_and_lifting():
    f = QuadraticPoly(1, 0, 1)
    for q in [25, 65, 85, 125, 169, 845]:
        direct = quadratic.nu_f(f, q)
        via_factors = quadratic.nu_f(f, q, direct_scan_bound=1)
        assert direct == via_factors, q
    # singular lifting case: f = x^2 has p roots mod p^2
    g = QuadraticPoly(1, 0, 0)
    assert quadratic.nu_f(g, 9, direct_scan_bound=1) == quadratic.nu_f(g, 9)
    with pytest.raises(ParameterError):
        quadratic.nu_f(f, 0)


def test_count_quadratic_primes_first_five():
    f = QuadraticPoly(1, 0, 1)
    count, values = quadratic.count_quadratic_primes(f, 10)
    assert count == 5
    assert sorted(v for _, v in values) == [2, 5, 17, 37, 101]


def test_count_matches_brute():
    f = QuadraticPoly(2, 3, 5)
    count, values = quadratic.count_quadratic_primes(f, 300)
    want = sum(1 for n in range(1, 301) if helpers.trial_is_prime(f(n)))
    assert count == want
    assert all(helpers.trial_is_prime(v) for _, v in values[:20])


def test_count_overflow_guard():
    f = QuadraticPoly(1, 0, 1)
    with pytest.raises(RangeError):
        quadratic.count_quadratic_primes(f, 10**10)


def test_legendre_symbol():
    p = 13
    residues = {pow(a, 2, p) for a in range(1, p)}
    for u in range(1, p):
        want = 1 if u in residues else -1
        assert quadratic.legendre_symbol(u, p) == want, u
    assert quadratic.legendre_symbol(26, 13) == 0


def test_a2_constant():
    est = quadratic.a2_constant(10**5)
    assert abs(est.value - quadratic.A2_REFERENCE) < 1e-3
    assert est.detail["partial_products_by_decade"]
    with pytest.raises(ParameterError):
        quadratic.a2_constant(2)


def test_hardy_littlewood_matches_a2():
    f = QuadraticPoly(1, 0, 1)
    hl = quadratic.hardy_littlewood_constant(f, 10**5)
    a2 = quadratic.a2_constant(10**5)
    assert hl.value == pytest.approx(a2.value, rel=1e-12)
    assert hl.detail["epsilon"] == 1.0
    with pytest.raises(ParameterError):
        quadratic.hardy_littlewood_constant(QuadraticPoly(1, 1, 2), 100)


def test_hardy_littlewood_other_polynomial():
    # x^2 + x + 41 (Euler): famously prime-rich, constant well above 1
    est = quadratic.hardy_littlewood_constant(QuadraticPoly(1, 1, 41), 10**5)
    assert est.value > 2.0


def test_least_prime():
    f = QuadraticPoly(1, 0, 1)
    assert quadratic.least_prime(f, 100) == (1, 2)
    g = QuadraticPoly(1, 0, 15)  # 15, 16 composite; 19 at n = 2
    assert quadratic.least_prime(g, 100) == (2, 19)
    assert quadratic.least_prime(QuadraticPoly(4, 0, 16), 5) is None


def test_sqrt_fractional_check():
    v = quadratic.sqrt_fractional_check(17)
    assert v.status == VERIFIED
    frac = math.sqrt(17) - 4
    assert v.computed["fractional_part"] == pytest.approx(frac, rel=1e-12)
    v2 = quadratic.sqrt_fractional_check(2)
    assert v2.status == FALSIFIED and v2.documented_exception
    with pytest.raises(ParameterError):
        quadratic.sqrt_fractional_check(7)
    with pytest.raises(ParameterError):
        quadratic.sqrt_fractional_check(17, c=0.4)


def test_prime_power_scan_empty():
    assert quadratic.prime_power_scan(2000) == []


def test_quadratic_primes_generator():
    got = list(quadratic.quadratic_primes(20))
    want = [(n, n * n + 1) for n in range(1, 21)
            if helpers.trial_is_prime(n * n + 1)]
    assert got == want
    # beyond n = 1, only even n can work
    assert all(n % 2 == 0 for n, _ in got[1:])


def test_lambda_psi_quadratic():
    want = math.fsum(helpers.von_mangoldt(n * n + 1) for n in range(1, 51))
    assert quadratic.lambda_psi_quadratic(50) == pytest.approx(want, abs=1e-10)
    with pytest.raises(RangeError):
        quadratic.lambda_psi_quadratic(2**33)


def test_harmonic_and_zeta_sums():
    h = quadratic.harmonic_sum_A(100)
    assert 0.8 < h < 1.0  # 1/2 + 1/5 + 1/17 + ... converges fast
    z = quadratic.zeta_A_truncated(1.0, 100)
    assert z > 1.0
    assert quadratic.zeta_A_truncated(2.0, 100) < z
    with pytest.raises(ParameterError):
        quadratic.zeta_A_truncated(0.5, 100)


def test_restricted_psi_growth():
    rows = quadratic.restricted_psi_growth([100, 1000])
    assert len(rows) == 2
    assert rows[0][0] == 100 and rows[1][1] > rows[0][1]
    # psi restricted to the quadratic sequence grows roughly linearly
    assert 0.3 < rows[1][2] < 2.0
