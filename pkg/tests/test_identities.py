import math
from math import isqrt

import numpy as np
import pytest

import helpers
from quadprime import identities
from quadprime.errors import ParameterError, RangeError
from quadprime.records import VERIFIED, FALSIFIED


def is_square(n):
    return isqrt(n) ** 2 == n


def test_square_indicator_points(t_small):
    for n in [1, 2, 4, 16, 36, 97, 100, 9801, 9999]:
        assert identities.square_indicator(t_small, n) == (1 if is_square(n) else 0)


def test_square_indicator_scan(t_small):
    s = identities.square_indicator_scan(t_small, 10**4)
    for n in range(1, 10**4 + 1):
        assert s[n] == (1 if is_square(n) else 0), n
    with pytest.raises(RangeError):
        identities.square_indicator_scan(t_small, t_small.limit + 1)


def test_quad_linear_weight(t_small):
    # nonzero exactly at n = m*m with m*m + 1 a prime power
    assert identities.quad_linear_weight(t_small, 16) == pytest.approx(math.log(17))
    assert identities.quad_linear_weight(t_small, 15) == 0.0
    assert identities.quad_linear_weight(t_small, 36) == pytest.approx(math.log(37))
    assert identities.quad_linear_weight(t_small, 64) == 0.0  # 65 = 5 * 13


def test_vonmangoldt_divisor_sum(t_small):
    for n in range(2, 400):
        c = identities.check_vonmangoldt_divisor_sum(t_small, n)
        assert c.equal, (n, c.lhs, c.rhs)


def test_mobius_square_divisors(t_small):
    for n in range(1, 400):
        assert identities.check_mobius_square_divisors(t_small, n).equal, n
    lhs, lam = identities.mobius_square_divisors_scan(t_small, 10**4)
    assert np.array_equal(lhs[1:], lam[1:].astype(lhs.dtype))


def test_hyperbola_splits(t_small):
    for n in range(2, 500):
        vm_c, li_c, sq_c = identities.check_hyperbola_splits(t_small, n)
        assert vm_c.equal, n
        assert li_c.equal, n
        # the squared split loses its cross term exactly at perfect squares
        assert sq_c.equal == (not is_square(n)), n
        if not sq_c.equal:
            assert sq_c.detail["is_square"]
            assert sq_c.detail["cross_term"] != 0 or sq_c.rhs != sq_c.lhs


def test_lambda_floor_sum(t_small):
    for x in [1, 2, 10, 99, 100, 5000]:
        assert identities.lambda_floor_sum(t_small, x).equal, x
    scan = identities.lambda_floor_sum_scan(t_small, 10**4)
    for x in range(1, 10**4 + 1):
        assert scan[x] == isqrt(x), x


def test_summation_identity(t_small):
    c = identities.check_summation_identity(t_small, 10**4)
    assert c.equal
    assert c.detail["relative_residual"] <= 1e-10
    # brute oracle at tiny x
    x = 200
    vm = [helpers.von_mangoldt(n) for n in range(x + 2)]
    lhs = math.fsum(vm[m * m + 1] for m in range(1, isqrt(x) + 1))
    c2 = identities.check_summation_identity(t_small, x)
    assert c2.lhs == pytest.approx(lhs, abs=1e-12)


def test_wilson_printed_instance():
    v = identities.wilson_quadratic_check(37)
    assert v.status == VERIFIED
    # 18! mod 37 is 31, i.e. -6, and 37 = 6^2 + 1
    assert v.computed["half_factorial_mod_p"] == 31
    assert v.computed["a"] == 6


def test_wilson_exception_at_3():
    v = identities.wilson_quadratic_check(3)
    assert v.status == FALSIFIED
    assert v.computed["congruence_holds"] and not v.computed["p_is_a_squared_plus_one"]


def test_wilson_small_sweep():
    for p in range(5, 1000):
        if helpers.trial_is_prime(p):
            assert identities.wilson_quadratic_check(p).status == VERIFIED, p
    with pytest.raises(ParameterError):
        identities.wilson_quadratic_check(9)


def test_squared_divisor_floor_sum(t_small):
    c = identities.check_squared_divisor_floor_sum(t_small, 500)
    assert c.equal  # direct route
    assert c.lhs == isqrt(500)
    # the grouped double floor sum is a different quantity
    assert not c.detail["double_matches"]
