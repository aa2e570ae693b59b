import math

import mpmath
import pytest

import helpers
from quadprime import partial_sums
from quadprime.errors import RangeError
from quadprime.records import INDETERMINATE, SummatoryCurve
from quadprime.sieve import primes_upto


def test_mertens_known_values(t_small):
    assert partial_sums.mertens(t_small, 100) == 1
    assert partial_sums.mertens(t_small, 1000) == 2
    assert partial_sums.mertens(t_small, 10**4) == -23


def test_liouville_known_values(t_small):
    assert partial_sums.liouville_summatory(t_small, 100) == -2
    assert partial_sums.liouville_summatory(t_small, 1000) == -14
    assert partial_sums.liouville_summatory(t_small, 10**4) == -94


def test_summatory_brute(t_small):
    for x in [10, 37, 250]:
        assert partial_sums.mertens(t_small, x) == \
            sum(helpers.mobius(n) for n in range(1, x + 1))
        assert partial_sums.liouville_summatory(t_small, x) == \
            sum(helpers.liouville(n) for n in range(1, x + 1))
    with pytest.raises(RangeError):
        partial_sums.mertens(t_small, t_small.limit + 1)


def test_weighted_sums_brute(t_small):
    x = 300
    assert partial_sums.sum_lambda_over_phi(t_small, x) == pytest.approx(
        math.fsum(helpers.liouville(n) / helpers.euler_phi(n)
                  for n in range(1, x + 1)), abs=1e-13)
    assert partial_sums.sum_mu_over_phi(t_small, x) == pytest.approx(
        math.fsum(helpers.mobius(n) / helpers.euler_phi(n)
                  for n in range(1, x + 1)), abs=1e-13)
    assert partial_sums.sum_lambda_vonmangoldt(t_small, x) == pytest.approx(
        math.fsum(helpers.liouville(n) * helpers.von_mangoldt(n)
                  for n in range(1, x + 1)), abs=1e-10)
    assert partial_sums.sum_mu_vonmangoldt(t_small, x) == pytest.approx(
        math.fsum(helpers.mobius(n) * helpers.von_mangoldt(n)
                  for n in range(1, x + 1)), abs=1e-10)


def test_two_route_lambda_over_phi(t_small):
    direct = partial_sums.sum_lambda_over_phi(t_small, 10**4)
    rearranged = partial_sums.sum_lambda_over_phi_rearranged(t_small, 10**4)
    assert abs(direct - rearranged) <= 1e-12


@pytest.mark.parametrize("fn,factor", [
    (partial_sums.product_c0,
     lambda p: 1 - mpmath.mpf(1) / ((p * p - 1) * (p - 1))),
    (partial_sums.product_sum_lambda_n_phi,
     lambda p: 1 - mpmath.mpf(p) / ((p * p + 1) * (p - 1))),
    (partial_sums.product_artin_like,
     lambda p: 1 - mpmath.mpf(1) / (p * (p - 1))),
])
def test_products_vs_mpmath(fn, factor):
    P = 10**4
    with mpmath.workdps(40):
        want = mpmath.mpf(1)
        for p in primes_upto(P):
            want *= factor(int(p))
        est = fn(P)
        assert abs(est.value - float(want)) < 1e-14
    assert est.truncation_prime == P
    assert est.tail_estimate > 0


def test_product_reference_digits():
    est = partial_sums.product_c0(10**6)
    assert abs(est.value - partial_sums.C0_REFERENCE) < 1e-11
    est = partial_sums.product_artin_like(10**6)
    # the stored reference is only right to the 7th decimal
    assert abs(est.value - 0.3739558) < 2e-7


def test_a0_phi_square_sum(t_small):
    est = partial_sums.a0_phi_square_sum(200, t_small.phi_table())
    want = math.fsum(1.0 / helpers.euler_phi(n * n) for n in range(1, 201))
    assert est.value == pytest.approx(want, abs=1e-13)
    with pytest.raises(RangeError):
        partial_sums.a0_phi_square_sum(t_small.limit + 1, t_small.phi_table())


def test_musq_over_phi_drift(t_small):
    v1, d1 = partial_sums.sum_musq_over_phi(t_small, 10**3)
    v2, d2 = partial_sums.sum_musq_over_phi(t_small, 10**4)
    assert v2 > v1
    # the drift value - log x settles toward a constant
    assert abs(d2 - d1) < 0.05


def test_product_sum_equivalence_logged(t_small):
    v = partial_sums.product_sum_equivalence_check(t_small, 10**4)
    assert v.status == INDETERMINATE
    assert "ratio" in v.computed


def test_summatory_curve(t_small):
    curve = partial_sums.summatory_curve(
        t_small, lambda t, x: float(x) ** 2, grid=(10, 100, 1000, 10**4))
    assert curve.exponent_fit == pytest.approx(2.0, abs=1e-9)
    with pytest.raises(ValueError):
        SummatoryCurve.from_points([(10, 1.0), (10, 2.0)])
