"""Agreement tests between the jitted and pure-numpy kernel sets."""

import numpy as np
import pytest

from quadprime.backends import numpy_kernels

numba_kernels = pytest.importorskip("quadprime.backends.numba_kernels")

N = 4000


@pytest.fixture(scope="module")
def spf():
    return numpy_kernels.build_spf(N, 1 << 10)


@pytest.fixture(scope="module")
def lam(spf):
    om = numpy_kernels.omega_table(spf)
    lam = np.where((om & 1).astype(bool), -1, 1).astype(np.int8)
    lam[0] = 0
    return lam


def test_build_spf_agrees(spf):
    assert np.array_equal(spf, numba_kernels.build_spf(N, 1 << 10))
    # also across segment sizes on the jitted side
    assert np.array_equal(spf, numba_kernels.build_spf(N, 1 << 14))


@pytest.mark.parametrize("name", ["omega_table", "mobius_table", "phi_table",
                                  "vonmangoldt_table", "primes_from_spf"])
def test_tables_agree(spf, name):
    a = getattr(numpy_kernels, name)(spf)
    b = getattr(numba_kernels, name)(spf)
    assert np.allclose(np.asarray(a, np.float64), np.asarray(b, np.float64))


def test_divisor_sums_agree(lam):
    assert np.array_equal(numpy_kernels.divisor_sums_int(lam),
                          numba_kernels.divisor_sums_int(lam))
    rng = np.random.default_rng(7)
    w = rng.standard_normal(N + 1)
    assert np.allclose(numpy_kernels.divisor_sums_float(w),
                       numba_kernels.divisor_sums_float(w))


def test_floor_sum_scan_agree(lam):
    assert np.array_equal(numpy_kernels.floor_sum_scan(lam, N),
                          numba_kernels.floor_sum_scan(lam, N))


def test_multiple_sums_agree():
    rng = np.random.default_rng(11)
    vals = rng.standard_normal(N + 1)
    assert np.allclose(numpy_kernels.multiple_sums(vals, N),
                       numba_kernels.multiple_sums(vals, N))


def test_pair_decomposition_agree(lam):
    w = numpy_kernels.multiple_sums(lam.astype(np.float64), N)
    rng = np.random.default_rng(13)
    wl = rng.standard_normal(N + 1)
    for pmax in (2, 7, 31, 63):
        a = numpy_kernels.pair_decomposition(lam, w, wl, pmax)
        b = numba_kernels.pair_decomposition(lam, w, wl, pmax)
        assert np.allclose(a, b), pmax


def test_backend_env_selection(monkeypatch):
    import importlib
    import quadprime.backends as bk
    monkeypatch.setenv("QUADPRIME_BACKEND", "numpy")
    mod = importlib.reload(bk)
    assert mod.BACKEND == "numpy"
    monkeypatch.delenv("QUADPRIME_BACKEND")
    mod = importlib.reload(bk)
    assert mod.BACKEND in ("numba", "numpy")
    monkeypatch.setenv("QUADPRIME_BACKEND", "bogus")
    with pytest.raises(RuntimeError):
        importlib.reload(bk)
    monkeypatch.delenv("QUADPRIME_BACKEND")
    importlib.reload(bk)
