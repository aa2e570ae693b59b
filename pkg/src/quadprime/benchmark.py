"""Side-by-side timing of the numba and numpy kernel backends.

Run as ``python -m quadprime.benchmark [--limit N] [--repeat R]``. Imports
both backend modules directly (ignoring QUADPRIME_BACKEND), checks that
they agree on every kernel, and prints best-of-R wall times.
"""

import argparse
import time

import numpy as np

from .backends import numpy_kernels

try:
    from .backends import numba_kernels
except ImportError:
    numba_kernels = None


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def run(limit, repeat):
    backends = [("numpy", numpy_kernels)]
    if numba_kernels is not None:
        backends.append(("numba", numba_kernels))
    else:
        print("numba not importable; timing numpy only")

    spf = numpy_kernels.build_spf(limit, 1 << 16)
    lam_small = np.where(
        (numpy_kernels.omega_table(spf) & 1).astype(bool), -1, 1
    ).astype(np.int8)
    lam_small[0] = 0
    weights = lam_small.astype(np.float64)
    xmax = min(limit, 10**4)
    pmax = max(2, int(limit ** 0.25))
    w = numpy_kernels.multiple_sums(weights, limit)

    cases = [
        ("build_spf", lambda k: k.build_spf(limit, 1 << 16)),
        ("omega_table", lambda k: k.omega_table(spf)),
        ("mobius_table", lambda k: k.mobius_table(spf)),
        ("phi_table", lambda k: k.phi_table(spf)),
        ("vonmangoldt_table", lambda k: k.vonmangoldt_table(spf)),
        ("divisor_sums_int", lambda k: k.divisor_sums_int(lam_small)),
        ("floor_sum_scan", lambda k: k.floor_sum_scan(lam_small[: xmax + 1], xmax)),
        ("multiple_sums", lambda k: k.multiple_sums(weights, limit)),
        ("pair_decomposition",
         lambda k: k.pair_decomposition(lam_small, w, w, pmax)),
    ]

    if numba_kernels is not None:
        # trigger jit compilation outside the timed region
        for _, call in cases:
            call(numba_kernels)

    print(f"limit {limit}, repeat {repeat} (best-of wall seconds)")
    header = "kernel".ljust(20) + "".join(n.rjust(12) for n, _ in backends)
    print(header)
    for name, call in cases:
        times = []
        results = []
        for _, mod in backends:
            best, res = _time(lambda m=mod: call(m), repeat)
            times.append(best)
            results.append(res)
        if len(results) == 2:
            a, b = results
            agree = np.allclose(np.asarray(a, dtype=np.float64),
                                np.asarray(b, dtype=np.float64))
            if not agree:
                raise AssertionError(f"backend mismatch in {name}")
        print(name.ljust(20) + "".join(f"{t:12.4f}" for t in times))


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m quadprime.benchmark")
    parser.add_argument("--limit", type=int, default=10**6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run(args.limit, args.repeat)


if __name__ == "__main__":
    main()
