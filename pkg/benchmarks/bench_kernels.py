"""Benchmark the falsifier prescreen backends (numba njit vs pure numpy).

Run:  python benchmarks/bench_kernels.py [--n N] [--degree D]

Measures throughput of realness-defect computation over a batch of random
monic polynomials, for the compiled numba kernel (if available) and the
numpy stacked-eigvals fallback, and checks that they agree.
"""

import argparse
import time

import numpy as np

from hypercheck import kernels


def bench(fn, coeffs, repeats=5):
    fn(coeffs[:10])  # warm up (JIT compile / allocation)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(coeffs)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=50_000, help="batch size")
    parser.add_argument("--degree", type=int, default=6)
    args = parser.parse_args()
    n, degree = args.n, args.degree
    rng = np.random.default_rng(0)
    coeffs = rng.normal(size=(n, degree + 1))
    coeffs[:, 0] = 1.0

    results = {}
    numpy_out = kernels._numpy_defects(coeffs)
    results["numpy"] = bench(kernels._numpy_defects, coeffs)
    if kernels._numba_defects is not None:
        numba_out = kernels._numba_defects(coeffs)
        results["numba"] = bench(kernels._numba_defects, coeffs)
        err = float(np.abs(numba_out - numpy_out).max())
        print(f"max |numba - numpy| = {err:.3e}")
    else:
        print("numba backend unavailable (HYPERCHECK_NO_NUMBA set or import failed)")

    print(f"batch: {n} polynomials of degree {degree}")
    for name, seconds in sorted(results.items(), key=lambda kv: kv[1]):
        print(f"  {name:>6}: {seconds * 1e3:8.1f} ms   "
              f"({n / seconds / 1e3:8.1f}k polys/s)")


if __name__ == "__main__":
    main()
