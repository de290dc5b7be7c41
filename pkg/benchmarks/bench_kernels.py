"""Time the numba loop kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

The first call of each numba kernel is excluded (compilation / cache load).
"""
import argparse
import time

import numpy as np

from infoveil import _accel, kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    drive = rng.normal(size=200_000)
    ar = np.array([0.6, 0.2])
    X = rng.normal(size=(122, 42))
    e = rng.normal(size=122)
    walks = np.cumsum(rng.normal(size=(2000, 122)), axis=1)
    counts = rng.integers(0, 4, size=(5000, 3)).astype(float)
    return [
        ("ar_filter n=200k p=2", lambda: kernels.ar_filter_loop(drive, ar),
         lambda: kernels.ar_filter_numpy(drive, ar)),
        ("sandwich_meat 122x42", lambda: kernels.sandwich_meat_loop(X, e),
         lambda: kernels.sandwich_meat_numpy(X, e)),
        ("adf_tstats 2000 walks, 5 lags", lambda: kernels.adf_tstats_loop(walks, 5, False),
         lambda: kernels.adf_tstats_numpy(walks, 5, False)),
        ("coincidence 5000 units", lambda: kernels.coincidence_matrix_loop(counts),
         lambda: kernels.coincidence_matrix_numpy(counts)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAS_NUMBA:
        print("numba is not importable; nothing to compare")
        return
    print(f"dispatch backend: {_accel.backend()}")
    print(f"{'kernel':32s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fast, slow in cases(np.random.default_rng(0)):
        fast()  # compile
        a, b = best_of(fast, args.repeat), best_of(slow, args.repeat)
        print(f"{name:32s} {a * 1e3:10.2f} {b * 1e3:10.2f} {b / a:8.1f}x")


if __name__ == "__main__":
    main()
