"""Benchmark the compiled determinant/solver kernels against the pure ones.

Times det_int and solve_int on random dense integer matrices of growing size,
then a full rational count on a Hirzebruch surface so the kernel share of the
end-to-end pipeline is visible.  Run from the repository root:

    python3 benchmarks/bench_kernels.py

The compiled module is optional; without it the script reports the pure
numbers only.
"""

import random
import time

from tropicount import _puredet
from tropicount.rational_count import CountQuery, count_rational

try:
    from tropicount import _speedups
except ImportError:
    _speedups = None


def _random_matrix(rng, n, bound=50):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def _time_kernel(kernel, mats, vecs):
    t0 = time.perf_counter()
    acc = 0
    for m in mats:
        acc ^= kernel.det_int(m) & 0xFFFF
    for m, v in zip(mats, vecs):
        sol = kernel.solve_int(m, v)
        if sol is not None:
            acc ^= len(sol)
    return time.perf_counter() - t0, acc


def bench_dets():
    rng = random.Random(2024)
    print(f"{'size':>5} {'reps':>5} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for size, reps in ((4, 4000), (8, 1500), (12, 600), (16, 250), (24, 80)):
        mats = [_random_matrix(rng, size) for _ in range(reps)]
        vecs = [[rng.randint(-50, 50) for _ in range(size)] for _ in range(reps)]
        t_pure, check_pure = _time_kernel(_puredet, mats, vecs)
        if _speedups is None:
            print(f"{size:>5} {reps:>5} {t_pure:>10.4f} {'-':>13} {'-':>8}")
            continue
        t_fast, check_fast = _time_kernel(_speedups, mats, vecs)
        assert check_pure == check_fast, "kernels disagree"
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{size:>5} {reps:>5} {t_pure:>10.4f} {t_fast:>13.4f} {ratio:>7.2f}x")


def bench_end_to_end():
    # one placement-engine count; kernels dominate the mark DFS
    query = CountQuery(surface_n=2, degree=(1, 1))
    t0 = time.perf_counter()
    record = count_rational(query, use_cache=False)
    dt = time.perf_counter() - t0
    a, b = query.degree
    print(f"\ncount_rational F{query.surface_n} ({a},{b}) -> {record.value}   "
          f"[{dt:.2f}s, {'compiled' if _speedups is not None else 'pure'} kernels]")


if __name__ == "__main__":
    if _speedups is None:
        print("compiled kernels unavailable; timing the pure fallback only\n")
    bench_dets()
    bench_end_to_end()
