"""Time the numba kernels against their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Both paths are imported under explicit names, so the env flag is not needed
here. The first numba call (compilation or cache load) is excluded.
"""
import argparse
import timeit

import numpy as np

from aislecop import _kernels as K
from aislecop.instances import GenConfig, gen_zipf
from aislecop.single_column import prefix_table

CASES = [(50, 100, 0.5), (100, 50, 0.5), (100, 50, 1.0), (200, 20, 0.5)]


def knapsack_input(rng, groups, width, cap):
    gains = np.cumsum(rng.integers(0, 50, size=(groups, width)), axis=1).astype(float)
    gains[:, 0] = 0.0
    return gains, cap


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'case':<22}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}")
    for m, n, frac in CASES:
        T = prefix_table(gen_zipf(GenConfig(m, n, 0.8, seed=1)))
        bmax = int(frac * ((n + 1) * m + 2 * (m - 1))) // 2
        R1, _ = K.osc_fill_numpy(T, bmax)
        R2, _ = K.osc_fill_numba(T, bmax)
        assert np.array_equal(R1, R2)
        a = best_of(lambda: K.osc_fill_numpy(T, bmax), args.repeat)
        b = best_of(lambda: K.osc_fill_numba(T, bmax), args.repeat)
        print(f"{'osc_fill':<16}{f'A({m},{n}) b={bmax}':<22}{a * 1e3:>10.2f}{b * 1e3:>10.2f}{a / b:>8.1f}x")

    for groups, width, cap in [(50, 51, 500), (100, 51, 2000), (100, 101, 5000)]:
        gains, cap = knapsack_input(rng, groups, width, cap)
        K.group_knapsack_numba(gains, cap)
        a = best_of(lambda: K.group_knapsack_numpy(gains, cap), args.repeat)
        b = best_of(lambda: K.group_knapsack_numba(gains, cap), args.repeat)
        print(f"{'group_knapsack':<16}{f'G={groups} w={width} h={cap}':<22}{a * 1e3:>10.2f}{b * 1e3:>10.2f}{a / b:>8.1f}x")


if __name__ == "__main__":
    main()
