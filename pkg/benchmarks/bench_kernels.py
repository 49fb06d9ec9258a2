"""Benchmark the numpy kernels against their jit-compiled twins.

Generates synthetic canonical exponent matrices at a few sizes and
times antichain_mask, member_mask, and any_divides through both
backends.  The jit columns read "n/a" when numba is unavailable or
disabled via VNUMBER_KERNELS=numpy.

Usage: python3 benchmarks/bench_kernels.py [--seed 0] [--repeat 30]
"""

import argparse
import timeit

import numpy as np

from vnumber import kernels
from vnumber.core import canonical_rows


SIZES = [(50, 4, 4), (200, 6, 5), (800, 8, 6), (2000, 10, 8)]


def synthetic_matrix(rng, rows, cols, max_exp):
    raw = rng.integers(0, max_exp + 1, size=(rows, cols)).astype(np.int64)
    raw = raw[raw.sum(axis=1) > 0]
    return canonical_rows(raw)


def time_call(func, *args, repeat, number=1):
    best = min(
        timeit.repeat(lambda: func(*args), repeat=repeat, number=number)
    )
    return best / number


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=30,
                        help="timing repetitions per cell")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    jit_ready = kernels._antichain_mask_numba is not None
    if jit_ready:
        kernels.warmup()

    header = (
        f"{'rows x cols':>14} {'kernel':>14} {'numpy (ms)':>12} "
        f"{'numba (ms)':>12} {'speedup':>9}"
    )
    print(f"backend: {kernels.BACKEND}")
    print(header)
    print("-" * len(header))
    for rows, cols, max_exp in SIZES:
        matrix = synthetic_matrix(rng, rows, cols, max_exp)
        points = rng.integers(0, max_exp + 2, size=(rows, cols)).astype(np.int64)
        probe = points[0]
        cells = [
            ("antichain_mask",
             (kernels._antichain_mask_numpy, (matrix,)),
             (kernels._antichain_mask_numba, (matrix,))),
            ("member_mask",
             (kernels._member_mask_numpy, (matrix, points)),
             (kernels._member_mask_numba, (matrix, points))),
            ("any_divides",
             (kernels._any_divides_numpy, (matrix, probe)),
             (kernels._any_divides_numba, (matrix, probe))),
        ]
        for name, (np_func, np_args), (jit_func, jit_args) in cells:
            np_ms = time_call(np_func, *np_args, repeat=args.repeat) * 1e3
            if jit_ready:
                jit_ms = time_call(jit_func, *jit_args, repeat=args.repeat) * 1e3
                jit_text = f"{jit_ms:12.3f}"
                speedup = f"{np_ms / jit_ms:8.1f}x"
            else:
                jit_text = f"{'n/a':>12}"
                speedup = f"{'n/a':>9}"
            shape = f"{matrix.shape[0]}x{matrix.shape[1]}"
            print(f"{shape:>14} {name:>14} {np_ms:12.3f} {jit_text} {speedup}")


if __name__ == "__main__":
    main()
