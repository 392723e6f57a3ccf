#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure-Python fallback.

Run after installing the package:

    python benchmarks/bench_jacobi.py --reps 200

numpy.linalg.eigh is timed alongside as an external reference point; it is
not used by the library.
"""

import argparse
import time

import numpy as np

from wedgemap._kernels import jacobi_py

try:
    from wedgemap._kernels import _jacobi
except ImportError:
    _jacobi = None

from wedgemap.rng import SplitMix64


def hermitian_batch(n: int, count: int, seed: int) -> list[np.ndarray]:
    gen = SplitMix64(seed)
    out = []
    for _ in range(count):
        g = gen.complex_normals(n * n).reshape(n, n)
        out.append((g + g.conj().T) / 2)
    return out


def time_solver(solver, batch, reps: int) -> float:
    """Mean microseconds per call over reps passes of the batch."""
    start = time.perf_counter()
    for _ in range(reps):
        for m in batch:
            solver(m)
    elapsed = time.perf_counter() - start
    return elapsed / (reps * len(batch)) * 1e6


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 9, 16, 36])
    parser.add_argument("--batch", type=int, default=20)
    parser.add_argument("--reps", type=int, default=50)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    print(f"{'n':>4} {'pure-python us':>16} {'cython us':>12} {'speedup':>9} {'numpy us':>10}")
    for n in args.sizes:
        batch = hermitian_batch(n, args.batch, args.seed + n)
        reps = max(1, args.reps // max(1, n // 9))
        t_py = time_solver(lambda m: jacobi_py.jacobi_eigh(m, 1e-12, 100), batch, reps)
        t_np = time_solver(np.linalg.eigh, batch, reps)
        if _jacobi is not None:
            t_cy = time_solver(lambda m: _jacobi.jacobi_eigh(m, 1e-12, 100), batch, reps)
            print(f"{n:>4} {t_py:>16.1f} {t_cy:>12.1f} {t_py / t_cy:>8.1f}x {t_np:>10.1f}")
        else:
            print(f"{n:>4} {t_py:>16.1f} {'(absent)':>12} {'':>9} {t_np:>10.1f}")


if __name__ == "__main__":
    main()
