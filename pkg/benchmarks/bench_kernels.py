#!/usr/bin/env python3
"""Benchmark the numba and numpy sweep kernels on decompose-sized workloads.

Usage: python benchmarks/bench_kernels.py [max_n]

Times, for each backend, a full Betti table (every composition of n) for the
widest Hessenberg function of each size. The numba timing excludes the
one-time JIT compile (a warm-up call is made first).
"""

from __future__ import annotations

import sys
import time

from hessenberg import kernels
from hessenberg.betti import poincare_polynomial
from hessenberg.partitions import partitions_of
from hessenberg.roots import validate_hessenberg


def bench(n: int, backend: str, repeats: int = 3) -> float:
    kernels.set_backend(backend)
    h = validate_hessenberg([n] * n)
    poincare_polynomial((n,), h)  # warm-up: JIT compile + table build
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for nu in partitions_of(n):
            poincare_polynomial(nu, h)
        best = min(best, time.perf_counter() - start)
    kernels.set_backend(None)
    return best


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (flag {kernels.ENV_FLAG})")
    print(f"{'n':>3} {'compositions':>12} " + " ".join(f"{b:>12}" for b in backends))
    for n in range(5, max_n + 1):
        times = [bench(n, b) for b in backends]
        row = " ".join(f"{t * 1000:>10.1f}ms" for t in times)
        print(f"{n:>3} {len(partitions_of(n)):>12} {row}")
        if len(times) == 2 and times[0] > 0:
            print(f"    numba/numpy speedup: {times[1] / times[0]:.2f}x")


if __name__ == "__main__":
    main()
