"""Benchmark the compiled elimination kernel against the numpy fallback.

Two views: a microbenchmark timing raw row reduction on random dense
matrices, and an end-to-end workload (a translate orbit over a tensor
algebra) run in a subprocess per backend.

Usage: python benchmarks/bench_backends.py
"""

import os
import subprocess
import sys
import time

import numpy as np

WORKLOAD = """
import time
import fdalg
from fdalg import presets
from fdalg.tensorlab import translate_orbit, tensor_module
from fdalg.algebra import tensor_algebra
from fdalg.repmod import rep_context

t0 = time.perf_counter()
nak2 = presets.nak2()
kron = presets.kronecker()
gamma = tensor_algebra(kron, nak2)
start = tensor_module(gamma, rep_context(kron).injective(1),
                      rep_context(nak2).regular)
trace = translate_orbit(start, 18)
elapsed = time.perf_counter() - t0
print(f"{fdalg.BACKEND} {elapsed:.3f} {trace.outcome[0]}")
"""


def bench_kernels():
    from fdalg import _corekernels, _pykernels

    rng = np.random.default_rng(0)
    print(f"{'size':>6} {'cython (s)':>12} {'numpy (s)':>12} {'speedup':>9}")
    for size in (50, 100, 200, 400):
        a = rng.integers(0, 101, (size, size + size // 2)).astype(np.int64)
        times = {}
        for name, impl in (("cython", _corekernels), ("numpy", _pykernels)):
            best = float("inf")
            for _ in range(3):
                work = a.copy()
                t0 = time.perf_counter()
                impl.rref_inplace(work, 101)
                best = min(best, time.perf_counter() - t0)
            times[name] = best
        print(f"{size:>6} {times['cython']:>12.5f} {times['numpy']:>12.5f} "
              f"{times['numpy'] / times['cython']:>8.1f}x")


def bench_workload():
    print("\ntranslate orbit over the Kronecker tensor algebra (18 steps):")
    for pure in ("0", "1"):
        env = dict(os.environ, FDALG_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                             capture_output=True, text=True, check=True)
        backend, elapsed, outcome = out.stdout.split()
        print(f"  {backend:>7}: {float(elapsed):7.2f} s ({outcome})")


if __name__ == "__main__":
    try:
        bench_kernels()
    except ImportError:
        print("compiled kernel unavailable; skipping the microbenchmark")
    bench_workload()
