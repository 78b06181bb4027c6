"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three hot operations (polynomial multiply-mod, matrix product,
matrix-vector product) on workloads shaped like the real ones: 3x3 and 4x4
group elements over conductors 3, 5 and 30, plus a group-closure slice.

Run:  python benchmarks/bench_kernels.py
"""

import random
import time

from reflorbit import _kernels_py

try:
    from reflorbit import _kernels

    BACKENDS = [("pure", _kernels_py), ("compiled", _kernels)]
except ImportError:
    _kernels = None
    BACKENDS = [("pure", _kernels_py)]

from reflorbit.cyclo import make_field


def _random_flat(rng, n, deg):
    return tuple(rng.randint(-4, 4) for _ in range(n * n * deg))


def bench_poly(kern, field, iters=20000):
    rng = random.Random(1)
    deg = field.degree
    a = tuple(rng.randint(-4, 4) for _ in range(deg))
    b = tuple(rng.randint(-4, 4) for _ in range(deg))
    t0 = time.perf_counter()
    for _ in range(iters):
        kern.poly_mul(a, b, field.red, deg)
    return time.perf_counter() - t0


def bench_mat(kern, field, n, iters=2000):
    rng = random.Random(2)
    deg = field.degree
    A = _random_flat(rng, n, deg)
    B = _random_flat(rng, n, deg)
    t0 = time.perf_counter()
    for _ in range(iters):
        kern.mat_mul(A, B, n, deg, field.red)
    return time.perf_counter() - t0


def bench_matvec(kern, field, n, iters=20000):
    rng = random.Random(3)
    deg = field.degree
    A = _random_flat(rng, n, deg)
    v = tuple(rng.randint(-4, 4) for _ in range(n * deg))
    t0 = time.perf_counter()
    for _ in range(iters):
        kern.mat_vec(A, v, n, deg, field.red)
    return time.perf_counter() - t0


def bench_closure(kern_name):
    """G25 closure (648 elements over conductor 3) with a forced backend."""
    import importlib
    import os
    import subprocess
    import sys

    code = (
        "import time; t0=time.perf_counter();"
        "from reflorbit.refgroup import load_catalog;"
        "load_catalog('G25');"
        "print(time.perf_counter()-t0)"
    )
    env = dict(os.environ, REFLORBIT_KERNEL=kern_name)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    fields = [(make_field(3), 4), (make_field(5), 3), (make_field(30), 3)]
    print(f"backends available: {[n for n, _ in BACKENDS]}")
    results = {}
    for name, kern in BACKENDS:
        for field, n in fields:
            key = (f"poly_mul deg={field.degree}", name)
            results[key] = bench_poly(kern, field)
            key = (f"mat_mul {n}x{n} deg={field.degree}", name)
            results[key] = bench_mat(kern, field, n)
            key = (f"mat_vec {n}x{n} deg={field.degree}", name)
            results[key] = bench_matvec(kern, field, n)
    ops = sorted({op for op, _ in results})
    print(f"{'operation':34s} " + " ".join(f"{n:>10s}" for n, _ in BACKENDS)
          + ("      ratio" if len(BACKENDS) == 2 else ""))
    for op in ops:
        row = [results[(op, n)] for n, _ in BACKENDS]
        line = f"{op:34s} " + " ".join(f"{t:10.3f}" for t in row)
        if len(row) == 2 and row[1] > 0:
            line += f" {row[0] / row[1]:10.2f}x"
        print(line)
    if len(BACKENDS) == 2:
        print("\nG25 catalog load (648-element closure + validation):")
        for name in ("pure", "compiled"):
            print(f"  {name:9s} {bench_closure(name):8.2f} s")


if __name__ == "__main__":
    main()
