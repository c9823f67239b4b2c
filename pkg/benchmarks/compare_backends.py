#!/usr/bin/env python3
"""Benchmark the JIT kernels against the pure numpy/Python fallback.

Times the two hot kernels (Sturm bisection, inverse iteration) on the
discretized reference problem, plus an end-to-end groundstate solve in a
subprocess for each backend (the backend is fixed at import time by the
SOMBRERO_PURE_NUMPY environment variable).

Usage:
    python benchmarks/compare_backends.py [--n-points 2000] [--repeats 5]
"""

import argparse
import math
import os
import subprocess
import sys
import time

from sombrero import PotentialParams, RadialGrid, discretize
from sombrero import _kernels, _kernels_impl

REFERENCE = PotentialParams(
    g=1.5, alpha=2 * math.sqrt(3.0), beta=2.0, bigA=2 * math.sqrt(3.0) / 3.0, n_dim=3
)

END_TO_END_SNIPPET = """
import math, time
from sombrero import PotentialParams, groundstate, backend_name
p = PotentialParams(g=1.5, alpha=2*math.sqrt(3.0), beta=2.0, bigA=2*math.sqrt(3.0)/3.0, n_dim=3)
groundstate(p, r_max=8.0, n_points={n})  # warm-up (JIT compile on the numba path)
t0 = time.perf_counter()
for _ in range({repeats}):
    res = groundstate(p, r_max=8.0, n_points={n})
dt = (time.perf_counter() - t0) / {repeats}
print(f"{{backend_name()}} {{dt:.6f}} {{res.energy:.3e}}")
"""


def time_call(fn, repeats):
    fn()  # warm-up / JIT compile
    start = time.perf_counter()
    for _ in range(repeats):
        result = fn()
    return (time.perf_counter() - start) / repeats, result


def bench_kernels(n_points, repeats):
    op = discretize(REFERENCE, grid=RadialGrid.make(8.0, n_points))
    d, e = op.diag, op.off_diag
    tol = 1e-12 * 66.0

    rows = []
    for name, mod in (("numpy", _kernels_impl), (_kernels.backend_name(), _kernels)):
        t_eig, sigma = time_call(lambda m=mod: m.smallest_eigenvalue(d, e, tol), repeats)
        t_vec, _ = time_call(lambda m=mod, s=sigma: m.inverse_iteration(d, e, s, 1e-12, 50), repeats)
        rows.append((name, t_eig, t_vec))
        if mod is _kernels and _kernels.backend_name() == "numpy":
            break  # no accelerated backend available; avoid a duplicate row
    return rows


def bench_end_to_end(n_points, repeats):
    results = []
    for pure in (False, True):
        env = dict(os.environ)
        env["SOMBRERO_PURE_NUMPY"] = "1" if pure else "0"
        code = END_TO_END_SNIPPET.format(n=n_points, repeats=repeats)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        ).stdout.split()
        results.append((out[0], float(out[1]), out[2]))
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-points", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"reference problem, n_points={args.n_points} (fine grid {2*args.n_points})\n")
    print("kernel timings (seconds per call, coarse grid):")
    rows = bench_kernels(args.n_points, args.repeats)
    for name, t_eig, t_vec in rows:
        print(f"  {name:>6}: smallest_eigenvalue {t_eig:9.5f}   inverse_iteration {t_vec:9.5f}")
    if len(rows) == 2:
        print(f"  speedup: {rows[0][1] / rows[1][1]:6.1f}x                         {rows[0][2] / rows[1][2]:6.1f}x")

    print("\nend-to-end groundstate (Richardson pair + eigenvector):")
    results = bench_end_to_end(args.n_points, args.repeats)
    for backend, dt, energy in results:
        print(f"  {backend:>6}: {dt:9.5f} s/solve   (E = {energy})")
    if results[0][0] != results[1][0]:
        print(f"  speedup: {results[1][1] / results[0][1]:6.1f}x")
    if results[0][2] != results[1][2]:
        print("  WARNING: backends disagree on the groundstate energy")


if __name__ == "__main__":
    main()
