"""Benchmark the compiled elimination kernel against the pure-Python twin.

Two measurements:
  * reduce_full on a synthetic reduction workload (the hot loop itself);
  * a full (3, 4) eigenpoint solve, 40 points, which is dominated by
    Buchberger + FGLM reductions.

Usage: python benchmarks/bench_kernels.py [--seeds N]
"""

import argparse
import random
import sys
import time
from itertools import combinations_with_replacement

from eigenpoints import _kernel_py
from eigenpoints import groebner
from eigenpoints.multipoly import Polynomial
from eigenpoints.rationals import rational
from eigenpoints.solver import eigenpoints
from eigenpoints.tensors import PartialSymTensor

try:
    from eigenpoints import _kernel
except ImportError:
    _kernel = None


def random_tensor(n, d, seed, box=9):
    rng = random.Random(seed)
    nv = n + 1
    monos = list(combinations_with_replacement(range(nv), d - 1))
    slices = []
    for _ in range(nv):
        terms = {}
        for mono in monos:
            exp = [0] * nv
            for v in mono:
                exp[v] += 1
            c = rng.randint(-box, box)
            if c:
                terms[tuple(exp)] = rational(c)
        slices.append(Polynomial(nv, terms))
    return PartialSymTensor(n, d, slices)


def reduction_workload(kernel, repeats=400, seed=7):
    rng = random.Random(seed)
    polys = []
    for _ in range(6):
        terms = {}
        for _ in range(14):
            mono = tuple(rng.randint(0, 5) for _ in range(3))
            c = rng.randint(-50, 50)
            if c:
                terms[mono] = terms.get(mono, 0) + c
        terms = {m: c for m, c in terms.items() if c}
        if terms:
            polys.append(kernel.strip_content(terms))
    reducers = []
    for g in polys[1:]:
        lm, lc = kernel.leading_term(g)
        reducers.append((lm, lc, g))
    target = polys[0]
    start = time.perf_counter()
    for _ in range(repeats):
        kernel.reduce_full(dict(target), reducers)
    return time.perf_counter() - start


def solve_benchmark(kernel_module, seeds):
    groebner.K = kernel_module
    times = []
    for seed in seeds:
        t = random_tensor(3, 4, seed=seed)
        start = time.perf_counter()
        sol = eigenpoints(t, seed=0)
        times.append(time.perf_counter() - start)
        assert sol.certified, f"seed {seed} failed to certify"
    return times


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seeds", type=int, default=2, help="number of (3,4) solves")
    args = parser.parse_args()
    seeds = [17 * (i + 1) for i in range(args.seeds)]

    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.append(("c", _kernel))
    else:
        print("compiled kernel not built; benchmarking pure Python only")

    print(f"{'backend':<8} {'reduce_full (s)':>16} {'(3,4) solve avg (s)':>20}")
    baseline = {}
    for name, module in backends:
        micro = reduction_workload(module)
        solve_times = solve_benchmark(module, seeds)
        avg = sum(solve_times) / len(solve_times)
        baseline[name] = (micro, avg)
        print(f"{name:<8} {micro:>16.3f} {avg:>20.2f}")
    if len(baseline) == 2:
        py_micro, py_avg = baseline["python"]
        c_micro, c_avg = baseline["c"]
        print(
            f"speedup  {py_micro / c_micro:>15.2f}x {py_avg / c_avg:>19.2f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
