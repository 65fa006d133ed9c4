#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the numpy fallback.

Runs the two hot paths on a mid-size code (the lifted [1182, 6] example):
full weight enumeration over 4^6 messages and the pairwise support
containment scan over the 1365 projective representatives.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from mincode import _kernels_py, kernels
from mincode.code import build_code
from mincode.constructions import lift, monomial_zero_set

try:
    from mincode import _speedups
except ImportError:
    _speedups = None


def build_problem():
    D0 = monomial_zero_set(4, 5, 3)
    C = build_code(lift(D0, D0))
    cols, mults = C.D.columns()
    mul, add = C.field.mul_table, C.field.add_table
    msgs = np.concatenate(
        list(kernels.iter_lambda_chunks(C.field.q, C.dim)))
    proj = np.concatenate(
        list(kernels.iter_lambda_chunks(C.field.q, C.dim, projective=True)))
    return C, cols, mults, mul, add, msgs, proj


def bench(label, fn, repeat):
    best = min(timed(fn) for _ in range(repeat))
    print(f"  {label:<24} {best * 1000:9.1f} ms")
    return best


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_backend(name, impl, cols, mults, mul, add, msgs, proj, repeat):
    print(f"{name}:")
    t_w = bench("weights (4^6 msgs)",
                lambda: impl.weights(cols, mults, msgs, mul, add), repeat)
    masks = impl.masks(cols, proj, mul, add, False)
    masks = np.ascontiguousarray(masks)
    t_m = bench("masks (1365 reps)",
                lambda: impl.masks(cols, proj, mul, add, False), repeat)
    t_c = bench("containment scan",
                lambda: impl.find_containment(masks), repeat)
    return t_w, t_m, t_c


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3,
                    help="best-of-N timing (default 3)")
    args = ap.parse_args()

    C, cols, mults, mul, add, msgs, proj = build_problem()
    print(f"problem: [{C.n},{C.dim}] code over GF({C.field.q}), "
          f"{msgs.shape[0]} messages, {proj.shape[0]} projective reps\n")

    pure = run_backend("pure (numpy fallback)", _kernels_py,
                       cols, mults, mul, add, msgs, proj, args.repeat)
    if _speedups is None:
        print("\ncompiled extension not built; only the fallback was timed")
        return
    comp = run_backend("compiled (cython)", _speedups,
                       cols, mults, mul, add, msgs, proj, args.repeat)
    print("\nspeedup (pure / compiled):")
    for label, p, c in zip(("weights", "masks", "containment"), pure, comp):
        print(f"  {label:<24} {p / c:9.2f}x")


if __name__ == "__main__":
    main()
