#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

Workloads mirror the package's hot paths: support-ideal scans over all q^k
codewords (weight censuses / minimum distance), pattern counting (orthogonal
array strength), and GF(q) rank (ideal scans in the weight hierarchy).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from posetcodes import chain_product_poset, construct_n2
from posetcodes.kernels import _fallback

try:
    from posetcodes.kernels import _core
except ImportError:
    _core = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def run_case(name, fn_name, args, repeat):
    py_t, py_res = timed(getattr(_fallback, fn_name), *args, repeat=repeat)
    row = [f"{name:34s}", f"{py_t * 1e3:9.2f}"]
    if _core is not None:
        c_t, c_res = timed(getattr(_core, fn_name), *args, repeat=repeat)
        same = (
            np.array_equal(py_res, c_res)
            if isinstance(py_res, np.ndarray)
            else py_res == c_res
        )
        row += [f"{c_t * 1e3:9.2f}", f"{py_t / c_t:7.1f}x", "yes" if same else "NO"]
    else:
        row += ["      n/a", "    n/a", "n/a"]
    print("  ".join(str(c) for c in row))


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    repeat = 2 if args.quick else 3

    if _core is None:
        print("note: compiled extension not importable; timing fallback only\n")

    big = construct_n2(5, 5, 3, 3)  # [10, 6]: 5^6 = 15625 codewords
    huge = construct_n2(5, 5, 4, 4)  # [10, 8]: 5^8 = 390625 codewords
    code = big if args.quick else huge
    down = code.poset.down_bits_array
    gen = np.ascontiguousarray(code.generator)
    q = code.field.q

    rng = np.random.default_rng(0)
    mat = rng.integers(0, 7, size=(48, 64)).astype(np.int64)

    print(f"{'case':34s}  {'python ms':>9s}  {'compiled ms':>9s}  {'speedup':>7s}  agree")
    run_case(
        f"support_bits  q={q} k={code.k} n={code.n}",
        "support_bits",
        (gen, q, down),
        repeat,
    )
    run_case(
        f"min_support_weight  q={q} k={code.k}",
        "min_support_weight",
        (gen, q, down),
        repeat,
    )
    cols = np.ascontiguousarray(gen[:, :5])
    run_case(
        f"pattern_counts  q={q} k={code.k} t=5",
        "pattern_counts",
        (cols, q),
        repeat,
    )
    rank_repeat = repeat * (20 if args.quick else 100)
    run_case(
        "gf_rank  48x64 mod 7",
        "gf_rank",
        (mat, 7),
        rank_repeat,
    )


if __name__ == "__main__":
    main()
