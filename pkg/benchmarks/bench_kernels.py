#!/usr/bin/env python3
"""Benchmark the numba and numpy kernel backends on representative workloads.

Workloads mirror the hot paths of the library: exact codeword enumeration,
dual-side weight histograms, GF(q) row reduction and Monte-Carlo batch
weights.  Usage:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from qcstab import CyclicCode, coset_generator_poly, cyclotomic_cosets, make_field
from qcstab.kernels import get_backend
from qcstab.poly import Residue, shift_rows


def scan_case():
    gf2 = make_field(2, 1)
    cosets = cyclotomic_cosets(31, 2)
    gen = coset_generator_poly(31, gf2, cosets[1:3])  # [31, 21] code
    code = CyclicCode(31, gf2, gen)
    rows = code.generator_rows()
    tab = gf2.kernel_tables()
    stop = 2**rows.shape[0]

    def run(impl):
        synd = np.zeros((rows.shape[0], 0), dtype=np.int64)
        return impl.min_weight_scan(rows, synd, rows.shape[1], tab["deltas"],
                                    2, tab["pmod"], tab["add"], tab["mul"],
                                    0, stop, False)

    return f"exact scan [31,{rows.shape[0]}] GF(2), 2^{rows.shape[0]} msgs", run


def hist_case():
    gf3 = make_field(3, 1)
    gen = coset_generator_poly(23, gf3, cyclotomic_cosets(23, 3)[1:2])
    code = CyclicCode(23, gf3, gen).dual()
    rows = code.generator_rows()
    tab = gf3.kernel_tables()
    stop = 3**rows.shape[0]

    def run(impl):
        hist = np.zeros(rows.shape[1] + 1, dtype=np.int64)
        impl.weight_hist_scan(rows, tab["deltas"], 3, tab["pmod"], tab["add"],
                              tab["mul"], 0, stop, hist)
        return int(hist.sum())

    return f"weight hist [23,{rows.shape[0]}] GF(3), 3^{rows.shape[0]} msgs", run


def rank_case():
    gf4 = make_field(2, 2)
    tab = gf4.kernel_tables()
    rng = np.random.default_rng(11)
    M = rng.integers(0, 4, size=(240, 480), dtype=np.int64)

    def run(impl):
        return impl.row_reduce(M.copy(), tab["pmod"], tab["add"], tab["mul"],
                               tab["neg"], tab["inv"])

    return "row reduce 240x480 GF(4)", run


def batch_case():
    gf8 = make_field(2, 3)
    cosets = cyclotomic_cosets(73, 8)
    gen = coset_generator_poly(73, gf8, cosets[1:3])
    rows = shift_rows(Residue(73, gen), 73 - int(gen.degree))
    tab = gf8.kernel_tables()
    rng = np.random.default_rng(7)
    digits = rng.integers(0, 8, size=(20000, rows.shape[0]), dtype=np.int64)

    def run(impl):
        return int(impl.batch_weights(rows, digits, tab["pmod"], tab["add"],
                                      tab["mul"], False).min())

    return f"batch weights 2e4 x [73,{rows.shape[0]}] GF(8)", run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {}
    backends["numpy"] = get_backend("numpy")
    try:
        backends["numba"] = get_backend("numba")
    except ImportError:
        print("numba unavailable; benchmarking numpy only")

    cases = [scan_case(), hist_case(), rank_case(), batch_case()]
    print(f"{'workload':<44} " + " ".join(f"{k:>12}" for k in backends)
          + "   speedup")
    for label, run in cases:
        results = {}
        times = {}
        for name, impl in backends.items():
            run(impl)  # warm (jit compile on numba)
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[name] = run(impl)
                best = min(best, time.perf_counter() - t0)
            times[name] = best
        values = set(str(v) for v in results.values())
        assert len(values) == 1, f"backend results differ on {label}: {results}"
        row = f"{label:<44} " + " ".join(f"{times[k]:>11.4f}s" for k in backends)
        if len(times) == 2:
            row += f"   {times['numpy'] / times['numba']:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
