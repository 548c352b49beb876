#!/usr/bin/env python3
"""Benchmark the compiled mod-p kernels against the pure-Python fallback.

Runs the two sweep kernels and the isotropic-vector search on identical
inputs through both implementations (bounded point ranges for the pure
path, larger ones for the compiled path) and reports points/second plus
the speedup.  Usage:

    python benchmarks/bench_fpcore.py [--full]

--full lets the compiled path exhaust the whole 6.7M-point sweep instead
of a 1M-point slice.
"""

import argparse
import sys
import time

from jordanquad import _fpcore_py, fpkernels, sweeps


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_sweep(name, fn_name, alg, pure_limit, compiled_limit):
    ki = sweeps.kernel_inputs(alg)
    pure_fn = getattr(_fpcore_py, fn_name)
    out_p, dt_p = timed(pure_fn, *ki, pure_limit)
    rate_p = out_p[0] / dt_p
    print(f"{name:24s} pure-python: {out_p[0]:>9d} pts in {dt_p:7.3f}s "
          f"({rate_p:12,.0f} pts/s)")
    if fpkernels.compiled is None:
        print(f"{name:24s} compiled:    not built")
        return
    comp_fn = getattr(fpkernels.compiled, fn_name)
    out_c, dt_c = timed(comp_fn, *ki, compiled_limit)
    rate_c = out_c[0] / dt_c
    print(f"{name:24s} compiled:    {out_c[0]:>9d} pts in {dt_c:7.3f}s "
          f"({rate_c:12,.0f} pts/s)  speedup x{rate_c / rate_p:,.0f}")
    # same counters over the shared prefix
    check = comp_fn(*ki, pure_limit)
    assert check == out_p, "compiled and pure kernels disagree"


def bench_isotropic(p, coeffs, loops):
    out_p, dt_p = timed(lambda: [_fpcore_py.isotropic_vector(p, coeffs)
                                 for _ in range(loops)])
    print(f"{'isotropic_vector':24s} pure-python: {loops:>9d} runs in {dt_p:7.3f}s")
    if fpkernels.compiled is None:
        return
    out_c, dt_c = timed(lambda: [fpkernels.compiled.isotropic_vector(p, coeffs)
                                 for _ in range(loops)])
    print(f"{'isotropic_vector':24s} compiled:    {loops:>9d} runs in {dt_c:7.3f}s"
          f"  speedup x{dt_p / dt_c:,.0f}")
    assert out_p[0] == out_c[0]


def main(argv=None):
    args = argparse.ArgumentParser()
    args.add_argument("--full", action="store_true",
                      help="exhaust the big sweep on the compiled path")
    opts = args.parse_args(argv)
    print(f"active backend: {fpkernels.backend_name()}")
    alg = sweeps.fp_algebra(7, 2, 3)
    space = sweeps.projective_size(7, sweeps.flat_dim(alg))
    compiled_limit = -1 if opts.full else min(space, 1_000_000)
    print(f"\nquadric sweep, p=7 r=2 n=3 (projective space: {space:,} points)")
    bench_sweep("quadric_sweep", "quadric_sweep", alg, 20_000, compiled_limit)
    alg2 = sweeps.fp_algebra(3, 2, 4)
    space2 = sweeps.projective_size(3, alg2.cd.dim * (alg2.n - 1))
    print(f"\nbase-locus sweep, p=3 r=2 n=4 (projective space: {space2:,} points)")
    bench_sweep("z1_sweep", "z1_sweep", alg2, 20_000, -1)
    print("\nanisotropic exhaustive search, p=13 dim=2")
    bench_isotropic(13, [1, 2], 2_000)
    return 0


if __name__ == "__main__":
    sys.exit(main())
