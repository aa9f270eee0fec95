#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-numpy fallback.

Times the two hot paths (batched seminorm/margin evaluation and the simplex
pivot loop) on both backends and verifies their agreement while doing so:
pivot tableaus, basis paths and statuses must be bit-identical, batched
evaluator outputs must agree to 1e-12.  Exits nonzero on any disagreement.

Usage:  python3 bench/bench_kernels.py [--repeats N] [--scale S]
"""

import argparse
import sys
import time

import numpy as np

from conescal._kernels import _py

try:
    from conescal._kernels import _cy
except ImportError:
    print("compiled backend not built; nothing to compare", file=sys.stderr)
    sys.exit(1)

KIND_NAMES = {0: "l1", 1: "l2", 2: "linf", 3: "max-abs", 4: "sum-abs"}


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_evaluators(rng, repeats, scale, rows):
    count, n = 4000 * scale, 4
    Y = np.ascontiguousarray(rng.uniform(-3.0, 3.0, size=(count, n)))
    M = np.ascontiguousarray(rng.uniform(-2.0, 2.0, size=(6, n)))
    xstar = rng.uniform(-2.0, 2.0, size=n)
    empty = np.zeros((0, 0))
    for kind in (0, 1, 2, 3, 4):
        Mk = M if kind in (3, 4) else empty
        a = _py.seminorm_many(kind, Mk, Y)
        b = _cy.seminorm_many(kind, Mk, Y)
        dev = float(np.max(np.abs(a - b), initial=0.0))
        assert dev <= 1e-12, f"seminorm kind {kind} deviates by {dev:g}"
        tp = best_of(lambda: _py.seminorm_many(kind, Mk, Y), repeats)
        tc = best_of(lambda: _cy.seminorm_many(kind, Mk, Y), repeats)
        rows.append((f"seminorm_many[{KIND_NAMES[kind]}] ({count}x{n})", tp, tc))
    am = _py.margin_many(3, M, Y, xstar, 0.7, 1.0)
    bm = _cy.margin_many(3, M, Y, xstar, 0.7, 1.0)
    dev = float(np.max(np.abs(am - bm), initial=0.0))
    assert dev <= 1e-12, f"margin_many deviates by {dev:g}"
    tp = best_of(lambda: _py.margin_many(3, M, Y, xstar, 0.7, 1.0), repeats)
    tc = best_of(lambda: _cy.margin_many(3, M, Y, xstar, 0.7, 1.0), repeats)
    rows.append((f"margin_many[max-abs] ({count}x{n})", tp, tc))


def make_tableaus(rng, count, m, ncols):
    batch = []
    for _ in range(count):
        T = rng.uniform(-1.0, 1.0, size=(m + 1, ncols + 1))
        T[:m, ncols] = rng.uniform(0.0, 2.0, size=m)
        basis = np.arange(ncols - m, ncols, dtype=np.intp)
        for i, b in enumerate(basis):
            T[:, b] = 0.0
            T[i, b] = 1.0
        T[m, ncols] = 0.0
        batch.append((np.ascontiguousarray(T), basis))
    return batch


def run_batch(impl, batch):
    out = []
    for T, basis in batch:
        Tw, bw = T.copy(), basis.copy()
        status = impl.simplex_pivot_loop(Tw, bw, Tw.shape[1] - 1, 1e-9, 1e-11, 500)
        out.append((status, Tw, bw))
    return out

def bench_simplex(rng, repeats, scale, rows):
    for m, ncols, count in ((6, 16, 60 * scale), (14, 34, 25 * scale)):
        batch = make_tableaus(rng, count, m, ncols)
        ra = run_batch(_py, batch)
        rb = run_batch(_cy, batch)
        for k, ((sa, Ta, ba), (sb, Tb, bb)) in enumerate(zip(ra, rb)):
            assert sa == sb, f"tableau {k}: status {sa} vs {sb}"
            assert np.array_equal(ba, bb), f"tableau {k}: basis paths differ"
            assert np.array_equal(Ta, Tb), f"tableau {k}: tableaus not bit-identical"
        tp = best_of(lambda: run_batch(_py, batch), repeats)
        tc = best_of(lambda: run_batch(_cy, batch), repeats)
        rows.append((f"simplex_pivot_loop ({count} LPs, {m}x{ncols})", tp, tc))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5, help="timing repeats (best-of)")
    ap.add_argument("--scale", type=int, default=1, help="workload size multiplier")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(2024)
    rows = []
    bench_evaluators(rng, args.repeats, args.scale, rows)
    bench_simplex(rng, args.repeats, args.scale, rows)

    w = max(len(r[0]) for r in rows)
    print(f"{'workload':<{w}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, tp, tc in rows:
        print(f"{name:<{w}}  {tp * 1e3:>8.3f}ms  {tc * 1e3:>8.3f}ms  {tp / tc:>7.1f}x")
    print("agreement: pivots bit-identical, evaluator deviation <= 1e-12")
    return 0


if __name__ == "__main__":
    sys.exit(main())
