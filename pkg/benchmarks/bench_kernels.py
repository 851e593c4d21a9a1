#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hot kernels on realistic inputs: full 2^16 subset tables for
a mid-sized circuit family, and the signed/unsigned elimination scans for a
generated 12-point, 3-dimensional configuration. Numba warm-up (JIT) is
excluded by a throwaway first call.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from omlab import _kernels_numba, _kernels_numpy
from omlab.generator import GeneratorParams, gen_random
from omlab.realization import build_holmsen_instance

REPEATS = 5


def best_time(fn, *args) -> float:
    fn(*args)  # warm-up (JIT compile / cache load)
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    rng = np.random.default_rng(2024)
    n_big = 16
    big_masks = np.unique(rng.integers(1, 1 << n_big, size=300)).astype(np.int64)

    cfg = gen_random(GeneratorParams(seed=11, dim=3, points_per_color=(3, 4))).config
    om, m = build_holmsen_instance(cfg)
    n = om.ground.n
    pos = np.array([c.pos for c in om.circuits], dtype=np.int64)
    neg = np.array([c.neg for c in om.circuits], dtype=np.int64)
    circ = np.array([c.mask for c in om.underlying.circuits], dtype=np.int64)

    pc_np = _kernels_numpy.popcount_table(n_big)
    dep_np = _kernels_numpy.superset_closure(big_masks, n_big)
    rank_np = _kernels_numpy.rank_table(dep_np, pc_np, n_big)
    dep_small = _kernels_numpy.superset_closure(circ, n)

    cases = [
        ("superset_closure 2^16, 300 masks", "superset_closure", (big_masks, n_big)),
        ("rank_table 2^16", "rank_table", (dep_np, pc_np, n_big)),
        ("flats_table 2^16", "flats_table", (rank_np, n_big)),
        (f"o3_violation {pos.size} signed circuits", "o3_violation", (pos, neg, n)),
        (f"m3_violation {circ.size} circuits", "m3_violation", (circ, dep_small, n)),
    ]

    print(f"config: n={n} points, dim=3, {pos.size // 2} circuit pairs")
    print(f"{'kernel':40s} {'numpy':>10s} {'numba':>10s} {'speedup':>9s}")
    for label, name, args in cases:
        t_np = best_time(getattr(_kernels_numpy, name), *args)
        t_nb = best_time(getattr(_kernels_numba, name), *args)
        print(f"{label:40s} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
