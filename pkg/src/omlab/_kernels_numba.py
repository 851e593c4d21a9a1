"""Numba-jitted twins of the kernels in ``_kernels_numpy``.

Same contracts, same dtypes (int64 mask arrays, bool/uint8 tables); plain
loops that numba turns into tight machine code. ``cache=True`` persists the
compilation across processes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def popcount_table(n: int) -> np.ndarray:
    size = 1 << n
    pc = np.zeros(size, dtype=np.uint8)
    for x in range(1, size):
        pc[x] = pc[x >> 1] + (x & 1)
    return pc


@njit(cache=True)
def superset_closure(masks: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    for m in masks:
        out[m] = True
    for b in range(n):
        bit = 1 << b
        for x in range(size):
            if x & bit and out[x ^ bit]:
                out[x] = True
    return out


@njit(cache=True)
def subset_closure(masks: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    for m in masks:
        out[m] = True
    for b in range(n):
        bit = 1 << b
        for x in range(size):
            if not x & bit and out[x | bit]:
                out[x] = True
    return out


@njit(cache=True)
def rank_table(dep: np.ndarray, pc: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    rank = np.zeros(size, dtype=np.uint8)
    for x in range(1, size):
        if not dep[x]:
            rank[x] = pc[x]
        else:
            best = np.uint8(0)
            for b in range(n):
                bit = 1 << b
                if x & bit:
                    r = rank[x ^ bit]
                    if r > best:
                        best = r
            rank[x] = best
    return rank


@njit(cache=True)
def flats_table(rank: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    out = np.ones(size, dtype=np.bool_)
    for x in range(size):
        for b in range(n):
            bit = 1 << b
            if not x & bit and rank[x | bit] == rank[x]:
                out[x] = False
                break
    return out


@njit(cache=True)
def minimal_members(table: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    count = 0
    for x in range(size):
        if table[x]:
            minimal = True
            for b in range(n):
                bit = 1 << b
                if x & bit and table[x ^ bit]:
                    minimal = False
                    break
            if minimal:
                count += 1
    out = np.empty(count, dtype=np.int64)
    k = 0
    for x in range(size):
        if table[x]:
            minimal = True
            for b in range(n):
                bit = 1 << b
                if x & bit and table[x ^ bit]:
                    minimal = False
                    break
            if minimal:
                out[k] = x
                k += 1
    return out


@njit(cache=True)
def o3_violation(pos: np.ndarray, neg: np.ndarray, n: int) -> np.ndarray:
    m = pos.shape[0]
    for i in range(m):
        for j in range(m):
            if pos[i] == neg[j] and neg[i] == pos[j]:
                continue
            inter = pos[i] & neg[j]
            if inter == 0:
                continue
            up = pos[i] | pos[j]
            um = neg[i] | neg[j]
            for b in range(n):
                bit = 1 << b
                if not inter & bit:
                    continue
                ap = up & ~bit
                am = um & ~bit
                found = False
                for k in range(m):
                    if pos[k] & ~ap == 0 and neg[k] & ~am == 0:
                        found = True
                        break
                if not found:
                    return np.array([i, j, b], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


@njit(cache=True)
def m3_violation(masks: np.ndarray, dep: np.ndarray, n: int) -> np.ndarray:
    m = masks.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            inter = masks[i] & masks[j]
            if inter == 0:
                continue
            union = masks[i] | masks[j]
            for b in range(n):
                bit = 1 << b
                if inter & bit and not dep[union & ~bit]:
                    return np.array([i, j, b], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)
