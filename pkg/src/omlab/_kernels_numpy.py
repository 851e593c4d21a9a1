"""Pure-numpy implementations of the subset-table kernels.

Every function here has a numba twin in ``_kernels_numba``; the active set
is chosen by ``omlab.backend``. Tables are indexed by bitmask over a ground
set of n <= 16 elements, so each table has at most 2^16 entries.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def popcount_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        pc += ((idx >> b) & 1).astype(np.uint8)
    return pc


def superset_closure(masks: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff X contains at least one of ``masks``."""
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    out[masks] = True
    idx = np.arange(size, dtype=np.int64)
    for b in range(n):
        bit = 1 << b
        upper = idx[(idx & bit) != 0]
        out[upper] |= out[upper ^ bit]
    return out


def subset_closure(masks: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff X is contained in at least one of ``masks``."""
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    out[masks] = True
    idx = np.arange(size, dtype=np.int64)
    for b in range(n):
        bit = 1 << b
        lower = idx[(idx & bit) == 0]
        out[lower] |= out[lower | bit]
    return out


def rank_table(dep: np.ndarray, pc: np.ndarray, n: int) -> np.ndarray:
    """rank[X] = size of the largest Y <= X with dep[Y] False.

    Processes masks by increasing popcount; a dependent X inherits the best
    rank among its one-element-removed subsets.
    """
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    rank = np.where(dep, 0, pc).astype(np.uint8)
    for k in range(1, n + 1):
        layer = idx[(pc == k) & dep]
        if layer.size == 0:
            continue
        best = np.zeros(layer.size, dtype=np.uint8)
        for b in range(n):
            bit = 1 << b
            has = (layer & bit) != 0
            cand = rank[layer ^ bit]
            best = np.where(has, np.maximum(best, cand), best)
        rank[layer] = best
    return rank


def flats_table(rank: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff X is closed: every added element raises the rank."""
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    out = np.ones(size, dtype=np.bool_)
    for b in range(n):
        bit = 1 << b
        lower = idx[(idx & bit) == 0]
        out[lower] &= rank[lower | bit] > rank[lower]
    return out


def minimal_members(table: np.ndarray, n: int) -> np.ndarray:
    """Masks X with table[X] True and table[X - e] False for every e in X."""
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    ok = table.copy()
    for b in range(n):
        bit = 1 << b
        upper = idx[(idx & bit) != 0]
        ok[upper] &= ~table[upper ^ bit]
    return idx[ok]


def o3_violation(pos: np.ndarray, neg: np.ndarray, n: int) -> np.ndarray:
    """Search the signed family for a failed elimination.

    For every ordered pair X, Y with X != -Y and every e in X+ n Y-, some
    member Z must satisfy Z+ <= (X+ u Y+) - e and Z- <= (X- u Y-) - e.
    Returns [i, j, e_bit] for the first failure, or [-1, -1, -1].
    """
    m = pos.shape[0]
    if m == 0:
        return np.array([-1, -1, -1], dtype=np.int64)
    ii, jj = np.nonzero((pos[:, None] & neg[None, :]) != 0)
    anti = (pos[ii] == neg[jj]) & (neg[ii] == pos[jj])
    ii, jj = ii[~anti], jj[~anti]
    for b in range(n):
        bit = 1 << b
        sel = (pos[ii] & neg[jj] & bit) != 0
        qi, qj = ii[sel], jj[sel]
        if qi.size == 0:
            continue
        ap = (pos[qi] | pos[qj]) & ~bit
        am = (neg[qi] | neg[qj]) & ~bit
        found = np.zeros(qi.size, dtype=np.bool_)
        for k in range(m):
            open_q = ~found
            if not open_q.any():
                break
            hit = ((pos[k] & ~ap[open_q]) == 0) & ((neg[k] & ~am[open_q]) == 0)
            found[np.nonzero(open_q)[0][hit]] = True
        if not found.all():
            bad = int(np.nonzero(~found)[0][0])
            return np.array([qi[bad], qj[bad], b], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


def m3_violation(masks: np.ndarray, dep: np.ndarray, n: int) -> np.ndarray:
    """Circuit elimination check against the dependence table.

    Returns [i, j, e_bit] for the first pair X != Y and e in X n Y with no
    family member inside (X u Y) - e, or [-1, -1, -1].
    """
    m = masks.shape[0]
    if m < 2:
        return np.array([-1, -1, -1], dtype=np.int64)
    ii, jj = np.triu_indices(m, k=1)
    inter = masks[ii] & masks[jj]
    keep = inter != 0
    ii, jj, inter = ii[keep], jj[keep], inter[keep]
    union = masks[ii] | masks[jj]
    for b in range(n):
        bit = 1 << b
        sel = (inter & bit) != 0
        if not sel.any():
            continue
        ok = dep[union[sel] & ~bit]
        if not ok.all():
            bad = int(np.nonzero(~ok)[0][0])
            qi = ii[sel][bad]
            qj = jj[sel][bad]
            return np.array([qi, qj, b], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)
