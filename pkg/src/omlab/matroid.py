"""Matroids given by explicit circuit families, with rank, duality, and the
constructions the verification engine needs.

A matroid is stored as its sorted family of circuit bitmasks. Validation
checks the circuit axioms exhaustively; rank queries run greedily against a
precomputed dependence table, and whole-table operations (duals, double
circuits, flats) use the backend kernels over all 2^n subsets.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import backend
from .errors import (
    AxiomViolation,
    GroundMismatch,
    InternalInconsistency,
    PartitionInvalid,
)
from .ground import GroundSet, Subset, same_ground, sort_subsets

_PC_CACHE: dict[int, np.ndarray] = {}


def popcounts(n: int) -> np.ndarray:
    if n not in _PC_CACHE:
        _PC_CACHE[n] = backend.popcount_table(n)
    return _PC_CACHE[n]


class Matroid:
    """Immutable matroid over a GroundSet; build via :func:`validate_matroid`."""

    def __init__(self, ground: GroundSet, circuits: Sequence[Subset], _validated: bool = False):
        if not _validated:
            raise TypeError("construct matroids through validate_matroid()")
        self.ground = ground
        self.circuits = tuple(circuits)

    @cached_property
    def circuit_masks(self) -> np.ndarray:
        return np.array([c.mask for c in self.circuits], dtype=np.int64)

    @cached_property
    def dependent(self) -> np.ndarray:
        """dependent[X] = some circuit is contained in mask X."""
        return backend.superset_closure(self.circuit_masks, self.ground.n)

    @cached_property
    def ranks(self) -> np.ndarray:
        """Exhaustive rank table over all 2^n subsets (test oracle for rank())."""
        return backend.rank_table(self.dependent, popcounts(self.ground.n), self.ground.n)

    @property
    def rank_full(self) -> int:
        return int(self.ranks[self.ground.full_mask])

    def rank(self, x: Subset) -> int:
        """Greedy augmentation in canonical element order.

        Correct by the exchange property; the ``ranks`` table recomputes the
        same value by subset dynamic programming and the two are
        cross-checked in tests.
        """
        same_ground(self.ground, x.ground)
        dep = self.dependent
        acc = 0
        count = 0
        rest = x.mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if not dep[acc | bit]:
                acc |= bit
                count += 1
        return count

    def is_independent(self, x: Subset) -> bool:
        same_ground(self.ground, x.ground)
        return not bool(self.dependent[x.mask])

    def spans(self, x: Subset) -> bool:
        same_ground(self.ground, x.ground)
        return int(self.ranks[x.mask]) == self.rank_full

    def closure(self, x: Subset) -> Subset:
        same_ground(self.ground, x.ground)
        r = self.ranks[x.mask]
        cl = x.mask
        for i in range(self.ground.n):
            bit = 1 << i
            if not cl & bit and self.ranks[x.mask | bit] == r:
                cl |= bit
        return Subset(self.ground, cl)

    def greedy_basis(self) -> Subset:
        """Lexicographically first basis."""
        dep = self.dependent
        acc = 0
        for i in range(self.ground.n):
            bit = 1 << i
            if not dep[acc | bit]:
                acc |= bit
        return Subset(self.ground, acc)

    def subset(self, labels: Iterable[str] = ()) -> Subset:
        return self.ground.subset(labels)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and tuple(c.mask for c in self.circuits) == tuple(c.mask for c in other.circuits)
        )

    def __hash__(self) -> int:
        return hash((self.ground, tuple(c.mask for c in self.circuits)))

    def __repr__(self) -> str:
        return f"Matroid(n={self.ground.n}, rank={self.rank_full}, circuits={len(self.circuits)})"


def validate_matroid(ground: GroundSet, circuits: Iterable[Subset]) -> Matroid:
    """Check (M1)-(M3) exhaustively and return the matroid.

    (M3) is checked for every pair X != Y and every common element e by
    asking the dependence table whether some family member lies inside
    (X u Y) - e.
    """
    seen: dict[int, Subset] = {}
    for c in circuits:
        same_ground(ground, c.ground)
        seen[c.mask] = c
    family = sort_subsets(seen.values())
    masks = np.array([c.mask for c in family], dtype=np.int64)

    if 0 in seen:
        raise AxiomViolation("M1", "the empty set is listed as a circuit", (seen[0],))

    if len(family) >= 2:
        sub = (masks[:, None] & ~masks[None, :]) == 0
        np.fill_diagonal(sub, False)
        if sub.any():
            i, j = map(int, np.argwhere(sub)[0])
            raise AxiomViolation(
                "M2",
                f"{family[i]} is properly contained in {family[j]}",
                (family[i], family[j]),
            )

    dep = backend.superset_closure(masks, ground.n)
    hit = backend.m3_violation(masks, dep, ground.n)
    if hit[0] >= 0:
        i, j, b = map(int, hit)
        raise AxiomViolation(
            "M3",
            f"no circuit inside ({family[i]} u {family[j]}) - {ground.labels[b]}",
            (family[i], family[j], ground.labels[b]),
        )

    m = Matroid(ground, family, _validated=True)
    m.__dict__["circuit_masks"] = masks
    m.__dict__["dependent"] = dep
    return m


def partition_matroid(ground: GroundSet, blocks: Sequence[Subset]) -> Matroid:
    """Independent sets meet every block at most once; circuits are the
    2-subsets inside a block."""
    seen = 0
    for b in blocks:
        same_ground(ground, b.ground)
        if b.mask & seen:
            raise PartitionInvalid(f"block {b} overlaps earlier blocks")
        seen |= b.mask
    if seen != ground.full_mask:
        missing = Subset(ground, ground.full_mask & ~seen)
        raise PartitionInvalid(f"elements {missing} not covered by any block")
    circuits = []
    for b in blocks:
        for i, j in combinations(b.indices(), 2):
            circuits.append(Subset(ground, (1 << i) | (1 << j)))
    return validate_matroid(ground, circuits)


def dual_matroid(m: Matroid) -> Matroid:
    """Dual via cobasis enumeration: X is independent in the dual iff the
    complement of X contains a basis; dual circuits are the minimal
    dependent sets of that independence system."""
    n = m.ground.n
    idx = np.arange(1 << n, dtype=np.int64)
    pc = popcounts(n)
    bases = idx[(pc == m.rank_full) & ~m.dependent]
    cobases = bases ^ m.ground.full_mask
    dual_indep = backend.subset_closure(cobases, n)
    circuit_masks = backend.minimal_members(~dual_indep, n)
    family = [Subset(m.ground, int(mask)) for mask in circuit_masks]
    try:
        return validate_matroid(m.ground, family)
    except AxiomViolation as exc:  # dual of a valid matroid is always valid
        raise InternalInconsistency(f"dual circuit family failed validation: {exc}") from exc


def double_circuits(m: Matroid) -> list[Subset]:
    """All D with rank(D) = |D| - 2 and rank(D - e) = |D| - 2 for every e in D."""
    n = m.ground.n
    idx = np.arange(1 << n, dtype=np.int64)
    pc = popcounts(n).astype(np.int16)
    ranks = m.ranks.astype(np.int16)
    ok = (pc >= 2) & (ranks == pc - 2)
    for b in range(n):
        bit = 1 << b
        has = ok & ((idx & bit) != 0)
        sel = idx[has]
        keep = ranks[sel ^ bit] == pc[sel] - 2
        ok[sel[~keep]] = False
    return sort_subsets(Subset(m.ground, int(d)) for d in idx[ok])


def add_loops(m: Matroid, new_labels: Sequence[str]) -> Matroid:
    """Extend the ground set; each new element becomes a singleton circuit,
    so the rank is unchanged."""
    ground = m.ground.extended(new_labels)
    circuits = [Subset(ground, c.mask) for c in m.circuits]
    for lab in new_labels:
        circuits.append(ground.subset([lab]))
    out = validate_matroid(ground, circuits)
    if out.rank_full != m.rank_full:
        raise InternalInconsistency("adding loops changed the rank")
    return out


def restrict_matroid(m: Matroid, keep: Subset) -> Matroid:
    """Deletion of everything outside ``keep``: circuits are those inside it."""
    same_ground(m.ground, keep.ground)
    sub = GroundSet(keep.labels())
    old_indices = keep.indices()
    remap = {old: new for new, old in enumerate(old_indices)}
    circuits = []
    for c in m.circuits:
        if c.mask & ~keep.mask:
            continue
        mask = 0
        for i in c.indices():
            mask |= 1 << remap[i]
        circuits.append(Subset(sub, mask))
    return validate_matroid(sub, circuits)
