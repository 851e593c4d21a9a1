"""Hypothesis checking, witness extraction, rank reduction, and the duality
transport between the primal and dual statements.

The primal statement: given an oriented matroid of rank r and a matroid of
larger rank on the same ground set, if every subset whose complement has
rank below r contains a positive circuit, then some positive circuit is
independent in the matroid. The dual statement trades positive circuits for
positive cocircuits and complements-with-small-rank for double circuits.
Both are verified exhaustively per instance; a missing witness is reported
as a counterexample, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import (
    HypothesisUnmet,
    InternalInconsistency,
    NothingToReduce,
    RankMismatch,
)
from .ground import Subset, same_ground, sort_subsets
from .matroid import (
    Matroid,
    add_loops,
    double_circuits,
    dual_matroid,
    restrict_matroid,
)
from .oriented import (
    OrientedMatroid,
    add_coloops,
    contains_positive_circuit,
    dual_oriented_matroid,
    positive_circuits,
    positive_cocircuits,
    restrict_om,
)
from . import backend

Mode = Literal["thm4", "thm5"]


@dataclass(frozen=True)
class HolmsenInstance:
    """Oriented matroid plus matroid on one ground set, primal orientation."""

    om: OrientedMatroid
    matroid: Matroid

    def __post_init__(self):
        same_ground(self.om.ground, self.matroid.ground)

    @property
    def ground(self):
        return self.om.ground


@dataclass(frozen=True)
class DualInstance:
    """Matroid of rank r-1 plus oriented matroid of rank r, dual orientation."""

    matroid: Matroid
    om: OrientedMatroid

    def __post_init__(self):
        same_ground(self.om.ground, self.matroid.ground)
        if self.matroid.rank_full != self.om.rank() - 1:
            raise RankMismatch(
                f"matroid rank {self.matroid.rank_full} != oriented matroid rank {self.om.rank()} - 1"
            )

    @property
    def ground(self):
        return self.om.ground


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a hypothesis check and, when requested, witness search.

    ``counterexample`` is set when the hypothesis holds but no witness
    exists; that would falsify the statement on this instance and is a
    reportable result, not an error.
    """

    hypothesis_holds: bool
    violators: tuple[Subset, ...] = ()
    witness: Subset | None = None
    trace: tuple[tuple[Subset, Subset | None], ...] = field(default=())
    counterexample: bool = False

    def render(self) -> str:
        lines = [f"hypothesis: {'HOLDS' if self.hypothesis_holds else 'FAILS'}"]
        for v in self.violators:
            lines.append(f"violator: {v}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness}")
        if self.counterexample:
            lines.append("counterexample: hypothesis holds but no witness exists")
        if self.trace:
            lines.append("trace:")
            for checked, found in self.trace:
                lines.append(f"  {checked} -> {found if found is not None else 'none'}")
        return "\n".join(lines)


def corank1_complements(m: Matroid, r: int) -> list[Subset]:
    """Inclusion-minimal S with rank(E - S) = r - 1.

    These are exactly the complements of the rank-(r-1) flats: maximal sets
    of that rank are closed, and same-rank flats are incomparable.
    """
    if r > m.rank_full:
        raise RankMismatch(f"r={r} exceeds the matroid rank {m.rank_full}")
    if r <= 0:
        return []
    flats = backend.flats_table(m.ranks, m.ground.n)
    idx = np.arange(1 << m.ground.n, dtype=np.int64)
    hits = idx[flats & (m.ranks == r - 1)]
    full = m.ground.full_mask
    return sort_subsets(Subset(m.ground, int(full ^ f)) for f in hits)


def _require_mode_ranks(inst: HolmsenInstance, mode: Mode) -> tuple[int, int]:
    r = inst.om.rank()
    rho = inst.matroid.rank_full
    if mode == "thm4":
        if not rho > r:
            raise RankMismatch(f"need matroid rank > {r}, have {rho}")
    elif mode == "thm5":
        if rho != r + 1:
            raise RankMismatch(f"need matroid rank exactly {r + 1}, have {rho}")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return r, rho


def check_hypothesis(inst: HolmsenInstance, mode: Mode = "thm4") -> WitnessReport:
    """Does every minimal S with rank(E - S) = r - 1 contain a positive
    circuit?  Sufficient for the full quantification over rank(E - S) < r:
    that family is upward closed, so each member contains a minimal one."""
    r, _ = _require_mode_ranks(inst, mode)
    violators = []
    trace = []
    for s in corank1_complements(inst.matroid, r):
        found = contains_positive_circuit(inst.om, s)
        trace.append((s, found))
        if found is None:
            violators.append(s)
    return WitnessReport(
        hypothesis_holds=not violators,
        violators=tuple(violators),
        trace=tuple(trace),
    )


def claim1_equivalent(inst: HolmsenInstance) -> bool:
    """Full-enumeration oracle: quantifying the hypothesis over
    {S : rank(E-S) < r} and over {S : rank(E-S) = r-1} gives one verdict."""
    r = inst.om.rank()
    n = inst.ground.n
    idx = np.arange(1 << n, dtype=np.int64)
    comp_ranks = inst.matroid.ranks[idx ^ inst.ground.full_mask].astype(np.int16)
    has_pos = inst.om.positive_closure
    verdict_lt = bool(has_pos[comp_ranks < r].all())
    verdict_eq = bool(has_pos[comp_ranks == r - 1].all())
    return verdict_lt == verdict_eq


def reduce_rank(inst: HolmsenInstance) -> HolmsenInstance:
    """Shrink a rank gap above one down to exactly one.

    Restricts both structures to the closure of the first r+1 elements of
    the lexicographically first basis, then pads the matroid with loops that
    are simultaneously coloops of the oriented matroid until the oriented
    matroid is back at rank r.
    """
    r = inst.om.rank()
    rho = inst.matroid.rank_full
    if rho <= r + 1:
        raise NothingToReduce(f"matroid rank {rho} is already at most {r + 1}")
    basis = inst.matroid.greedy_basis()
    seed_indices = basis.indices()[: r + 1]
    seed = Subset(inst.ground, sum(1 << i for i in seed_indices))
    keep = inst.matroid.closure(seed)
    m_restricted = restrict_matroid(inst.matroid, keep)
    om_restricted = restrict_om(inst.om, keep)
    if m_restricted.rank_full != r + 1:
        raise InternalInconsistency("restriction missed the target rank")
    k = r - om_restricted.rank()
    fresh = [f"_e{i + 1}" for i in range(k)]
    m_out = add_loops(m_restricted, fresh)
    om_out = add_coloops(om_restricted, fresh)
    if m_out.rank_full != om_out.rank() + 1:
        raise InternalInconsistency("reduced instance violates the rank relation")
    return HolmsenInstance(om_out, m_out)


def find_witness(inst: HolmsenInstance) -> WitnessReport:
    """Lexicographically smallest positive circuit independent in the
    matroid; requires the hypothesis."""
    rep = check_hypothesis(inst, mode="thm4")
    if not rep.hypothesis_holds:
        raise HypothesisUnmet("hypothesis fails; no witness is promised", rep.violators)
    for candidate in positive_circuits(inst.om):
        if inst.matroid.is_independent(candidate):
            return WitnessReport(True, (), candidate, rep.trace)
    return WitnessReport(True, (), None, rep.trace, counterexample=True)


def check_dual_hypothesis(inst: DualInstance) -> WitnessReport:
    """Does every double circuit of the matroid contain a positive cocircuit?"""
    if inst.matroid.rank_full != inst.om.rank() - 1:
        raise RankMismatch("instance lost its rank relation")
    cocircs = positive_cocircuits(inst.om)
    violators = []
    trace = []
    for d in double_circuits(inst.matroid):
        found = next((c for c in cocircs if c.issubset(d)), None)
        trace.append((d, found))
        if found is None:
            violators.append(d)
    return WitnessReport(
        hypothesis_holds=not violators,
        violators=tuple(violators),
        trace=tuple(trace),
    )


def find_dual_witness(inst: DualInstance) -> WitnessReport:
    """Lexicographically smallest positive cocircuit whose complement spans
    the matroid; requires the dual hypothesis."""
    rep = check_dual_hypothesis(inst)
    if not rep.hypothesis_holds:
        raise HypothesisUnmet("dual hypothesis fails; no witness is promised", rep.violators)
    for candidate in positive_cocircuits(inst.om):
        if inst.matroid.spans(candidate.complement()):
            return WitnessReport(True, (), candidate, rep.trace)
    return WitnessReport(True, (), None, rep.trace, counterexample=True)


def dualize_instance(inst: DualInstance) -> HolmsenInstance:
    """Transport a dual instance to a primal one by dualizing both parts.

    Bookkeeping asserted: the dual oriented matroid has rank n - r and the
    dual matroid rank (n - r) + 1, i.e. the exact-gap primal form.
    """
    om_star = dual_oriented_matroid(inst.om)
    m_star = dual_matroid(inst.matroid)
    r_star = inst.ground.n - inst.om.rank()
    if om_star.rank() != r_star:
        raise RankMismatch(f"dual oriented matroid rank {om_star.rank()} != {r_star}")
    if m_star.rank_full != r_star + 1:
        raise RankMismatch(f"dual matroid rank {m_star.rank_full} != {r_star + 1}")
    return HolmsenInstance(om_star, m_star)
