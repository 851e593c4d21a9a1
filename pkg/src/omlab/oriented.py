"""Oriented matroids by signed circuit families.

Families always store both orientations of every circuit; the canonical
representative of a pair is the one whose first support element is
positive. Axiom (O3) is the standard signed elimination
Z+ <= (X+ u Y+) - e, Z- <= (X- u Y-) - e for e in X+ n Y-.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import backend
from .errors import AxiomViolation, InternalInconsistency
from .ground import GroundSet, SignedSet, Subset, same_ground, sort_signed, sort_subsets
from .matroid import Matroid, dual_matroid, validate_matroid


class OrientedMatroid:
    """Immutable; build via :func:`validate_oriented_matroid`."""

    def __init__(self, ground: GroundSet, circuits: Sequence[SignedSet], _validated: bool = False):
        if not _validated:
            raise TypeError("construct oriented matroids through validate_oriented_matroid()")
        self.ground = ground
        self.circuits = tuple(circuits)

    def representatives(self) -> list[SignedSet]:
        """One canonical member per +/- pair."""
        return [c for c in self.circuits if c.canonical() == c]

    @cached_property
    def underlying(self) -> Matroid:
        return underlying_matroid(self)

    def rank(self) -> int:
        return self.underlying.rank_full

    @cached_property
    def positive(self) -> list[SignedSet]:
        return [c for c in self.circuits if c.is_positive()]

    @cached_property
    def positive_closure(self) -> np.ndarray:
        """Table over all subsets: True iff the subset contains a positive circuit."""
        masks = np.array([c.pos for c in self.positive], dtype=np.int64)
        return backend.superset_closure(masks, self.ground.n)

    @cached_property
    def dual(self) -> OrientedMatroid:
        return _compute_dual(self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OrientedMatroid)
            and self.ground == other.ground
            and tuple((c.pos, c.neg) for c in self.circuits)
            == tuple((c.pos, c.neg) for c in other.circuits)
        )

    def __hash__(self) -> int:
        return hash((self.ground, tuple((c.pos, c.neg) for c in self.circuits)))

    def __repr__(self) -> str:
        return f"OrientedMatroid(n={self.ground.n}, circuits={len(self.circuits) // 2} pairs)"


def validate_oriented_matroid(ground: GroundSet, signed_circuits: Iterable[SignedSet]) -> OrientedMatroid:
    """Check (O1)-(O3) exhaustively and return the oriented matroid.

    The input must already be closed under negation; a missing -X is an (O1)
    violation, not something this function repairs.
    """
    seen: dict[tuple[int, int], SignedSet] = {}
    for c in signed_circuits:
        same_ground(ground, c.ground)
        seen[(c.pos, c.neg)] = c
    family = sort_signed(seen.values())

    for c in family:
        if c.support_mask == 0:
            raise AxiomViolation("O1", "the empty signed set is listed as a circuit", (c,))
        if (c.neg, c.pos) not in seen:
            raise AxiomViolation("O1", f"family lacks the negation of {c}", (c,))

    pos = np.array([c.pos for c in family], dtype=np.int64)
    neg = np.array([c.neg for c in family], dtype=np.int64)
    sup = pos | neg

    if len(family) >= 2:
        contained = (sup[:, None] & ~sup[None, :]) == 0
        equal = (pos[:, None] == pos[None, :]) & (neg[:, None] == neg[None, :])
        opposite = (pos[:, None] == neg[None, :]) & (neg[:, None] == pos[None, :])
        bad = contained & ~equal & ~opposite
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise AxiomViolation(
                "O2",
                f"{family[i]} and {family[j]} have comparable supports but are neither equal nor opposite",
                (family[i], family[j]),
            )

    hit = backend.o3_violation(pos, neg, ground.n)
    if hit[0] >= 0:
        i, j, b = map(int, hit)
        raise AxiomViolation(
            "O3",
            f"no eliminant for {family[i]}, {family[j]} at {ground.labels[b]}",
            (family[i], family[j], ground.labels[b]),
        )

    return OrientedMatroid(ground, family, _validated=True)


def underlying_matroid(om: OrientedMatroid) -> Matroid:
    """Matroid of circuit supports."""
    supports = {c.support_mask for c in om.circuits}
    family = [Subset(om.ground, m) for m in supports]
    try:
        return validate_matroid(om.ground, family)
    except AxiomViolation as exc:
        raise InternalInconsistency(f"circuit supports are not a matroid: {exc}") from exc


def orthogonal(x: SignedSet, y: SignedSet) -> bool:
    """Disjoint supports, or sign patterns on the common support that are
    neither identical nor exactly negated."""
    same_ground(x.ground, y.ground)
    common = x.support_mask & y.support_mask
    if common == 0:
        return True
    equal = (x.pos & common) == (y.pos & common) and (x.neg & common) == (y.neg & common)
    opposite = (x.pos & common) == (y.neg & common) and (x.neg & common) == (y.pos & common)
    return not (equal or opposite)


def positive_circuits(om: OrientedMatroid) -> list[Subset]:
    return sort_subsets(c.support() for c in om.positive)


def contains_positive_circuit(om: OrientedMatroid, s: Subset) -> Subset | None:
    """Lexicographically smallest positive circuit inside ``s``, if any."""
    same_ground(om.ground, s.ground)
    for sup in positive_circuits(om):
        if sup.issubset(s):
            return sup
    return None


def _signing_by_propagation(om: OrientedMatroid, support: Subset) -> SignedSet:
    """Unique (up to negation) signing of ``support`` orthogonal to all
    circuits, anchored by making the first support element positive.

    For every further element f there is a circuit meeting the support in
    exactly {f0, f} (extend a basis of the complementary hyperplane by both
    elements), and orthogonality on a 2-element intersection forces the
    relative sign.
    """
    idxs = support.indices()
    f0 = idxs[0]
    signs = {f0: 1}
    pending = [i for i in idxs[1:]]
    for f in pending:
        want = (1 << f0) | (1 << f)
        forced = 0
        for c in om.circuits:
            if c.support_mask & support.mask == want:
                forced = -c.sign(f0) * c.sign(f)
                break
        if forced == 0:
            raise InternalInconsistency(
                f"no circuit meets {support} in exactly {{{om.ground.labels[f0]},{om.ground.labels[f]}}}"
            )
        signs[f] = forced
    pos = sum(1 << i for i, s in signs.items() if s > 0)
    neg = sum(1 << i for i, s in signs.items() if s < 0)
    return SignedSet(om.ground, pos, neg)


def _signing_by_search(om: OrientedMatroid, support: Subset) -> list[SignedSet]:
    """Exhaustive oracle: all signings (first element positive) orthogonal to
    every circuit. Used in tests to confirm uniqueness; exponential in the
    support size."""
    idxs = support.indices()
    rest = idxs[1:]
    out = []
    for pattern in range(1 << len(rest)):
        pos = 1 << idxs[0]
        neg = 0
        for k, i in enumerate(rest):
            if pattern >> k & 1:
                neg |= 1 << i
            else:
                pos |= 1 << i
        cand = SignedSet(om.ground, pos, neg)
        if all(orthogonal(cand, c) for c in om.circuits):
            out.append(cand)
    return out


def _compute_dual(om: OrientedMatroid) -> OrientedMatroid:
    """Signed circuits of the dual: supports are the dual matroid's circuits,
    each signed with the unique assignment orthogonal to all primal circuits."""
    dual_m = dual_matroid(om.underlying)
    family = []
    for support in dual_m.circuits:
        z = _signing_by_propagation(om, support)
        if not all(orthogonal(z, c) for c in om.circuits):
            raise InternalInconsistency(f"no orthogonal signing exists for support {support}")
        family.append(z)
        family.append(-z)
    try:
        return validate_oriented_matroid(om.ground, family)
    except AxiomViolation as exc:
        raise InternalInconsistency(f"dual family failed validation: {exc}") from exc


def dual_oriented_matroid(om: OrientedMatroid) -> OrientedMatroid:
    return om.dual


def cocircuits(om: OrientedMatroid) -> list[SignedSet]:
    return list(om.dual.circuits)


def positive_cocircuits(om: OrientedMatroid) -> list[Subset]:
    return positive_circuits(om.dual)


def add_coloops(om: OrientedMatroid, new_labels: Sequence[str]) -> OrientedMatroid:
    """Extend the ground set without touching the circuit family; each new
    element lies in no circuit, so the rank grows by one per element."""
    ground = om.ground.extended(new_labels)
    family = [SignedSet(ground, c.pos, c.neg) for c in om.circuits]
    out = validate_oriented_matroid(ground, family)
    if out.rank() != om.rank() + len(tuple(new_labels)):
        raise InternalInconsistency("adding coloops did not raise the rank accordingly")
    return out


def restrict_om(om: OrientedMatroid, keep: Subset) -> OrientedMatroid:
    """Deletion of everything outside ``keep``: circuits with support inside it."""
    same_ground(om.ground, keep.ground)
    sub = GroundSet(keep.labels())
    remap = {old: new for new, old in enumerate(keep.indices())}
    family = []
    for c in om.circuits:
        if c.support_mask & ~keep.mask:
            continue
        pos = sum(1 << remap[i] for i in Subset(om.ground, c.pos).indices())
        neg = sum(1 << remap[i] for i in Subset(om.ground, c.neg).indices())
        family.append(SignedSet(sub, pos, neg))
    return validate_oriented_matroid(sub, family)
