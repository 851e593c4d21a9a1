"""Exact-rational point configurations and their oriented matroids.

The oriented matroid of a configuration relative to an anchor x has one
signed circuit per inclusion-minimal subset S carrying a linear dependency
sum_p a_p (p - x) = 0, signed by the coefficient signs. Convex position is
decided by the independent hull-membership oracle, never through the
circuit structure; the equivalence of the two is what the test suite
verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from . import backend
from .errors import AnchorInSet, HypothesisUnmet, InternalInconsistency, WitnessNotTransversal
from .ground import GroundSet, SignedSet, Subset, same_ground
from .matroid import Matroid, partition_matroid
from .oriented import OrientedMatroid, validate_oriented_matroid
from .ratlinalg import Vector, column_rank, nullspace_vector, solve_affine


def as_vector(coords: Iterable) -> Vector:
    out = []
    for c in coords:
        if isinstance(c, float):
            raise TypeError(f"float coordinate {c!r}: this module is exact-rational only")
        out.append(Fraction(c))
    return tuple(out)


@dataclass(frozen=True)
class ColoredPointConfig:
    """Rational points with optional color classes and an anchor point.

    ``points`` maps labels to vectors; insertion order is the canonical
    element order. Duplicate coordinates are allowed (multiset semantics),
    the anchor coinciding with a point is not.
    """

    dim: int
    points: dict[str, Vector]
    anchor: Vector
    colors: dict[str, int] | None = None

    def __post_init__(self):
        if not self.points:
            raise ValueError("configuration needs at least one point")
        # normalize every coordinate to Fraction; floats are rejected
        object.__setattr__(self, "anchor", as_vector(self.anchor))
        object.__setattr__(
            self, "points", {lab: as_vector(p) for lab, p in self.points.items()}
        )
        if len(self.anchor) != self.dim:
            raise ValueError("anchor dimension mismatch")
        for lab, p in self.points.items():
            if len(p) != self.dim:
                raise ValueError(f"point {lab} has dimension {len(p)}, expected {self.dim}")
            if p == self.anchor:
                raise AnchorInSet(f"anchor coincides with point {lab}")
        if self.colors is not None:
            if set(self.colors) != set(self.points):
                raise ValueError("colors must be assigned to exactly the point labels")
            for lab, c in self.colors.items():
                if not 0 <= c <= self.dim:
                    raise ValueError(f"color {c} of {lab} outside 0..{self.dim}")

    @classmethod
    def uncolored(cls, dim: int, points: Mapping[str, Iterable], anchor: Iterable) -> ColoredPointConfig:
        pts = {lab: as_vector(p) for lab, p in points.items()}
        return cls(dim, pts, as_vector(anchor))

    @classmethod
    def colored(
        cls,
        dim: int,
        points: Mapping[str, Iterable],
        anchor: Iterable,
        colors: Mapping[str, int],
    ) -> ColoredPointConfig:
        pts = {lab: as_vector(p) for lab, p in points.items()}
        return cls(dim, pts, as_vector(anchor), dict(colors))

    def ground(self) -> GroundSet:
        return GroundSet(self.points.keys())

    def color_count(self) -> int:
        if self.colors is None:
            return 0
        return max(self.colors.values()) + 1

    def color_blocks(self, ground: GroundSet | None = None) -> list[Subset]:
        """One subset per color index, in color order."""
        if self.colors is None:
            raise ValueError("configuration is uncolored")
        g = ground if ground is not None else self.ground()
        blocks = []
        for i in range(self.color_count()):
            blocks.append(g.subset(lab for lab, c in self.colors.items() if c == i))
        return blocks

    def differences(self) -> dict[str, Vector]:
        return {lab: tuple(a - b for a, b in zip(p, self.anchor)) for lab, p in self.points.items()}


@dataclass(frozen=True)
class HullCertificate:
    """Exact convex combination of at most dim+1 points reconstructing x."""

    support: tuple[str, ...]
    coefficients: dict[str, Fraction] = field(compare=False)

    def verify(self, points: Mapping[str, Vector], x: Vector) -> bool:
        if len(self.support) > len(x) + 1:
            return False
        if set(self.support) != set(self.coefficients):
            return False
        coeffs = [self.coefficients[lab] for lab in self.support]
        if any(c < 0 for c in coeffs) or sum(coeffs) != 1:
            return False
        recon = [Fraction(0)] * len(x)
        for lab in self.support:
            for i, coord in enumerate(points[lab]):
                recon[i] += self.coefficients[lab] * coord
        return tuple(recon) == tuple(x)

    def __str__(self) -> str:
        inner = ", ".join(f"{lab}:{self.coefficients[lab]}" for lab in self.support)
        return "{" + inner + "}"


def om_from_points(config: ColoredPointConfig) -> OrientedMatroid:
    """Signed circuits from the minimal linear dependencies of {p - x}.

    Subsets are scanned in increasing size; a candidate is a set whose
    proper subsets are all independent, and its kernel vector (unique up to
    scale for a minimal dependency) supplies the circuit signs. No circuit
    can exceed rank+1 elements, which bounds the scan.
    """
    ground = config.ground()
    diffs = config.differences()
    vectors = [diffs[lab] for lab in ground.labels]
    n = ground.n
    rank = column_rank(vectors)

    independent: set[int] = {0}
    signed: list[SignedSet] = []
    for size in range(1, min(n, rank + 1) + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any((mask ^ (1 << i)) not in independent for i in combo):
                continue
            alpha = nullspace_vector([vectors[i] for i in combo])
            if alpha is None:
                independent.add(mask)
                continue
            pos = neg = 0
            for i, a in zip(combo, alpha):
                if a > 0:
                    pos |= 1 << i
                elif a < 0:
                    neg |= 1 << i
                else:
                    raise InternalInconsistency(
                        f"zero coefficient in a minimal dependency on {Subset(ground, mask)}"
                    )
            z = SignedSet(ground, pos, neg)
            signed.append(z)
            signed.append(-z)

    om = validate_oriented_matroid(ground, signed)
    if om.rank() != rank:
        raise InternalInconsistency(f"oriented matroid rank {om.rank()} != vector rank {rank}")
    return om


def hull_membership(
    points: Mapping[str, Vector], s: Iterable[str], x: Vector
) -> HullCertificate | None:
    """Certificate that x lies in the convex hull of the points labeled by
    ``s``, or None.

    Supports are enumerated by size then lexicographically (in the order of
    ``points``); only affinely independent supports are solved, which is
    complete because a convex combination over a dependent support restricts
    to a proper sub-support.
    """
    points = {lab: as_vector(p) for lab, p in points.items()}
    x = as_vector(x)
    order = {lab: i for i, lab in enumerate(points)}
    labels = sorted(s, key=order.__getitem__)
    dim = len(x)
    for size in range(1, min(len(labels), dim + 1) + 1):
        for combo in combinations(labels, size):
            sol = solve_affine([points[lab] for lab in combo], x)
            if sol is not None and all(c >= 0 for c in sol):
                return HullCertificate(tuple(combo), dict(zip(combo, sol)))
    return None


def feasible_support_masks(config: ColoredPointConfig) -> list[int]:
    """Masks of the affinely independent supports whose convex hull contains
    the anchor; the upward closure of these is exactly hull membership."""
    labels = list(config.points)
    dim = config.dim
    out = []
    for size in range(1, min(len(labels), dim + 1) + 1):
        for combo in combinations(range(len(labels)), size):
            sol = solve_affine([config.points[labels[i]] for i in combo], config.anchor)
            if sol is not None and all(c >= 0 for c in sol):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                out.append(mask)
    return out


def hull_table(config: ColoredPointConfig) -> np.ndarray:
    """Table over all subsets S: True iff the anchor is in conv(S)."""
    masks = np.array(feasible_support_masks(config), dtype=np.int64)
    return backend.superset_closure(masks, len(config.points))


def build_holmsen_instance(config: ColoredPointConfig) -> tuple[OrientedMatroid, Matroid]:
    """Oriented matroid of the configuration plus the partition matroid of
    its color classes; requires the anchor inside every color's hull."""
    if config.colors is None:
        raise ValueError("building an instance needs a colored configuration")
    if config.color_count() != config.dim + 1:
        raise ValueError(
            f"expected {config.dim + 1} colors for dimension {config.dim}, got {config.color_count()}"
        )
    ground = config.ground()
    blocks = config.color_blocks(ground)
    for i, block in enumerate(blocks):
        cert = hull_membership(config.points, block, config.anchor)
        if cert is None:
            raise HypothesisUnmet(f"anchor not in the convex hull of color {i}")
    om = om_from_points(config)
    m = partition_matroid(ground, blocks)
    if not m.rank_full > om.rank():
        raise InternalInconsistency("partition rank does not exceed the oriented matroid rank")
    return om, m


def lift_witness_to_colorful(witness: Subset, config: ColoredPointConfig) -> Subset:
    """Extend a transversal-compatible witness to exactly one point per
    color, filling each missing color with its first point."""
    ground = config.ground()
    same_ground(ground, witness.ground)
    result = witness.mask
    for i, block in enumerate(config.color_blocks(ground)):
        hits = witness.mask & block.mask
        if hits.bit_count() > 1:
            raise WitnessNotTransversal(f"witness meets color {i} more than once")
        if hits == 0:
            result |= block.mask & -block.mask  # lowest-index point of the block
    return Subset(ground, result)
