"""Ground sets, subsets, and signed subsets over small label universes.

Subsets are bitmasks relative to a fixed label order; that order (the order
labels were supplied in) is the canonical order used for all printing and
for lexicographic comparison of set families.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GroundMismatch, GroundTooLarge, LabelCollision

MAX_GROUND = 16

_LABEL_RE = re.compile(r"[A-Za-z0-9_.]+\Z")


class GroundSet:
    """An ordered universe of at most 16 distinct element labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("ground set must be nonempty")
        if len(labels) > MAX_GROUND:
            raise GroundTooLarge(f"{len(labels)} elements exceeds the cap of {MAX_GROUND}")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels}")
        for lab in labels:
            if not _LABEL_RE.match(lab):
                raise ValueError(f"bad label {lab!r}: use [A-Za-z0-9_.]+")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in ground set {self.labels}") from None

    def subset(self, labels: Iterable[str] = ()) -> Subset:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return Subset(self, mask)

    def subset_from_mask(self, mask: int) -> Subset:
        if mask < 0 or mask > self.full_mask:
            raise ValueError(f"mask {mask:#x} out of range for n={self.n}")
        return Subset(self, mask)

    def full_set(self) -> Subset:
        return Subset(self, self.full_mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def extended(self, new_labels: Iterable[str]) -> GroundSet:
        """New ground set with ``new_labels`` appended after the existing ones."""
        new_labels = tuple(new_labels)
        for lab in new_labels:
            if lab in self._index:
                raise LabelCollision(f"label {lab!r} already present")
        return GroundSet(self.labels + new_labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({' '.join(self.labels)})"


def same_ground(a: GroundSet, b: GroundSet) -> GroundSet:
    if a != b:
        raise GroundMismatch(f"{a!r} vs {b!r}")
    return a


@dataclass(frozen=True)
class Subset:
    """A subset of one GroundSet, stored as a bitmask."""

    ground: GroundSet
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.ground.full_mask:
            raise ValueError(f"mask {self.mask:#x} out of range")

    def __iter__(self) -> Iterator[str]:
        for i, lab in enumerate(self.ground.labels):
            if self.mask >> i & 1:
                yield lab

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.ground.index(label) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.ground.n) if self.mask >> i & 1)

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key in canonical element order ({a,b} < {a,c} < {b})."""
        return self.indices()

    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    def __or__(self, other: Subset) -> Subset:
        same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask | other.mask)

    def __and__(self, other: Subset) -> Subset:
        same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask & other.mask)

    def __sub__(self, other: Subset) -> Subset:
        same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask & ~other.mask)

    def complement(self) -> Subset:
        return Subset(self.ground, self.ground.full_mask & ~self.mask)

    def issubset(self, other: Subset) -> bool:
        same_ground(self.ground, other.ground)
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"Subset({self})"


@dataclass(frozen=True)
class SignedSet:
    """A pair of disjoint subsets (positive part, negative part)."""

    ground: GroundSet
    pos: int
    neg: int

    def __post_init__(self):
        if self.pos & self.neg:
            raise ValueError("positive and negative parts overlap")
        full = self.ground.full_mask
        if self.pos & ~full or self.neg & ~full:
            raise ValueError("parts out of range")

    @classmethod
    def from_labels(cls, ground: GroundSet, pos: Iterable[str], neg: Iterable[str] = ()) -> SignedSet:
        return cls(ground, ground.subset(pos).mask, ground.subset(neg).mask)

    @property
    def support_mask(self) -> int:
        return self.pos | self.neg

    def support(self) -> Subset:
        return Subset(self.ground, self.support_mask)

    def positive_part(self) -> Subset:
        return Subset(self.ground, self.pos)

    def negative_part(self) -> Subset:
        return Subset(self.ground, self.neg)

    def __neg__(self) -> SignedSet:
        return SignedSet(self.ground, self.neg, self.pos)

    def is_positive(self) -> bool:
        return self.neg == 0 and self.pos != 0

    def sign(self, index: int) -> int:
        """+1 / -1 / 0 at element position ``index``."""
        if self.pos >> index & 1:
            return 1
        if self.neg >> index & 1:
            return -1
        return 0

    def sort_key(self) -> tuple:
        sup = Subset(self.ground, self.support_mask).indices()
        return (sup, tuple(0 if self.pos >> i & 1 else 1 for i in sup))

    def canonical(self) -> SignedSet:
        """The lexicographically smaller of X and -X (first support element +)."""
        neg = -self
        return self if self.sort_key() <= neg.sort_key() else neg

    def __str__(self) -> str:
        parts = []
        for i, lab in enumerate(self.ground.labels):
            s = self.sign(i)
            if s:
                parts.append(("+" if s > 0 else "-") + lab)
        return "(" + " ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"SignedSet{self}"


def sort_subsets(subsets: Iterable[Subset]) -> list[Subset]:
    return sorted(subsets, key=Subset.sort_key)


def sort_signed(signed: Iterable[SignedSet]) -> list[SignedSet]:
    return sorted(signed, key=SignedSet.sort_key)
