"""Positive cocircuits viewed as vertices of an arrangement.

The zero set of a positive cocircuit (the elements outside its support)
plays the role of the pseudospheres meeting at that vertex. Pairs of
vertices are classified by how their zero sets sit inside a reference
matroid, and each classification either certifies a double circuit inside
the union of the zero sets or explains why none is forced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, RankMismatch
from .ground import SignedSet, Subset, same_ground
from .matroid import Matroid, double_circuits
from .oriented import OrientedMatroid

TAG_DEGENERATE = "degenerate-vertex"
TAG_COMPLEMENT_SPANS = "complement-spans"
TAG_INTERSECTION_INDEPENDENT = "intersection-independent"
TAG_ONE_RANK_STAGNANT = "one-rank-stagnant"
TAG_BOTH_RANK_INCREASE = "both-rank-increase"


@dataclass(frozen=True)
class VertexView:
    """A positive cocircuit together with its zero set."""

    cocircuit: SignedSet
    zero_set: Subset

    def support(self) -> Subset:
        return self.cocircuit.support()


@dataclass(frozen=True)
class PairClassification:
    v1: VertexView
    v2: VertexView
    tag: str
    double_circuit: Subset | None


def vertex_views(om: OrientedMatroid) -> list[VertexView]:
    """One view per positive cocircuit, in canonical order.

    A cocircuit's zero set is a hyperplane of the underlying matroid, so it
    always has at least rank - 1 elements; that bound is asserted here.
    """
    views = []
    min_zero = om.rank() - 1
    for c in om.dual.circuits:
        if not c.is_positive():
            continue
        zero = c.support().complement()
        if len(zero) < min_zero:
            raise InternalInconsistency(f"zero set {zero} smaller than rank - 1")
        views.append(VertexView(c, zero))
    views.sort(key=lambda v: v.cocircuit.sort_key())
    return views


def complementary_pairs(om: OrientedMatroid, m: Matroid) -> list[tuple[VertexView, VertexView]]:
    """Unordered pairs of vertices whose zero sets are disjoint."""
    same_ground(om.ground, m.ground)
    views = vertex_views(om)
    out = []
    for i in range(len(views)):
        for j in range(i + 1, len(views)):
            if not views[i].zero_set & views[j].zero_set:
                out.append((views[i], views[j]))
    return out


def contains_double_circuit(m: Matroid, x: Subset) -> bool:
    """Rank criterion: rank(X) <= |X| - 2. The equivalence with explicit
    double-circuit containment is cross-checked by enumeration in tests."""
    same_ground(m.ground, x.ground)
    return int(m.ranks[x.mask]) <= len(x) - 2


def _first_double_circuit_within(m: Matroid, x: Subset) -> Subset | None:
    for d in double_circuits(m):
        if d.issubset(x):
            return d
    return None


def classify_pair(m: Matroid, v1: VertexView, v2: VertexView) -> PairClassification:
    """Case analysis for a pair of vertices against a rank-d matroid.

    1. a zero set with more than d elements is a degenerate vertex; when it
       is non-spanning it must contain a double circuit;
    2. a spanning zero set is the good case, nothing to extract;
    3. an independent intersection forces (by submodularity) union rank at
       most |union| - 2, hence a double circuit in the union;
    4. if either side adds no rank over the intersection the same bound
       appears, again a double circuit in the union;
    5. otherwise both sides raise the rank of the intersection and the
       union holds a double circuit only if the intersection does.

    Cases 2-5 presuppose zero sets of exactly d elements; smaller ones mean
    the matroid rank is not aligned with the cocircuit structure.
    """
    same_ground(m.ground, v1.zero_set.ground)
    same_ground(m.ground, v2.zero_set.ground)
    d = m.rank_full
    z1, z2 = v1.zero_set, v2.zero_set

    if len(z1) > d or len(z2) > d:
        dc = None
        for z in (z1, z2):
            if len(z) > d and not m.spans(z):
                dc = _first_double_circuit_within(m, z)
                if dc is None:
                    raise InternalInconsistency(
                        f"non-spanning {z} with more than {d} elements must contain a double circuit"
                    )
                break
        return PairClassification(v1, v2, TAG_DEGENERATE, dc)

    if len(z1) < d or len(z2) < d:
        raise RankMismatch(
            f"zero sets must have at least rank(M)={d} elements; got {len(z1)} and {len(z2)}"
        )

    if m.spans(z1) or m.spans(z2):
        return PairClassification(v1, v2, TAG_COMPLEMENT_SPANS, None)

    inter = z1 & z2
    union = z1 | z2
    if m.is_independent(inter):
        bound = m.rank(z1) + m.rank(z2) - len(inter)
        actual = int(m.ranks[union.mask])
        if actual > bound:
            raise InternalInconsistency("submodularity bound below the computed union rank")
        dc = _first_double_circuit_within(m, union)
        if dc is None:
            raise InternalInconsistency(f"union {union} must contain a double circuit")
        return PairClassification(v1, v2, TAG_INTERSECTION_INDEPENDENT, dc)

    rank_inter = int(m.ranks[inter.mask])
    stagnant1 = m.rank(z1) == rank_inter
    stagnant2 = m.rank(z2) == rank_inter
    if stagnant1 or stagnant2:
        dc = _first_double_circuit_within(m, union)
        if dc is None:
            raise InternalInconsistency(f"union {union} must contain a double circuit")
        return PairClassification(v1, v2, TAG_ONE_RANK_STAGNANT, dc)

    dc = _first_double_circuit_within(m, inter)
    return PairClassification(v1, v2, TAG_BOTH_RANK_INCREASE, dc)


def analyze_pairs(
    om: OrientedMatroid, m: Matroid, adjacent_only: bool = False
) -> list[tuple[int, int, PairClassification]]:
    """Classify every unordered pair of vertex views, in index order.

    True 1-skeleton adjacency would need the face lattice; the surrogate
    offered by ``adjacent_only`` keeps the pairs whose zero sets share
    exactly rank(M) - 1 elements.
    """
    same_ground(om.ground, m.ground)
    views = vertex_views(om)
    d = m.rank_full
    out = []
    for i in range(len(views)):
        for j in range(i + 1, len(views)):
            if adjacent_only and len(views[i].zero_set & views[j].zero_set) != d - 1:
                continue
            out.append((i, j, classify_pair(m, views[i], views[j])))
    return out


def render_analysis(results: list[tuple[int, int, PairClassification]]) -> str:
    lines = []
    for i, j, cls in results:
        dc = str(cls.double_circuit) if cls.double_circuit is not None else "none"
        lines.append(f"pair {{{i},{j}}}: {cls.tag} double_circuit={dc}")
    return "\n".join(lines)
