"""Circuit-axiom validation, rank, duality, double circuits, constructions.

Expected values marked by hand or oracle were computed from the definitions
(subset scans in oracles.py); the greedy/table rank pair is cross-checked
on every enumerated matroid with up to five elements.
"""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from omlab.errors import AxiomViolation, InternalInconsistency, PartitionInvalid
from omlab.ground import GroundSet, Subset
from omlab.matroid import (
    add_loops,
    double_circuits,
    dual_matroid,
    partition_matroid,
    popcounts,
    restrict_matroid,
    validate_matroid,
)


def masks_of(m):
    return [c.mask for c in m.circuits]


# validation


def test_validate_u24(named_matroids):
    u24 = named_matroids["u24"]
    assert len(u24.circuits) == 4
    assert u24.rank_full == 2


def test_validate_m1_violation():
    g = GroundSet("a")
    with pytest.raises(AxiomViolation) as exc:
        validate_matroid(g, [g.subset()])
    assert exc.value.axiom == "M1"


def test_validate_m2_violation():
    g = GroundSet("abc")
    with pytest.raises(AxiomViolation) as exc:
        validate_matroid(g, [g.subset("ab"), g.subset("abc")])
    assert exc.value.axiom == "M2"


def test_validate_m3_violation():
    # {a,b} and {b,c} share b but no circuit sits inside {a,c}
    g = GroundSet("abc")
    with pytest.raises(AxiomViolation) as exc:
        validate_matroid(g, [g.subset("ab"), g.subset("bc")])
    assert exc.value.axiom == "M3"


def test_duplicate_circuits_collapse():
    g = GroundSet("abc")
    m = validate_matroid(g, [g.subset("ab"), g.subset("ab")])
    assert len(m.circuits) == 1


# rank / independence


def test_rank_examples(named_matroids):
    u24 = named_matroids["u24"]
    g = u24.ground
    assert u24.rank(g.full_set()) == 2
    assert u24.rank(g.empty()) == 0
    single = named_matroids["single_circuit3"]
    assert single.rank(single.ground.full_set()) == 2


def test_independence_examples(named_matroids):
    u24 = named_matroids["u24"]
    g = u24.ground
    assert u24.is_independent(g.subset("ab"))
    assert not u24.is_independent(g.subset("abc"))
    assert u24.is_independent(g.empty())


def test_independence_iff_rank_equals_size(named_matroids):
    for m in named_matroids.values():
        for mask in range(1 << m.ground.n):
            x = Subset(m.ground, mask)
            assert m.is_independent(x) == (m.rank(x) == len(x))


def test_spans_examples(named_matroids):
    u24 = named_matroids["u24"]
    assert u24.spans(u24.ground.subset("ab"))
    pm = named_matroids["partition22"]
    assert not pm.spans(pm.ground.subset("ab"))
    assert pm.spans(pm.ground.full_set())


# duality


def test_dual_single_circuit():
    g = GroundSet("abc")
    m = validate_matroid(g, [g.subset("abc")])
    d = dual_matroid(m)
    assert sorted(str(c) for c in d.circuits) == ["{a,b}", "{a,c}", "{b,c}"]


def test_dual_u24_self_dual(named_matroids):
    u24 = named_matroids["u24"]
    assert dual_matroid(u24) == u24


def test_dual_free_is_all_loops(named_matroids):
    d = dual_matroid(named_matroids["free2"])
    assert [str(c) for c in d.circuits] == ["{a}", "{b}"]
    assert d.rank_full == 0


def test_dual_matches_bruteforce(named_matroids):
    for m in named_matroids.values():
        expected = sorted(oracles.o_dual_circuits(masks_of(m), m.ground.n))
        assert sorted(masks_of(dual_matroid(m))) == expected


# double circuits


def test_double_circuits_examples(named_matroids):
    u24 = named_matroids["u24"]
    assert [str(d) for d in double_circuits(u24)] == ["{a,b,c,d}"]
    pm = named_matroids["partition22"]
    assert [str(d) for d in double_circuits(pm)] == ["{a,b,c,d}"]
    assert double_circuits(named_matroids["free2"]) == []


def test_double_circuits_match_bruteforce(named_matroids):
    for m in named_matroids.values():
        expected = sorted(oracles.o_double_circuits(masks_of(m), m.ground.n))
        assert sorted(d.mask for d in double_circuits(m)) == expected


# partition matroids


def test_partition_examples():
    g = GroundSet("abcd")
    pm = partition_matroid(g, [g.subset("ab"), g.subset("cd")])
    assert [str(c) for c in pm.circuits] == ["{a,b}", "{c,d}"]
    assert pm.rank_full == 2

    singles = partition_matroid(g, [g.subset(l) for l in "abcd"])
    assert singles.circuits == ()
    assert singles.rank_full == 4

    g3 = GroundSet("abc")
    u13 = partition_matroid(g3, [g3.subset("abc")])
    assert sorted(str(c) for c in u13.circuits) == ["{a,b}", "{a,c}", "{b,c}"]
    assert u13.rank_full == 1


def test_partition_invalid():
    g = GroundSet("abcd")
    with pytest.raises(PartitionInvalid):
        partition_matroid(g, [g.subset("ab"), g.subset("bc")])
    with pytest.raises(PartitionInvalid):
        partition_matroid(g, [g.subset("ab")])


# loops and restriction


def test_add_loops_examples(named_matroids):
    u24 = named_matroids["u24"]
    m = add_loops(u24, ["e"])
    assert m.rank_full == 2
    assert m.ground.subset("e").mask in [c.mask for c in m.circuits]

    free1 = validate_matroid(GroundSet("a"), [])
    loops = add_loops(free1, ["e"])
    assert [str(c) for c in loops.circuits] == ["{e}"]
    assert loops.rank_full == 1

    pm = named_matroids["partition22"]
    extended = add_loops(pm, ["e", "f"])
    assert extended.rank_full == 2


def test_restrict_matroid(named_matroids):
    u24 = named_matroids["u24"]
    sub = restrict_matroid(u24, u24.ground.subset("abc"))
    assert sub.ground.labels == ("a", "b", "c")
    assert sub.circuits == (sub.ground.subset("abc"),)


# exhaustive properties over all small matroids


@pytest.fixture(scope="module")
def matroids_up_to_5():
    out = []
    for n in range(1, 6):
        g = GroundSet("abcde"[:n])
        for fam in oracles.all_matroids(n):
            out.append(validate_matroid(g, [Subset(g, m) for m in fam]))
    return out


def test_validator_agrees_with_bruteforce_axioms():
    for n in range(1, 5):
        g = GroundSet("abcd"[:n])
        for fam in oracles.circuit_families(n):
            brute = oracles.o_is_matroid(fam, n)
            try:
                validate_matroid(g, [Subset(g, m) for m in fam])
                ours = True
            except AxiomViolation:
                ours = False
            assert ours == brute, f"disagreement on {fam}"


def test_greedy_rank_equals_table_and_bruteforce(matroids_up_to_5):
    for m in matroids_up_to_5:
        fam = masks_of(m)
        for mask in range(1 << m.ground.n):
            x = Subset(m.ground, mask)
            greedy = m.rank(x)
            assert greedy == int(m.ranks[mask])
            assert greedy == oracles.o_rank(fam, mask)


def test_rank_oracle_monotone_and_bounded(matroids_up_to_5):
    for m in matroids_up_to_5:
        n = m.ground.n
        idx = np.arange(1 << n)
        ranks = m.ranks.astype(np.int16)
        assert ranks[0] == 0
        assert bool((ranks <= popcounts(n).astype(np.int16)).all())
        for b in range(n):
            bit = 1 << b
            lower = idx[(idx & bit) == 0]
            assert bool((ranks[lower] <= ranks[lower | bit]).all())


def test_dual_involution_all_small_matroids(matroids_up_to_5):
    for m in matroids_up_to_5:
        assert dual_matroid(dual_matroid(m)) == m


def test_rank_formula_all_small_matroids(matroids_up_to_5):
    for m in matroids_up_to_5:
        n = m.ground.n
        d = dual_matroid(m)
        idx = np.arange(1 << n)
        pc = popcounts(n).astype(np.int16)
        lhs = d.ranks.astype(np.int16)
        rhs = pc + m.ranks[idx ^ m.ground.full_mask].astype(np.int16) - m.rank_full
        assert np.array_equal(lhs, rhs)


def test_double_circuit_rank_criterion_all_small_matroids(matroids_up_to_5):
    for m in matroids_up_to_5:
        fam = masks_of(m)
        dcs = oracles.o_double_circuits(fam, m.ground.n)
        for mask in range(1 << m.ground.n):
            has_dc = any(d & ~mask == 0 for d in dcs)
            criterion = oracles.o_rank(fam, mask) <= mask.bit_count() - 2
            assert has_dc == criterion


def test_rank_submodularity_exhaustive_all_pairs(matroids_up_to_5):
    for m in matroids_up_to_5:
        n = m.ground.n
        idx = np.arange(1 << n)
        ranks = m.ranks.astype(np.int16)
        union = idx[:, None] | idx[None, :]
        inter = idx[:, None] & idx[None, :]
        lhs = ranks[union] + ranks[inter]
        rhs = ranks[:, None].astype(np.int16) + ranks[None, :].astype(np.int16)
        assert bool((lhs <= rhs).all())


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_rank_submodularity(named_matroids, data):
    m = data.draw(st.sampled_from(sorted(named_matroids)))
    m = named_matroids[m]
    full = m.ground.full_mask
    a = Subset(m.ground, data.draw(st.integers(0, full)))
    b = Subset(m.ground, data.draw(st.integers(0, full)))
    assert m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b)


def test_matroid_equality_is_structural(named_matroids):
    u24 = named_matroids["u24"]
    g = GroundSet("abcd")
    again = validate_matroid(g, [g.subset(c) for c in combinations("abcd", 3)])
    assert again == u24
    assert again is not u24
