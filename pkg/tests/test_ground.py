import pytest
from hypothesis import given, strategies as st

from omlab.errors import GroundMismatch, GroundTooLarge, LabelCollision
from omlab.ground import GroundSet, SignedSet, Subset, sort_signed, sort_subsets

LABELS = "abcdef"


def labels_subsets():
    return st.sets(st.sampled_from(list(LABELS)))


def test_ground_basics():
    g = GroundSet("abcd")
    assert g.n == 4
    assert g.labels == ("a", "b", "c", "d")
    assert g.index("c") == 2
    assert g.full_mask == 0b1111


def test_ground_rejects_bad_input():
    with pytest.raises(ValueError):
        GroundSet([])
    with pytest.raises(ValueError):
        GroundSet(["a", "a"])
    with pytest.raises(ValueError):
        GroundSet(["a b"])
    with pytest.raises(GroundTooLarge):
        GroundSet([f"e{i}" for i in range(17)])


def test_extended_appends_and_detects_collision():
    g = GroundSet("ab")
    g2 = g.extended(["c"])
    assert g2.labels == ("a", "b", "c")
    with pytest.raises(LabelCollision):
        g.extended(["a"])


def test_subset_printing_and_order():
    g = GroundSet("abcd")
    s = g.subset("da")
    assert str(s) == "{a,d}"
    assert list(s) == ["a", "d"]
    assert len(s) == 2
    assert "a" in s and "b" not in s


def test_lexicographic_family_order():
    g = GroundSet("abcd")
    fam = [g.subset(x) for x in ("bc", "ad", "ab", "a")]
    assert [str(s) for s in sort_subsets(fam)] == ["{a}", "{a,b}", "{a,d}", "{b,c}"]


def test_subset_ops_require_same_ground():
    a = GroundSet("ab").subset("a")
    b = GroundSet("ba").subset("a")
    with pytest.raises(GroundMismatch):
        a | b


@given(labels_subsets(), labels_subsets())
def test_subset_ops_mirror_python_sets(xs, ys):
    g = GroundSet(LABELS)
    sx, sy = g.subset(xs), g.subset(ys)
    assert set(sx | sy) == xs | ys
    assert set(sx & sy) == xs & ys
    assert set(sx - sy) == xs - ys
    assert set(sx.complement()) == set(LABELS) - xs
    assert sx.issubset(sy) == xs.issubset(ys)


@given(labels_subsets(), labels_subsets())
def test_subset_sort_key_is_lex_on_sorted_labels(xs, ys):
    g = GroundSet(LABELS)
    sx, sy = g.subset(xs), g.subset(ys)
    assert (sx.sort_key() < sy.sort_key()) == (tuple(sorted(xs)) < tuple(sorted(ys)))


def test_signed_set_invariants():
    g = GroundSet("abc")
    x = SignedSet.from_labels(g, "ab", "c")
    assert str(x) == "(+a +b -c)"
    assert str(-x) == "(-a -b +c)"
    assert x.support().labels() == ("a", "b", "c")
    with pytest.raises(ValueError):
        SignedSet.from_labels(g, "a", "a")


def test_signed_canonical_prefers_positive_first_element():
    g = GroundSet("abc")
    x = SignedSet.from_labels(g, "c", "a")  # (-a, +c)
    assert x.canonical() == -x
    assert (-x).canonical() == -x


def test_sort_signed_orders_by_support_then_signs():
    g = GroundSet("abc")
    fam = [
        SignedSet.from_labels(g, "b", "a"),
        SignedSet.from_labels(g, "ab", ""),
        SignedSet.from_labels(g, "a", "c"),
    ]
    ordered = sort_signed(fam)
    assert [str(s) for s in ordered] == ["(+a +b)", "(-a +b)", "(+a -c)"]
