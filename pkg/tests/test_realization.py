"""Point configurations, their oriented matroids, and hull membership.

The central cross-check: for every subset of a configuration, the exact
hull-membership oracle and the positive-circuit structure must agree. The
oracle side is verified independently against Cramer-rule membership from
oracles.py.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from omlab.errors import AnchorInSet, HypothesisUnmet, WitnessNotTransversal
from omlab.ground import Subset
from omlab.oriented import positive_circuits
from omlab.realization import (
    ColoredPointConfig,
    HullCertificate,
    build_holmsen_instance,
    feasible_support_masks,
    hull_membership,
    hull_table,
    lift_witness_to_colorful,
    om_from_points,
)


@pytest.fixture(scope="module")
def line4_om(line4_config):
    return om_from_points(line4_config)


def test_line4_circuits_frozen(line4_om):
    reps = [str(r) for r in line4_om.representatives()]
    assert reps == ["(+a +b)", "(+a -c)", "(+a +d)", "(+b +c)", "(+b -d)", "(+c +d)"]
    assert line4_om.rank() == 1


def test_antipodal_pair_single_positive_circuit():
    cfg = ColoredPointConfig.uncolored(1, {"p": [1], "q": [-1]}, [0])
    om = om_from_points(cfg)
    assert [str(r) for r in om.representatives()] == ["(+p +q)"]
    assert [str(p) for p in positive_circuits(om)] == ["{p,q}"]


def test_triangle_positive_circuit_equal_coefficients():
    cfg = ColoredPointConfig.uncolored(
        2, {"a": [1, 0], "b": [0, 1], "c": [-1, -1]}, [0, 0]
    )
    om = om_from_points(cfg)
    assert [str(r) for r in om.representatives()] == ["(+a +b +c)"]
    cert = hull_membership(cfg.points, "abc", cfg.anchor)
    assert cert.coefficients == {
        "a": Fraction(1, 3),
        "b": Fraction(1, 3),
        "c": Fraction(1, 3),
    }


def test_duplicate_points_give_mixed_pair():
    cfg = ColoredPointConfig.uncolored(1, {"p": [3], "q": [3]}, [0])
    om = om_from_points(cfg)
    assert [str(r) for r in om.representatives()] == ["(+p -q)"]


def test_anchor_in_set_rejected():
    with pytest.raises(AnchorInSet):
        ColoredPointConfig.uncolored(1, {"p": [0]}, [0])


def test_om_rank_matches_minor_rank(line4_config):
    cfg2 = ColoredPointConfig.uncolored(
        2, {"a": [1, 0], "b": [2, 0], "c": [0, 1], "d": [1, 1]}, [0, 0]
    )
    for cfg in (line4_config, cfg2):
        om = om_from_points(cfg)
        assert om.rank() == oracles.vector_rank(cfg.differences().values())


# hull membership


def test_hull_line4_examples(line4_config):
    pts, x = line4_config.points, line4_config.anchor
    cert = hull_membership(pts, ["a", "d"], x)
    assert cert.support == ("a", "d")
    assert cert.coefficients == {"a": Fraction(1, 2), "d": Fraction(1, 2)}
    assert cert.verify(pts, x)
    assert hull_membership(pts, ["a", "c"], x) is None
    assert hull_membership(pts, [], x) is None


def test_hull_point_equal_to_anchor():
    pts = {"p": (Fraction(2), Fraction(3))}
    cert = hull_membership(pts, ["p"], (Fraction(2), Fraction(3)))
    assert cert.coefficients == {"p": Fraction(1)}


def test_certificate_verify_rejects_bad_data(line4_config):
    pts, x = line4_config.points, line4_config.anchor
    bad = HullCertificate(("a", "d"), {"a": Fraction(1, 3), "d": Fraction(2, 3)})
    assert not bad.verify(pts, x)  # sums to 1 but reconstructs 1/3 != 0
    neg = HullCertificate(("a", "d"), {"a": Fraction(3, 2), "d": Fraction(-1, 2)})
    assert not neg.verify(pts, x)


def small_configs():
    coords = st.integers(-3, 3)
    return st.integers(1, 2).flatmap(
        lambda d: st.lists(
            st.tuples(*([coords] * d)).filter(lambda p: any(c != 0 for c in p)),
            min_size=1,
            max_size=5,
        ).map(
            lambda pts: ColoredPointConfig.uncolored(
                d, {f"p{i}": list(p) for i, p in enumerate(pts)}, [0] * d
            )
        )
    )


@given(small_configs())
@settings(max_examples=60, deadline=None)
def test_observation_equivalence_against_cramer_oracle(cfg):
    om = om_from_points(cfg)
    table = hull_table(cfg)
    closure = om.positive_closure
    labels = list(cfg.points)
    for mask in range(1 << len(labels)):
        chosen = [cfg.points[labels[i]] for i in range(len(labels)) if mask >> i & 1]
        expected = oracles.conv_contains(chosen, cfg.anchor)
        assert bool(table[mask]) == expected
        assert bool(closure[mask]) == expected


@given(small_configs(), st.integers(0, 1 << 5))
@settings(max_examples=60, deadline=None)
def test_hull_membership_agrees_with_table(cfg, raw_mask):
    mask = raw_mask & ((1 << len(cfg.points)) - 1)
    labels = [lab for i, lab in enumerate(cfg.points) if mask >> i & 1]
    cert = hull_membership(cfg.points, labels, cfg.anchor)
    assert (cert is not None) == bool(hull_table(cfg)[mask])
    if cert is not None:
        assert cert.verify(cfg.points, cfg.anchor)
        assert set(cert.support) <= set(labels)


def test_feasible_supports_are_within_size_bound(line4_config):
    for mask in feasible_support_masks(line4_config):
        assert mask.bit_count() <= line4_config.dim + 1


# instance building


def test_build_line4_instance(line4_config):
    om, m = build_holmsen_instance(line4_config)
    assert om.rank() == 1
    assert m.rank_full == 2
    assert [str(c) for c in m.circuits] == ["{a,b}", "{c,d}"]


def test_build_rejects_color_missing_anchor():
    cfg = ColoredPointConfig.colored(
        1, {"a": [-1], "b": [2], "c": [1], "d": [3]}, [0], {"a": 0, "b": 0, "c": 1, "d": 1}
    )
    with pytest.raises(HypothesisUnmet):
        build_holmsen_instance(cfg)  # color 1 lies entirely right of the anchor


def test_build_requires_colors(line4_config):
    cfg = ColoredPointConfig.uncolored(1, {"a": [-1], "b": [1]}, [0])
    with pytest.raises(ValueError):
        build_holmsen_instance(cfg)


def test_triangle_instance_d2():
    cfg = ColoredPointConfig.colored(
        2,
        {
            "a1": [1, 0],
            "a2": [-1, 0],
            "b1": [0, 1],
            "b2": [0, -1],
            "c1": [2, 2],
            "c2": [-2, -2],
        },
        [0, 0],
        {"a1": 0, "a2": 0, "b1": 1, "b2": 1, "c1": 2, "c2": 2},
    )
    om, m = build_holmsen_instance(cfg)
    assert om.rank() == 2
    assert m.rank_full == 3


# lifting


def test_lift_examples(line4_config):
    ground = line4_config.ground()
    assert str(lift_witness_to_colorful(ground.subset("ad"), line4_config)) == "{a,d}"
    assert str(lift_witness_to_colorful(ground.subset(""), line4_config)) == "{a,c}"
    assert str(lift_witness_to_colorful(ground.subset("d"), line4_config)) == "{a,d}"
    with pytest.raises(WitnessNotTransversal):
        lift_witness_to_colorful(ground.subset("ab"), line4_config)


def test_lift_fills_each_missing_color():
    cfg = ColoredPointConfig.colored(
        2,
        {
            "a1": [1, 0],
            "a2": [-1, 0],
            "b1": [0, 1],
            "b2": [0, -1],
            "c1": [2, 2],
            "c2": [-2, -2],
        },
        [0, 0],
        {"a1": 0, "a2": 0, "b1": 1, "b2": 1, "c1": 2, "c2": 2},
    )
    ground = cfg.ground()
    lifted = lift_witness_to_colorful(ground.subset(["b2"]), cfg)
    assert str(lifted) == "{a1,b2,c1}"
