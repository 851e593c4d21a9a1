"""Shared fixtures: the line fixture, named small matroids, and the seeded
instance corpora the acceptance suite runs on."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from omlab.engine import DualInstance, HolmsenInstance
from omlab.generator import GeneratorParams, gen_random
from omlab.ground import GroundSet
from omlab.matroid import dual_matroid, partition_matroid, validate_matroid
from omlab.oriented import dual_oriented_matroid
from omlab.realization import ColoredPointConfig, build_holmsen_instance

DATA = Path(__file__).parent / "data"

N_STANDARD = 200
N_GAP = 50


@pytest.fixture(scope="session")
def line4_config() -> ColoredPointConfig:
    """Four points on a line around the origin; two colors."""
    return ColoredPointConfig.colored(
        1,
        {"a": [-1], "b": [2], "c": [-2], "d": [1]},
        [0],
        {"a": 0, "b": 0, "c": 1, "d": 1},
    )


@pytest.fixture(scope="session")
def line4_instance(line4_config) -> HolmsenInstance:
    om, m = build_holmsen_instance(line4_config)
    return HolmsenInstance(om, m)


@pytest.fixture(scope="session")
def named_matroids() -> dict:
    g4 = GroundSet("abcd")
    g3 = GroundSet("abc")
    g2 = GroundSet("ab")
    return {
        "u24": validate_matroid(g4, [g4.subset(c) for c in combinations("abcd", 3)]),
        "u13": validate_matroid(g3, [g3.subset(c) for c in combinations("abc", 2)]),
        "single_circuit3": validate_matroid(g3, [g3.subset("abc")]),
        "free2": validate_matroid(g2, []),
        "loops2": validate_matroid(g2, [g2.subset("a"), g2.subset("b")]),
        "partition22": partition_matroid(g4, [g4.subset("ab"), g4.subset("cd")]),
        "partition13": partition_matroid(g4, [g4.subset("abc"), g4.subset("d")]),
    }


def standard_params(i: int) -> GeneratorParams:
    d = (i % 3) + 1
    ppc = (2, 3) if d == 3 else (2, 4)
    return GeneratorParams(seed=1000 + i, dim=d, points_per_color=ppc)


def gap_params(i: int) -> GeneratorParams:
    d, f, ppc = [(2, 1, (2, 4)), (3, 2, (2, 3)), (3, 1, (2, 3))][i % 3]
    return GeneratorParams(seed=5000 + i, dim=d, points_per_color=ppc, flat_dim=f)


@pytest.fixture(scope="session")
def standard_configs() -> list[ColoredPointConfig]:
    return [gen_random(standard_params(i)).config for i in range(N_STANDARD)]


@pytest.fixture(scope="session")
def standard_instances(standard_configs) -> list[tuple[ColoredPointConfig, HolmsenInstance]]:
    out = []
    for cfg in standard_configs:
        om, m = build_holmsen_instance(cfg)
        out.append((cfg, HolmsenInstance(om, m)))
    return out


@pytest.fixture(scope="session")
def gap_instances() -> list[tuple[ColoredPointConfig, HolmsenInstance]]:
    """Instances whose matroid rank exceeds the oriented matroid rank by >= 2."""
    out = []
    i = 0
    while len(out) < N_GAP:
        cfg = gen_random(gap_params(i)).config
        i += 1
        om, m = build_holmsen_instance(cfg)
        inst = HolmsenInstance(om, m)
        if m.rank_full >= om.rank() + 2:
            out.append((cfg, inst))
    return out


@pytest.fixture(scope="session")
def dual_instance_pairs(standard_instances) -> list[tuple[HolmsenInstance, DualInstance]]:
    """100 dual-form instances built by dualizing exact-gap primal ones."""
    out = []
    for _, inst in standard_instances:
        if len(out) == 100:
            break
        if inst.matroid.rank_full != inst.om.rank() + 1:
            continue
        dual = DualInstance(dual_matroid(inst.matroid), dual_oriented_matroid(inst.om))
        out.append((inst, dual))
    assert len(out) == 100, "not enough exact-gap instances in the standard corpus"
    return out


@pytest.fixture(scope="session")
def corpus_matroids(standard_instances, named_matroids) -> list:
    """Matroids with at most 7 elements drawn from the corpus, their duals,
    and the named families."""
    pool = list(named_matroids.values())
    for _, inst in standard_instances:
        if inst.ground.n <= 7:
            pool.append(inst.matroid)
            pool.append(inst.om.underlying)
    pool.extend([dual_matroid(m) for m in pool])
    seen = {}
    for m in pool:
        seen[(m.ground.labels, tuple(c.mask for c in m.circuits))] = m
    return list(seen.values())
