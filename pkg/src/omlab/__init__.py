"""omlab: exact verification of matroid / oriented-matroid statements about
colorful convex position, on desk-scale instances.
"""

from .ground import GroundSet, SignedSet, Subset
from .matroid import (
    Matroid,
    add_loops,
    double_circuits,
    dual_matroid,
    partition_matroid,
    validate_matroid,
)
from .oriented import (
    OrientedMatroid,
    add_coloops,
    contains_positive_circuit,
    dual_oriented_matroid,
    orthogonal,
    positive_circuits,
    positive_cocircuits,
    underlying_matroid,
    validate_oriented_matroid,
)
from .realization import (
    ColoredPointConfig,
    HullCertificate,
    build_holmsen_instance,
    hull_membership,
    lift_witness_to_colorful,
    om_from_points,
)
from .engine import (
    DualInstance,
    HolmsenInstance,
    WitnessReport,
    check_dual_hypothesis,
    check_hypothesis,
    claim1_equivalent,
    corank1_complements,
    dualize_instance,
    find_dual_witness,
    find_witness,
    reduce_rank,
)
from .vertices import (
    PairClassification,
    VertexView,
    classify_pair,
    complementary_pairs,
    contains_double_circuit,
    vertex_views,
)

__version__ = "0.1.0"

__all__ = [
    "GroundSet",
    "Subset",
    "SignedSet",
    "Matroid",
    "validate_matroid",
    "partition_matroid",
    "dual_matroid",
    "double_circuits",
    "add_loops",
    "OrientedMatroid",
    "validate_oriented_matroid",
    "underlying_matroid",
    "orthogonal",
    "dual_oriented_matroid",
    "positive_circuits",
    "positive_cocircuits",
    "contains_positive_circuit",
    "add_coloops",
    "ColoredPointConfig",
    "HullCertificate",
    "om_from_points",
    "hull_membership",
    "build_holmsen_instance",
    "lift_witness_to_colorful",
    "HolmsenInstance",
    "DualInstance",
    "WitnessReport",
    "corank1_complements",
    "check_hypothesis",
    "claim1_equivalent",
    "reduce_rank",
    "find_witness",
    "check_dual_hypothesis",
    "find_dual_witness",
    "dualize_instance",
    "VertexView",
    "PairClassification",
    "vertex_views",
    "complementary_pairs",
    "classify_pair",
    "contains_double_circuit",
    "__version__",
]
