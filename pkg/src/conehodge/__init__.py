"""Exact Hodge-theoretic invariants of cones and determinantal varieties."""

from .hodge import (
    GradedMixedHodge,
    HodgeDiamond,
    PrimitiveDecomposition,
    PureHodgeStructure,
    kunneth_product,
    lefschetz_power_cokernel,
    lefschetz_power_kernel,
    primitive_decomposition,
    reconstruct_from_primitive,
    tate_twist,
    validate_diamond,
)
from .levels import INF, NEG, ExtendedLevel
from .cone import ConeSetup, invariant_report, local_cohomology_profile
from .lyubeznik import hodge_lyubeznik_table

__version__ = "0.1.0"

__all__ = [
    "ConeSetup",
    "ExtendedLevel",
    "GradedMixedHodge",
    "HodgeDiamond",
    "INF",
    "NEG",
    "PrimitiveDecomposition",
    "PureHodgeStructure",
    "hodge_lyubeznik_table",
    "invariant_report",
    "kunneth_product",
    "lefschetz_power_cokernel",
    "lefschetz_power_kernel",
    "local_cohomology_profile",
    "primitive_decomposition",
    "reconstruct_from_primitive",
    "tate_twist",
    "validate_diamond",
]
