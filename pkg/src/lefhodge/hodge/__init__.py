"""
Hodge-theoretic data of abelian varieties: bigraded tables, plethysm,
primitive filtration, Kleiman projectors, Beauville weights, Molien series.
"""
from src.lefhodge.hodge.beauville import BeauvilleWeight, beauville_weight
from src.lefhodge.hodge.bigraded import (
    BigradedDims,
    abelian_hodge,
    coniveau_in_degree,
    format_level,
    kunneth,
    kunneth_power,
    level,
)
from src.lefhodge.hodge.kleiman import (
    ProjectorFamily,
    chow_kunneth_projector,
    hodge_riemann_pairing,
    intersection_pairing,
    kleiman_projectors,
    lefschetz_involution,
    orthogonal_projector,
    primitive_subspace,
)
from src.lefhodge.hodge.molien import MolienSeries, molien_holomorphic_invariants
from src.lefhodge.hodge.plethysm import (
    first_vanishing_power,
    skew_vanishing,
    super_ext,
    super_sym,
    sym_vanishing_check,
    vanishing_threshold,
)
from src.lefhodge.hodge.primitive import primitive_dim, primitive_filtration_dims, primitive_filtration_table

__all__ = [
    "BeauvilleWeight",
    "BigradedDims",
    "MolienSeries",
    "ProjectorFamily",
    "abelian_hodge",
    "beauville_weight",
    "chow_kunneth_projector",
    "coniveau_in_degree",
    "first_vanishing_power",
    "format_level",
    "hodge_riemann_pairing",
    "intersection_pairing",
    "kleiman_projectors",
    "kunneth",
    "kunneth_power",
    "lefschetz_involution",
    "level",
    "molien_holomorphic_invariants",
    "orthogonal_projector",
    "primitive_dim",
    "primitive_filtration_dims",
    "primitive_filtration_table",
    "primitive_subspace",
    "skew_vanishing",
    "super_ext",
    "super_sym",
    "sym_vanishing_check",
    "vanishing_threshold",
]
