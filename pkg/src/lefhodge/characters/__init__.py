"""
Character-theoretic oracle: weights, λ-ring operations, Freudenthal multiplicities,
peeling decomposition and Hodge specialization.
"""
from src.lefhodge.characters.decompose import Decomposition, decompose
from src.lefhodge.characters.freudenthal import (
    dominant_rep,
    dominant_weight_for,
    folded_multiplicities,
    irr_character,
    positive_roots,
    rho,
    signed_orbit,
    weyl_dim,
)
from src.lefhodge.characters.lambda_ring import (
    direct_sum,
    product_character,
    std_character,
    sym,
    tensor,
    wedge,
)
from src.lefhodge.characters.weights import DominantWeight, Weight, WeightCharacter, hodge_specialize

__all__ = [
    "Decomposition",
    "DominantWeight",
    "Weight",
    "WeightCharacter",
    "decompose",
    "direct_sum",
    "dominant_rep",
    "dominant_weight_for",
    "folded_multiplicities",
    "hodge_specialize",
    "irr_character",
    "positive_roots",
    "product_character",
    "rho",
    "signed_orbit",
    "std_character",
    "sym",
    "tensor",
    "wedge",
    "weyl_dim",
]
