"""
Explicit tensor-space realization of Weyl's construction for Sp_{2n} and O_{2n}.
"""
from src.lefhodge.weyl.construct import (
    DecompositionAudit,
    decomposition_audit,
    hodge_profile,
    predicted_vanishing,
    s_lambda_space,
    schur_image,
    traceless_subspace,
)
from src.lefhodge.weyl.standard_rep import StandardRep
from src.lefhodge.weyl.tensors import contraction_matrix, insertion_matrix

__all__ = [
    "DecompositionAudit",
    "StandardRep",
    "contraction_matrix",
    "decomposition_audit",
    "hodge_profile",
    "insertion_matrix",
    "predicted_vanishing",
    "s_lambda_space",
    "schur_image",
    "traceless_subspace",
]
