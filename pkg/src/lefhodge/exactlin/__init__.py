"""
Exact rational linear algebra: RatMatrix, SubspaceBasis and the operations on them.
"""
from src.lefhodge.exactlin.matrix import Rat, RatMatrix, rat
from src.lefhodge.exactlin.ops import (
    image_basis,
    inverse,
    is_idempotent,
    kernel_basis,
    rank,
    rref,
    row_space,
)
from src.lefhodge.exactlin.subspace import SubspaceBasis, intersect, subspace_sum

__all__ = [
    "Rat",
    "RatMatrix",
    "SubspaceBasis",
    "image_basis",
    "intersect",
    "inverse",
    "is_idempotent",
    "kernel_basis",
    "rank",
    "rat",
    "rref",
    "row_space",
    "subspace_sum",
]
