"""
Complex Lefschetz group of an abelian variety, read off its Albert descriptor.

Each simple factor contributes one classical group per complex embedding of
its totally real field, acting on H^1(A) ⊗ C through copies of the standard
representation (and, for type IV, of its contragredient).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from src.lefhodge.data.schema import FormKind
from src.lefhodge.lefschetz.albert import AbelianDescriptor, AbelianFactor, AlbertType, require_valid

logger = logging.getLogger(__name__)


class GroupKind(str, Enum):
    SP = "Sp"
    O = "O"
    GL = "GL"

    @property
    def form_kind(self) -> Optional[FormKind]:
        return {GroupKind.SP: FormKind.SYMPLECTIC, GroupKind.O: FormKind.ORTHOGONAL}.get(self)


@dataclass(frozen=True)
class GroupBlock:
    """One simple group of the product, on one embedding σ of one factor."""

    factor: str
    embedding: int
    kind: GroupKind
    matrix_size: int
    copies: int
    dual_copies: int = 0

    @property
    def rank(self) -> int:
        """n of Sp_{2n} / O_{2n}; for GL the matrix size."""
        return self.matrix_size if self.kind is GroupKind.GL else self.matrix_size // 2

    @property
    def name(self) -> str:
        return f"{self.kind.value}_{self.matrix_size}"

    @property
    def h1_dim(self) -> int:
        return (self.copies + self.dual_copies) * self.matrix_size

    def to_dict(self) -> dict:
        return {
            "factor": self.factor,
            "embedding": self.embedding,
            "group": self.name,
            "copies": self.copies,
            "dual_copies": self.dual_copies,
        }


@dataclass(frozen=True)
class LefschetzGroupData:
    blocks: Tuple[GroupBlock, ...]
    abelian_dimension: int

    @property
    def h1_dim(self) -> int:
        return sum(b.h1_dim for b in self.blocks)

    def to_dict(self) -> dict:
        return {
            "abelian_dimension": self.abelian_dimension,
            "h1_dimension": self.h1_dim,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def _factor_blocks(fac: AbelianFactor, label: str) -> List[GroupBlock]:
    t, f, d, g, m = fac.albert_type, fac.f, fac.d, fac.g, fac.m
    if t is AlbertType.I:
        kind, size, copies, dual = GroupKind.SP, 2 * g // f, m, 0
    elif t is AlbertType.II:
        kind, size, copies, dual = GroupKind.SP, g // f, 2 * m, 0
    elif t is AlbertType.III:
        kind, size, copies, dual = GroupKind.O, g // f, 2 * m, 0
    else:
        kind, size, copies, dual = GroupKind.GL, g // (d * f), d * m, d * m
    return [GroupBlock(label, sigma, kind, size, copies, dual) for sigma in range(1, f + 1)]


def lefschetz_group(desc: AbelianDescriptor) -> LefschetzGroupData:
    require_valid(desc)
    blocks: List[GroupBlock] = []
    for fac, label in zip(desc.factors, desc.labels()):
        blocks.extend(_factor_blocks(fac, label))
    data = LefschetzGroupData(tuple(blocks), desc.total_dimension)
    if data.h1_dim != 2 * desc.total_dimension:
        raise ArithmeticError(f"blocks act on {data.h1_dim} dims, expected {2 * desc.total_dimension}")
    logger.info("Lefschetz group: %s", " x ".join(f"{b.name}[{b.copies}]" for b in blocks))
    return data
