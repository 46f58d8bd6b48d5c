"""
Dimensions of the primitive filtration P^n H^k = ⊕_{r≥n} L^r H^{k-2r}_prim of an abelian variety.
"""
from __future__ import annotations

from math import comb
from typing import Dict

from src.lefhodge.errors import InvalidInputError


def _binom(n: int, k: int) -> int:
    return comb(n, k) if k >= 0 else 0


def primitive_dim(g: int, j: int) -> int:
    """dim H^j_prim = C(2g, j) - C(2g, j-2) for 0 <= j <= g.

    L^r H^j_prim is nonzero only for r <= g - j.
    """
    if not (0 <= j <= g):
        return 0
    return _binom(2 * g, j) - _binom(2 * g, j - 2)


def primitive_filtration_dims(g: int, k: int, n: int) -> int:
    if g < 0 or not (0 <= k <= 2 * g):
        raise InvalidInputError(f"need 0 <= k <= 2g, got g={g}, k={k}", rule="degree-range")
    return sum(primitive_dim(g, k - 2 * r) for r in range(max(n, 0), k // 2 + 1) if k - r <= g)


def primitive_filtration_table(g: int, k: int) -> Dict[int, int]:
    """n -> dim P^n H^k for every n with a nonzero step, plus n = 0."""
    return {n: primitive_filtration_dims(g, k, n) for n in range(0, k // 2 + 1)}
