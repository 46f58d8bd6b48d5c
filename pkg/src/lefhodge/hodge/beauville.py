"""
Beauville eigenvalue exponents of multiplication-by-n on Chow groups of an abelian variety.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from src.lefhodge.errors import InvalidInputError


@dataclass(frozen=True)
class BeauvilleWeight:
    i: int
    j: int
    g: int
    motive_degree: int
    pullback_exp: int
    pushforward_exp: int

    def to_dict(self) -> dict:
        return asdict(self)


def beauville_weight(i: int, j: int, g: int) -> BeauvilleWeight:
    """CH^i(A)_(j) lies in h^{i-2j}(A): [n]^* acts by n^{i-2j}, [n]_* on that piece by n^{2g-(i-2j)}."""
    if g < 0 or i < 0:
        raise InvalidInputError(f"need g >= 0 and i >= 0, got g={g}, i={i}", rule="beauville-range")
    k = i - 2 * j
    return BeauvilleWeight(i=i, j=j, g=g, motive_degree=k, pullback_exp=k, pushforward_exp=2 * g - k)
