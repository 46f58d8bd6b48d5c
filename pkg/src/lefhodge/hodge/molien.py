"""
Molien series for the holomorphic forms on A^{n+1}_0 / S_{n+1}.

H^{k,0} of the sum-zero fiber is ∧^k(std ⊗ C^g), std the n-dimensional
standard representation. Averaging det(1 + t·σ) over conjugacy classes
gives the invariant dimensions.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, Tuple

import sympy as sp

from src.lefhodge.combinat.partitions import conjugacy_class_size, enumerate_partitions
from src.lefhodge.config import DEFAULT_SETTINGS, EngineSettings
from src.lefhodge.errors import InvalidInputError, guard

logger = logging.getLogger(__name__)

t = sp.symbols("t")


@dataclass(frozen=True)
class MolienSeries:
    g: int
    n: int
    coeffs: Tuple[int, ...]

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def odd_coefficients_vanish(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) or "0"

    def to_dict(self) -> Dict[str, object]:
        return {"g": self.g, "n": self.n, "coefficients": list(self.coeffs), "polynomial": str(self)}


def _class_factor(cycle_type: Tuple[int, ...], g: int) -> sp.Poly:
    perm = sp.Poly(1, t)
    for length in cycle_type:
        perm = perm * sp.Poly(1 - (-t) ** length, t)
    std, rem = sp.div(perm, sp.Poly(1 + t, t))
    if not rem.is_zero:
        raise ArithmeticError(f"permutation determinant for {cycle_type} not divisible by 1 + t")
    return std ** g


def molien_holomorphic_invariants(g: int, n: int, *,
                                  settings: EngineSettings = DEFAULT_SETTINGS) -> MolienSeries:
    if g < 1 or n < 1:
        raise InvalidInputError(f"need g >= 1 and n >= 1, got g={g}, n={n}", rule="molien-range")
    order = factorial(n + 1)
    guard(order, settings.max_molien_group_order, "group order (n+1)!")
    total = sp.Poly(0, t)
    for mu in enumerate_partitions(n + 1):
        total = total + _class_factor(mu.parts, g) * conjugacy_class_size(mu)
    coeffs = []
    for c in reversed(total.all_coeffs()):
        value = sp.Rational(c, order)
        if value.q != 1:
            raise ArithmeticError(f"non-integral invariant dimension {value}")
        coeffs.append(int(value))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    series = MolienSeries(g, n, tuple(coeffs))
    logger.info("molien g=%d n=%d: %s", g, n, series)
    return series
