"""
λ-ring operations on weight characters: tensor, exterior and symmetric powers.

Exterior and symmetric powers expand Π_w (1 + t·x^w)^{m_w} and
Π_w (1 - t·x^w)^{-m_w} one distinct weight at a time, truncated at t^k.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Callable, Dict, Tuple

from src.lefhodge.characters.weights import Weight, WeightCharacter
from src.lefhodge.data.schema import FormKind
from src.lefhodge.errors import InvalidInputError, OrthogonalRankError

logger = logging.getLogger(__name__)


def std_character(kind: FormKind, n: int) -> WeightCharacter:
    """{±ε_i}, each with multiplicity one."""
    kind = FormKind.parse(kind)
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got {n}", rule="rank")
    if kind is FormKind.ORTHOGONAL and n == 1:
        raise OrthogonalRankError("O_2 is excluded: orthogonal rank must exceed 1")
    weights = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        weights.append(tuple(e))
        e[i] = -1
        weights.append(tuple(e))
    return WeightCharacter.from_weights(n, weights)


def _add(a: Weight, b: Weight, k: int = 1) -> Weight:
    return tuple(x + k * y for x, y in zip(a, b))


def tensor(a: WeightCharacter, b: WeightCharacter) -> WeightCharacter:
    a._check_rank(b)
    acc: Dict[Weight, int] = {}
    for w, m in a.mult:
        for v, k in b.mult:
            s = _add(w, v)
            acc[s] = acc.get(s, 0) + m * k
    return WeightCharacter.from_mapping(a.rank, acc)


def direct_sum(a: WeightCharacter, b: WeightCharacter) -> WeightCharacter:
    return a + b


def _power(a: WeightCharacter, k: int, coeff: Callable[[int, int], int]) -> WeightCharacter:
    if k < 0:
        raise InvalidInputError(f"power must be nonnegative, got {k}", rule="degree")
    zero = (0,) * a.rank
    state: Dict[Tuple[int, Weight], int] = {(0, zero): 1}
    for w, m in a.mult:
        nxt: Dict[Tuple[int, Weight], int] = {}
        for (deg, v), c in state.items():
            for j in range(0, k - deg + 1):
                cj = coeff(m, j)
                if not cj:
                    break
                key = (deg + j, _add(v, w, j))
                nxt[key] = nxt.get(key, 0) + c * cj
        state = nxt
    return WeightCharacter.from_mapping(a.rank, {v: c for (deg, v), c in state.items() if deg == k})


def wedge(a: WeightCharacter, k: int) -> WeightCharacter:
    """∧^k of a character."""
    return _power(a, k, comb)


def sym(a: WeightCharacter, k: int) -> WeightCharacter:
    """S^k of a character."""
    return _power(a, k, lambda m, j: comb(m + j - 1, j))


def product_character(a: WeightCharacter, b: WeightCharacter) -> WeightCharacter:
    """External tensor product for a product of groups: weights are concatenated."""
    acc: Dict[Weight, int] = {}
    for w, m in a.mult:
        for v, k in b.mult:
            acc[w + v] = acc.get(w + v, 0) + m * k
    return WeightCharacter.from_mapping(a.rank + b.rank, acc)
