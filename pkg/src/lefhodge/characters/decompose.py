"""
Highest-weight peeling: split a character into irreducible constituents.
"""
from __future__ import annotations

import itertools
import logging
from typing import Dict, Tuple

from src.lefhodge.characters.freudenthal import check_group, folded_multiplicities, weyl_dim
from src.lefhodge.characters.weights import DominantWeight, Weight, WeightCharacter
from src.lefhodge.data.schema import FormKind
from src.lefhodge.errors import DimensionMismatchError, NonCharacterError

logger = logging.getLogger(__name__)

Decomposition = Dict[DominantWeight, int]


def _chamber(x: WeightCharacter) -> Dict[Weight, int]:
    return {w: m for w, m in x.mult
            if all(c >= 0 for c in w) and all(w[i] >= w[i + 1] for i in range(len(w) - 1))}


def _peel_key(w: Weight) -> Tuple[Tuple[int, ...], Weight]:
    return tuple(itertools.accumulate(w)), w


def decompose(x: WeightCharacter, kind: FormKind, n: int) -> Decomposition:
    """Constituents with multiplicities, in the order they were peeled."""
    kind = check_group(kind, n)
    if x.rank != n:
        raise DimensionMismatchError(f"character of rank {x.rank} decomposed for rank {n}")
    remaining = _chamber(x)
    out: Decomposition = {}
    while remaining:
        top = max(remaining, key=_peel_key)
        c = remaining[top]
        if c < 0:
            raise NonCharacterError(f"negative multiplicity {c} at {top} while peeling", rule="non-character")
        lam = DominantWeight(top, paired=kind is FormKind.ORTHOGONAL and bool(top) and top[-1] > 0)
        for mu, m in folded_multiplicities(kind, n, lam).items():
            left = remaining.get(mu, 0) - c * m
            if left < 0:
                raise NonCharacterError(f"multiplicity at {mu} drops below zero removing {lam}",
                                        rule="non-character")
            if left:
                remaining[mu] = left
            else:
                remaining.pop(mu, None)
        out[lam] = out.get(lam, 0) + c
        logger.debug("peeled %s x%d", lam, c)
    mass = sum(c * weyl_dim(kind, n, lam) for lam, c in out.items())
    if mass != x.total:
        raise NonCharacterError(f"constituents carry mass {mass}, character has {x.total}: not Weyl invariant",
                                rule="non-character")
    return out
