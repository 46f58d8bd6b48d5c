"""
Irreducible characters of Sp_{2n} (type C_n) and O_{2n} (type D_n).

Multiplicities come from Freudenthal's recursion evaluated on dominant weights
only, looking up other weights through their dominant representative.
Orthogonal characters are folded onto the weights with nonnegative
decreasing coordinates: an O_{2n} character is invariant under every signed
permutation, so that chamber determines it.
"""
from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy.utilities.iterables import multiset_permutations

from src.lefhodge.characters.weights import DominantWeight, Weight, WeightCharacter
from src.lefhodge.combinat.partitions import Partition, associated, column_data
from src.lefhodge.data.schema import FormKind
from src.lefhodge.errors import InvalidInputError, OrthogonalRankError

logger = logging.getLogger(__name__)


def check_group(kind: FormKind, n: int) -> FormKind:
    kind = FormKind.parse(kind)
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got {n}", rule="rank")
    if kind is FormKind.ORTHOGONAL and n == 1:
        raise OrthogonalRankError("O_2 is excluded: orthogonal rank must exceed 1")
    return kind


@lru_cache(maxsize=None)
def positive_roots(kind: FormKind, n: int) -> Tuple[Weight, ...]:
    roots: List[Weight] = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (-1, 1):
                r = [0] * n
                r[i], r[j] = 1, s
                roots.append(tuple(r))
        if kind is FormKind.SYMPLECTIC:
            r = [0] * n
            r[i] = 2
            roots.append(tuple(r))
    return tuple(roots)


def rho(kind: FormKind, n: int) -> Weight:
    if kind is FormKind.SYMPLECTIC:
        return tuple(range(n, 0, -1))
    return tuple(range(n - 1, -1, -1))


def _dot(a: Weight, b: Weight) -> int:
    return sum(x * y for x, y in zip(a, b))


def dominant_rep(kind: FormKind, w: Weight) -> Weight:
    """Weyl-conjugate of w in the dominant chamber of C_n or D_n."""
    mags = sorted((abs(x) for x in w), reverse=True)
    if kind is FormKind.ORTHOGONAL and mags and mags[-1] > 0:
        if sum(1 for x in w if x < 0) % 2:
            mags[-1] = -mags[-1]
    return tuple(mags)


def _in_positive_cone(kind: FormKind, x: Weight) -> bool:
    """x is a nonnegative integer combination of simple roots."""
    partial = list(itertools.accumulate(x))
    if not partial:
        return True
    if partial[-1] % 2:
        return False
    if kind is FormKind.SYMPLECTIC:
        return all(s >= 0 for s in partial)
    n = len(x)
    if n == 1:
        return partial[0] >= 0
    return all(s >= 0 for s in partial[: n - 2]) and partial[-1] >= 0 and partial[n - 2] - x[-1] >= 0


def _depth(kind: FormKind, x: Weight) -> Fraction:
    partial = list(itertools.accumulate(x))
    if kind is FormKind.SYMPLECTIC:
        return sum(partial[:-1]) + Fraction(partial[-1], 2)
    return sum(partial[:-2]) + Fraction(partial[-2] - x[-1], 2) + Fraction(partial[-1], 2)


def _dominant_candidates(kind: FormKind, top: Weight) -> List[Weight]:
    n = len(top)
    bound = top[0] if top else 0
    out: List[Weight] = []
    for combo in itertools.combinations_with_replacement(range(bound, -1, -1), n):
        out.append(tuple(combo))
        if kind is FormKind.ORTHOGONAL and combo[-1] > 0:
            out.append(combo[:-1] + (-combo[-1],))
    diff = lambda mu: tuple(a - b for a, b in zip(top, mu))
    return [mu for mu in out if _in_positive_cone(kind, diff(mu))]


@lru_cache(maxsize=4096)
def _freudenthal(kind: FormKind, top: Weight) -> Dict[Weight, int]:
    """Multiplicities of the irreducible with highest weight `top` on its dominant weights."""
    n = len(top)
    r = rho(kind, n)
    roots = positive_roots(kind, n)
    top_r = tuple(a + b for a, b in zip(top, r))
    norm_top = _dot(top_r, top_r)
    candidates = _dominant_candidates(kind, top)
    candidates.sort(key=lambda mu: _depth(kind, tuple(a - b for a, b in zip(top, mu))))
    table: Dict[Weight, int] = {}
    for mu in candidates:
        if mu == top:
            table[mu] = 1
            continue
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = table.get(dominant_rep(kind, nu), 0)
                if not m:
                    break
                acc += m * _dot(nu, alpha)
                k += 1
        mu_r = tuple(a + b for a, b in zip(mu, r))
        denom = norm_top - _dot(mu_r, mu_r)
        value = Fraction(2 * acc, denom)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu} for {top}")
        if value:
            table[mu] = int(value)
    logger.debug("freudenthal %s %s: %d dominant weights", kind.value, top, len(table))
    return table


def _check_weight(kind: FormKind, n: int, lam: DominantWeight) -> None:
    if lam.rank != n:
        raise InvalidInputError(f"weight {lam} has rank {lam.rank}, expected {n}", rule="weight-rank")
    if lam.paired and kind is not FormKind.ORTHOGONAL:
        raise InvalidInputError("paired weights only exist for orthogonal groups", rule="dominant-weight")
    if kind is FormKind.ORTHOGONAL and lam.coords and lam.coords[-1] > 0 and not lam.paired:
        raise InvalidInputError(f"orthogonal weight {lam} with positive last coordinate must be paired",
                                rule="dominant-weight")


def folded_multiplicities(kind: FormKind, n: int, lam: DominantWeight) -> Dict[Weight, int]:
    """Multiplicities on weights with nonnegative decreasing coordinates."""
    kind = check_group(kind, n)
    _check_weight(kind, n, lam)
    return dict(_folded(kind, lam))


@lru_cache(maxsize=4096)
def _folded(kind: FormKind, lam: DominantWeight) -> Tuple[Tuple[Weight, int], ...]:
    table = _freudenthal(kind, lam.coords)
    if kind is FormKind.SYMPLECTIC:
        return tuple(sorted(table.items()))
    # the second member of a pair has multiplicity m(μ^-) at μ, μ^- = μ with last sign flipped
    acc: Dict[Weight, int] = {}
    for mu, m in table.items():
        if mu[-1] >= 0:
            acc[mu] = acc.get(mu, 0) + m
        if lam.paired and mu[-1] <= 0:
            pos = mu[:-1] + (-mu[-1],)
            acc[pos] = acc.get(pos, 0) + m
    return tuple(sorted((mu, m) for mu, m in acc.items() if m))


def weyl_dim(kind: FormKind, n: int, lam: DominantWeight) -> int:
    """Weyl's dimension formula; an orthogonal pair counts both members."""
    kind = check_group(kind, n)
    _check_weight(kind, n, lam)
    r = rho(kind, n)
    lr = tuple(a + b for a, b in zip(lam.coords, r))
    value = Fraction(1)
    for alpha in positive_roots(kind, n):
        value *= Fraction(_dot(lr, alpha), _dot(r, alpha))
    dim = int(value)
    return 2 * dim if lam.paired else dim


def signed_orbit(w: Weight) -> List[Weight]:
    """All signed permutations of w, without repeats."""
    out = set()
    for perm in multiset_permutations(list(w)):
        nz = [i for i, x in enumerate(perm) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] = s * v[i]
            out.add(tuple(v))
    return sorted(out)


def irr_character(kind: FormKind, n: int, lam: DominantWeight) -> WeightCharacter:
    """Full weight multiplicity function, orbit-expanded from the folded chamber."""
    acc: Dict[Weight, int] = {}
    for mu, m in folded_multiplicities(kind, n, lam).items():
        for w in signed_orbit(mu):
            acc[w] = m
    return WeightCharacter.from_mapping(n, acc)


def dominant_weight_for(kind: FormKind, n: int, lam: Partition) -> Optional[DominantWeight]:
    """Highest weight attached to S_<λ>V, or None when the space vanishes."""
    kind = check_group(kind, n)
    if kind is FormKind.SYMPLECTIC:
        if lam.part(n + 1) > 0:
            return None
        return DominantWeight(lam.padded(n))
    c1, c2 = column_data(lam)
    if c1 + c2 > 2 * n:
        return None
    shape = associated(lam, 2 * n) if c1 > n else lam
    coords = shape.padded(n)
    return DominantWeight(coords, paired=bool(coords and coords[-1] > 0))
