"""
Exact elements of Q[S_d] and Young projectors.

Permutations are one-line tuples (σ(1), ..., σ(d)); composition is
(σ∘τ)(i) = σ(τ(i)). They act on words by place permutation,
(σ·w)_{σ(i)} = w_i, which is a left action.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.lefhodge.combinat.partitions import count_standard_tableaux
from src.lefhodge.combinat.tableaux import FilledTableau
from src.lefhodge.errors import InvalidInputError

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(1, d + 1))


def compose(sigma: Perm, tau: Perm) -> Perm:
    return tuple(sigma[t - 1] for t in tau)


def sign(sigma: Perm) -> int:
    seen = [False] * len(sigma)
    s = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def act_on_word(sigma: Perm, word: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(word)
    for i, letter in enumerate(word):
        out[sigma[i] - 1] = letter
    return tuple(out)


def _check_perm(sigma: Perm, d: int) -> Perm:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, d + 1)):
        raise InvalidInputError(f"{sigma} is not a permutation of 1..{d}", rule="permutation")
    return sigma


@dataclass(frozen=True)
class GroupAlgebraElement:
    degree: int
    terms: Tuple[Tuple[Perm, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, degree: int, terms: Mapping[Perm, object]) -> "GroupAlgebraElement":
        clean: Dict[Perm, Fraction] = {}
        for sigma, c in terms.items():
            c = Fraction(c)
            if c:
                clean[_check_perm(sigma, degree)] = c
        return cls(degree, tuple(sorted(clean.items())))

    @classmethod
    def identity(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree, ((identity(degree), Fraction(1)),))

    @classmethod
    def signed_sum(cls, degree: int, perms: Iterable[Perm], signed: bool = False) -> "GroupAlgebraElement":
        acc: Dict[Perm, Fraction] = {}
        for p in perms:
            acc[p] = acc.get(p, Fraction(0)) + (sign(p) if signed else 1)
        return cls.from_mapping(degree, acc)

    def as_dict(self) -> Dict[Perm, Fraction]:
        return dict(self.terms)

    def _check_degree(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise InvalidInputError(f"degrees differ: {self.degree} vs {other.degree}", rule="group-degree")

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_degree(other)
        acc: Dict[Perm, Fraction] = {}
        for s, a in self.terms:
            for t, b in other.terms:
                st = compose(s, t)
                acc[st] = acc.get(st, Fraction(0)) + a * b
        return GroupAlgebraElement.from_mapping(self.degree, acc)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_degree(other)
        acc = self.as_dict()
        for t, b in other.terms:
            acc[t] = acc.get(t, Fraction(0)) + b
        return GroupAlgebraElement.from_mapping(self.degree, acc)

    def scale(self, c: object) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement.from_mapping(self.degree, {s: a * c for s, a in self.terms})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def is_idempotent(self) -> bool:
        return self * self == self

    def __len__(self) -> int:
        return len(self.terms)


def _block_permutations(blocks: Sequence[Sequence[int]], d: int) -> List[Perm]:
    """All permutations of 1..d that preserve each block setwise."""
    out: List[Perm] = []
    per_block = [list(itertools.permutations(b)) for b in blocks]
    for choice in itertools.product(*per_block):
        img = list(identity(d))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                img[src - 1] = dst
        out.append(tuple(img))
    return out


def row_symmetrizer(t: FilledTableau) -> GroupAlgebraElement:
    return GroupAlgebraElement.signed_sum(t.degree, _block_permutations(t.rows, t.degree))


def column_symmetrizer(t: FilledTableau) -> GroupAlgebraElement:
    return GroupAlgebraElement.signed_sum(t.degree, _block_permutations(t.columns(), t.degree), signed=True)


def young_projector(t: FilledTableau) -> GroupAlgebraElement:
    """(f^λ/d!)·a_t·b_t, an idempotent of Q[S_d]."""
    if not t.is_standard():
        raise InvalidInputError(f"tableau {t} is not standard", rule="non-standard-tableau")
    d = t.degree
    c = row_symmetrizer(t) * column_symmetrizer(t)
    p = c.scale(Fraction(count_standard_tableaux(t.shape), factorial(d)))
    logger.debug("young projector for %s: %d terms", t, len(p))
    return p
