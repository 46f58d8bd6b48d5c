"""
Standard representation V = Q^{2n} of Sp_{2n} or O_{2n}.

Basis order is e_1..e_n, e_-1..e_-n at indices 0..2n-1. Tensor words of
length d are tuples of indices, enumerated lexicographically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from src.lefhodge.data.schema import FormKind
from src.lefhodge.errors import InvalidInputError, OrthogonalRankError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class StandardRep:
    kind: FormKind
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", FormKind.parse(self.kind))
        if int(self.n) < 1:
            raise InvalidInputError(f"rank n must be positive, got {self.n}", rule="rank")
        object.__setattr__(self, "n", int(self.n))
        if self.kind is FormKind.ORTHOGONAL and self.n == 1:
            raise OrthogonalRankError("O_2 is excluded: orthogonal rank must exceed 1")

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def name(self) -> str:
        return f"{'Sp' if self.kind is FormKind.SYMPLECTIC else 'O'}_{self.dim}"

    def label(self, index: int) -> str:
        return f"e_{index + 1}" if index < self.n else f"e_-{index - self.n + 1}"

    def letter_weight(self, index: int) -> int:
        """H_0 eigenvalue of a basis vector: +1 on e_i, -1 on e_-i."""
        return 1 if index < self.n else -1

    def partner(self, index: int) -> int:
        return (index + self.n) % self.dim

    def form(self, a: int, b: int) -> int:
        """Q(e_a, e_b)."""
        if b != self.partner(a):
            return 0
        return 1 if a < self.n else self.kind.form_sign

    def psi(self) -> Dict[Tuple[int, int], Fraction]:
        """ψ = Σ e_i⊗e_-i ∓ e_-i⊗e_i, the element dual to Q."""
        out: Dict[Tuple[int, int], Fraction] = {}
        for i in range(self.n):
            out[(i, i + self.n)] = Fraction(1)
            out[(i + self.n, i)] = Fraction(self.kind.form_sign)
        return out

    # -- words ------------------------------------------------------------

    def tensor_dim(self, d: int) -> int:
        return self.dim ** d

    def words(self, d: int) -> Iterator[Word]:
        return itertools.product(range(self.dim), repeat=d)

    def word_index(self, word: Sequence[int]) -> int:
        idx = 0
        for letter in word:
            idx = idx * self.dim + letter
        return idx

    def word_label(self, word: Sequence[int]) -> str:
        return "⊗".join(self.label(x) for x in word) or "1"

    def torus_weight(self, word: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates in the ε basis: #e_i minus #e_-i for each i."""
        w = [0] * self.n
        for letter in word:
            if letter < self.n:
                w[letter] += 1
            else:
                w[letter - self.n] -= 1
        return tuple(w)

    def h0(self, word: Sequence[int]) -> int:
        return sum(self.letter_weight(x) for x in word)

    def weight_blocks(self, d: int) -> Dict[Tuple[int, ...], List[int]]:
        """Word indices of V^⊗d grouped by torus weight, each list increasing."""
        blocks: Dict[Tuple[int, ...], List[int]] = {}
        for idx, word in enumerate(self.words(d)):
            blocks.setdefault(self.torus_weight(word), []).append(idx)
        return dict(sorted(blocks.items()))

    def word_at(self, index: int, d: int) -> Word:
        letters = []
        for _ in range(d):
            index, r = divmod(index, self.dim)
            letters.append(r)
        return tuple(reversed(letters))
