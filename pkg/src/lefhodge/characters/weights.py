"""
Weights, weight characters and dominant weights in the ε basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from src.lefhodge.data.schema import FormKind, HodgeProfile
from src.lefhodge.errors import DimensionMismatchError, InvalidInputError

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class DominantWeight:
    """λ_1 ≥ ... ≥ λ_n ≥ 0. `paired` marks an orthogonal associated pair (λ_n > 0)."""

    coords: Weight
    paired: bool = False

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if any(c < 0 for c in coords) or any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
            raise InvalidInputError(f"{coords} is not a dominant weight", rule="dominant-weight")
        if self.paired and (not coords or coords[-1] == 0):
            raise InvalidInputError(f"paired weight {coords} needs a positive last coordinate",
                                    rule="dominant-weight")

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def level(self) -> int:
        return sum(self.coords)

    def __str__(self) -> str:
        body = "(" + ",".join(map(str, self.coords)) + ")"
        return body + "±" if self.paired else body


@dataclass(frozen=True)
class WeightCharacter:
    rank: int
    mult: Tuple[Tuple[Weight, int], ...] = ()

    @classmethod
    def from_mapping(cls, rank: int, mult: Mapping[Weight, int]) -> "WeightCharacter":
        clean = {}
        for w, m in mult.items():
            w = tuple(int(c) for c in w)
            if len(w) != rank:
                raise DimensionMismatchError(f"weight {w} has length {len(w)}, expected rank {rank}")
            if m:
                clean[w] = int(m)
        return cls(rank, tuple(sorted(clean.items())))

    @classmethod
    def from_weights(cls, rank: int, weights: Iterable[Weight]) -> "WeightCharacter":
        acc: Dict[Weight, int] = {}
        for w in weights:
            acc[tuple(w)] = acc.get(tuple(w), 0) + 1
        return cls.from_mapping(rank, acc)

    @classmethod
    def trivial(cls, rank: int) -> "WeightCharacter":
        return cls(rank, (((0,) * rank, 1),))

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.mult)

    def __getitem__(self, w: Weight) -> int:
        return self.as_dict().get(tuple(w), 0)

    def items(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.mult)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.mult)

    def is_zero(self) -> bool:
        return not self.mult

    def _check_rank(self, other: "WeightCharacter") -> None:
        if self.rank != other.rank:
            raise DimensionMismatchError(f"character ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "WeightCharacter") -> "WeightCharacter":
        self._check_rank(other)
        acc = self.as_dict()
        for w, m in other.mult:
            acc[w] = acc.get(w, 0) + m
        return WeightCharacter.from_mapping(self.rank, acc)

    def scale(self, k: int) -> "WeightCharacter":
        return WeightCharacter.from_mapping(self.rank, {w: m * k for w, m in self.mult})

    def __sub__(self, other: "WeightCharacter") -> "WeightCharacter":
        return self + other.scale(-1)

    def is_weyl_invariant(self, kind: FormKind) -> bool:
        """Invariance under coordinate swaps and the sign changes of the Weyl group."""
        kind = FormKind.parse(kind)
        d = self.as_dict()
        n = self.rank
        generators = []
        for i in range(n - 1):
            generators.append(lambda w, i=i: w[:i] + (w[i + 1], w[i]) + w[i + 2:])
        if n >= 1 and kind is FormKind.SYMPLECTIC:
            generators.append(lambda w: w[:-1] + (-w[-1],))
        elif n >= 2:
            generators.append(lambda w: w[:-2] + (-w[-2], -w[-1]))
        return all(d.get(g(w), 0) == m for g in generators for w, m in d.items())

    def to_dict(self) -> Dict[str, int]:
        return {",".join(map(str, w)): m for w, m in self.mult}


def hodge_specialize(x: WeightCharacter) -> HodgeProfile:
    """Push multiplicities forward along weight -> Σ coords, the p - q eigenvalue."""
    return HodgeProfile.from_pairs((sum(w), m) for w, m in x.mult)
