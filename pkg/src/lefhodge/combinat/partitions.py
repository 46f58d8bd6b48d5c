"""
Partitions and Young diagrams.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, List, Sequence, Tuple

from src.lefhodge.errors import InvalidInputError


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"partition parts must be positive: {parts}", rule="partition")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"partition parts must be weakly decreasing: {parts}", rule="partition")

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Drop trailing zeros, then validate."""
        return cls(tuple(p for p in parts if p != 0))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = (text or "").strip().strip("()[]")
        if not text:
            return cls(())
        try:
            values = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
        except ValueError as e:
            raise InvalidInputError(f"cannot parse partition {text!r}", rule="partition") from e
        if any(v < 0 for v in values):
            raise InvalidInputError(f"negative part in {text!r}", rule="partition")
        return cls.of(values)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        """ℓ(λ) = Σ λ_i, the number of boxes (not of rows)."""
        return self.size

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """λ_i, 1-based, zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def column_lengths(self) -> Tuple[int, ...]:
        return self.conjugate().parts

    def cells(self) -> Iterator[Tuple[int, int]]:
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield r, c

    def hook_product(self) -> int:
        cols = self.column_lengths()
        return prod((p - c) + (cols[c] - r) - 1 for r, c in self.cells() for p in (self.parts[r],)) if self.parts else 1

    def padded(self, n: int) -> Tuple[int, ...]:
        if len(self.parts) > n:
            raise InvalidInputError(f"{self.parts} has more than {n} rows", rule="partition-rank")
        return self.parts + (0,) * (n - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@lru_cache(maxsize=None)
def _partitions(d: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out: List[Tuple[int, ...]] = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(d: int) -> List[Partition]:
    """All partitions of d in reverse-lexicographic order."""
    if d < 0:
        raise InvalidInputError(f"cannot partition negative integer {d}", rule="partition")
    return [Partition(p) for p in _partitions(d, d)]


def count_standard_tableaux(shape: Partition) -> int:
    """f^λ by the hook-length formula."""
    return factorial(shape.size) // shape.hook_product()


def column_data(shape: Partition) -> Tuple[int, int]:
    """Lengths of the first two columns (second is 0 for a single column)."""
    cols = shape.column_lengths()
    return (cols[0] if cols else 0, cols[1] if len(cols) > 1 else 0)


def associated(shape: Partition, two_n: int) -> Partition:
    """Orthogonal associate: first column c1 replaced by 2n - c1."""
    c1, c2 = column_data(shape)
    if c1 + c2 > two_n:
        raise InvalidInputError(f"{shape} has first two columns longer than {two_n}", rule="o-columns")
    cols = list(shape.column_lengths()) or [0]
    cols[0] = two_n - c1
    cols = [c for c in cols if c]
    return Partition(tuple(cols)).conjugate() if cols else Partition(())


def conjugacy_class_size(cycle_type: Partition) -> int:
    """Number of permutations of the given cycle type: d! / z_μ."""
    z = 1
    for k in set(cycle_type.parts):
        m = cycle_type.parts.count(k)
        z *= (k ** m) * factorial(m)
    return factorial(cycle_type.size) // z
