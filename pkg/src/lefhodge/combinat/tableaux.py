"""
Young tableaux: fillings of a partition's diagram with 1..d.

Standard tableaux are generated as chains in Young's lattice below the shape:
the largest entry always sits in a removable corner.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.lefhodge.combinat.partitions import Partition
from src.lefhodge.errors import InvalidInputError


@dataclass(frozen=True)
class FilledTableau:
    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise InvalidInputError(
                f"filling rows {[len(r) for r in rows]} do not match shape {self.shape}", rule="tableau-filling")
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, self.shape.size + 1)):
            raise InvalidInputError(f"filling is not a bijection onto 1..{self.shape.size}", rule="tableau-filling")

    @classmethod
    def canonical(cls, shape: Partition) -> "FilledTableau":
        """Row-major filling: 1..λ_1 in the first row, and so on."""
        rows, k = [], 1
        for p in shape.parts:
            rows.append(tuple(range(k, k + p)))
            k += p
        return cls(shape, tuple(rows))

    @property
    def degree(self) -> int:
        return self.shape.size

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(tuple(r[c] for r in self.rows if len(r) > c) for c in range(len(self.rows[0])))

    def is_standard(self) -> bool:
        rows_ok = all(r[i] < r[i + 1] for r in self.rows for i in range(len(r) - 1))
        cols_ok = all(c[i] < c[i + 1] for c in self.columns() for i in range(len(c) - 1))
        return rows_ok and cols_ok

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def _corners(parts: Tuple[int, ...]) -> Iterator[int]:
    for i, p in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if p > below:
            yield i


@lru_cache(maxsize=256)
def _chains(parts: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    d = sum(parts)
    if d == 0:
        return ((),)
    out: List[Tuple[Tuple[int, ...], ...]] = []
    for i in _corners(parts):
        child = list(parts)
        child[i] -= 1
        child_parts = tuple(p for p in child if p)
        for rows in _chains(child_parts):
            grown = [list(r) for r in rows] + [[] for _ in range(len(parts) - len(rows))]
            grown[i].append(d)
            out.append(tuple(tuple(r) for r in grown))
    return tuple(sorted(out))


def standard_tableaux(shape: Partition) -> List[FilledTableau]:
    """Every standard filling of `shape`, sorted by rows."""
    return [FilledTableau(shape, rows) for rows in _chains(shape.parts)]
