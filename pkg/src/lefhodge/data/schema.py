"""
Data models shared across modules: FormKind, HodgeProfile.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Mapping, Tuple


class FormKind(str, Enum):
    SYMPLECTIC = "sp"
    ORTHOGONAL = "o"

    @classmethod
    def parse(cls, value: "str | FormKind") -> "FormKind":
        from src.lefhodge.errors import InvalidInputError

        if isinstance(value, FormKind):
            return value
        key = str(value).strip().lower()
        aliases = {"sp": cls.SYMPLECTIC, "symplectic": cls.SYMPLECTIC,
                   "o": cls.ORTHOGONAL, "orthogonal": cls.ORTHOGONAL}
        if key not in aliases:
            raise InvalidInputError(f"unknown form kind {value!r} (expected sp or o)", rule="form-kind")
        return aliases[key]

    @property
    def form_sign(self) -> int:
        """+1 for symmetric Q, -1 for skew Q (sign of Q(e_-i, e_i))."""
        return -1 if self is FormKind.SYMPLECTIC else 1


@dataclass(frozen=True)
class HodgeProfile:
    """Dimensions of the (p - q)-eigenspaces; zero entries are not stored."""

    dims: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> "HodgeProfile":
        return cls(tuple(sorted((int(k), int(v)) for k, v in m.items() if v)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "HodgeProfile":
        acc: Dict[int, int] = {}
        for k, v in pairs:
            acc[k] = acc.get(k, 0) + v
        return cls.from_mapping(acc)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.dims)

    def __getitem__(self, key: int) -> int:
        return self.as_dict().get(key, 0)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.dims)

    @property
    def max_support(self) -> int | None:
        return max((k for k, _ in self.dims), default=None)

    def is_palindromic(self) -> bool:
        d = self.as_dict()
        return all(d.get(-k, 0) == v for k, v in d.items())

    def convolve(self, other: "HodgeProfile") -> "HodgeProfile":
        return HodgeProfile.from_pairs(
            (a + b, x * y) for a, x in self.dims for b, y in other.dims
        )

    def scaled(self, factor: int) -> "HodgeProfile":
        return HodgeProfile.from_pairs((k, v * factor) for k, v in self.dims)

    def to_dict(self) -> Dict[str, int]:
        return {str(k): v for k, v in sorted(self.dims, reverse=True)}
