"""
Albert-type descriptors of abelian varieties and their dimension restrictions.

A descriptor lists the simple isogeny factors A_i^{m_i}. Each factor records its
Albert type, f = [F:Q], the reduced degree d and its dimension g.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.lefhodge.errors import InvalidInputError, ValidationError

logger = logging.getLogger(__name__)


class AlbertType(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    @classmethod
    def parse(cls, value: "str | AlbertType") -> "AlbertType":
        if isinstance(value, AlbertType):
            return value
        key = str(value).strip().upper()
        try:
            return cls(key)
        except ValueError:
            raise InvalidInputError(f"unknown Albert type {value!r} (expected I, II, III or IV)",
                                    rule="albert-type") from None

    @property
    def totally_real(self) -> bool:
        return self is not AlbertType.IV


@dataclass(frozen=True)
class AbelianFactor:
    albert_type: AlbertType
    f: int
    d: int
    g: int
    m: int = 1
    label: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "albert_type", AlbertType.parse(self.albert_type))

    def to_dict(self) -> dict:
        out = asdict(self)
        out["albert_type"] = self.albert_type.value
        return out


@dataclass(frozen=True)
class AbelianDescriptor:
    factors: Tuple[AbelianFactor, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def of(cls, *factors: AbelianFactor) -> "AbelianDescriptor":
        return cls(tuple(factors))

    def labels(self) -> List[str]:
        return [fac.label or f"A{i}" for i, fac in enumerate(self.factors, start=1)]

    @property
    def total_dimension(self) -> int:
        return sum(fac.m * fac.g for fac in self.factors)

    def is_totally_real(self) -> bool:
        return all(fac.albert_type.totally_real for fac in self.factors)

    def to_dict(self) -> dict:
        return {"factors": [fac.to_dict() for fac in self.factors]}


@dataclass(frozen=True)
class Violation:
    rule: str
    factor: str
    message: str

    def to_dict(self) -> dict:
        return asdict(self)


def _divides(a: int, b: int) -> bool:
    return a != 0 and b % a == 0


def _factor_violations(fac: AbelianFactor, label: str) -> List[Violation]:
    out: List[Violation] = []

    def fail(rule: str, message: str) -> None:
        out.append(Violation(rule, label, message))

    if min(fac.f, fac.d, fac.g, fac.m) < 1:
        fail("positive-parameters", f"f, d, g, m must be positive, got f={fac.f} d={fac.d} g={fac.g} m={fac.m}")
        return out

    t = fac.albert_type
    if t is AlbertType.I:
        if fac.d != 1:
            fail("type-I d=1", f"type I needs d = 1, got d={fac.d}")
        if not _divides(fac.f, fac.g):
            fail("f | g", f"type I needs f | g, got f={fac.f}, g={fac.g}")
    elif t in (AlbertType.II, AlbertType.III):
        if fac.d != 2:
            fail("type-II/III d=2", f"type {t.value} needs d = 2, got d={fac.d}")
        if not _divides(2 * fac.f, fac.g):
            fail("2f | g", f"type {t.value} needs 2f | g, got f={fac.f}, g={fac.g}")
        elif t is AlbertType.III and fac.g == 2 * fac.f:
            fail("type III strict divisibility",
                 f"type III needs 2f to divide g strictly, got 2f = g = {fac.g}")
    else:
        if not _divides(fac.f * fac.d ** 2, 2 * fac.g):
            fail("fd^2 | 2g", f"type IV needs fd^2 | 2g, got f={fac.f}, d={fac.d}, g={fac.g}")
        if not _divides(fac.d * fac.f, fac.g):
            fail("type-IV GL rank", f"type IV needs df | g for GL_(g/df), got f={fac.f}, d={fac.d}, g={fac.g}")
    return out


def validate(desc: AbelianDescriptor) -> List[Violation]:
    """Every violated constraint, in factor order. An empty list means the descriptor is admissible."""
    violations: List[Violation] = []
    if not desc.factors:
        violations.append(Violation("non-empty", "-", "descriptor has no factors"))
    labels = desc.labels()
    seen = set()
    for label in labels:
        if label in seen:
            violations.append(Violation("distinct-labels", label, f"factor label {label!r} used twice"))
        seen.add(label)
    for fac, label in zip(desc.factors, labels):
        violations.extend(_factor_violations(fac, label))
    if violations:
        logger.info("descriptor rejected: %s", ", ".join(v.rule for v in violations))
    return violations


def require_valid(desc: AbelianDescriptor) -> None:
    violations = validate(desc)
    if violations:
        raise ValidationError(f"{len(violations)} descriptor constraint(s) violated", violations)
