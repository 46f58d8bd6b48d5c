"""
Exception hierarchy. Each class carries the CLI exit code and a stable rule id,
so a report can always name the constraint that stopped a command.
"""
from __future__ import annotations

from typing import Any, List, Optional


class LefhodgeError(Exception):
    exit_code: int = 1
    status: str = "error"
    default_rule: str = "engine"

    def __init__(self, message: str, rule: Optional[str] = None) -> None:
        super().__init__(message)
        self.message = message
        self.rule = rule or self.default_rule

    def to_dict(self) -> dict:
        return {"rule": self.rule, "message": self.message}


class InvalidInputError(LefhodgeError):
    exit_code = 2
    default_rule = "invalid-input"


class DimensionMismatchError(InvalidInputError):
    default_rule = "ambient-dimension-mismatch"


class OrthogonalRankError(InvalidInputError):
    default_rule = "orthogonal-rank>1"


class DescriptorSchemaError(InvalidInputError):
    default_rule = "descriptor-schema"


class DegeneratePairingError(InvalidInputError):
    default_rule = "degenerate-pairing"


class NonCharacterError(InvalidInputError):
    default_rule = "non-character"


class ResourceGuardError(LefhodgeError):
    exit_code = 3
    default_rule = "resource-guard"


class ValidationError(LefhodgeError):
    """Albert/Shimura constraint violations; `violations` holds the records."""

    exit_code = 4
    status = "violation"
    default_rule = "albert-validation"

    def __init__(self, message: str, violations: List[Any]) -> None:
        super().__init__(message)
        self.violations = list(violations)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["violations"] = [v.to_dict() for v in self.violations]
        return d


class RefusalError(LefhodgeError):
    exit_code = 5
    status = "refused"
    default_rule = "type-IV-refused"


def guard(value: int, limit: int, what: str) -> None:
    """Raise ResourceGuardError when value exceeds the configured limit."""
    if value > limit:
        raise ResourceGuardError(f"{what} = {value} exceeds the desk-scale limit {limit}")
