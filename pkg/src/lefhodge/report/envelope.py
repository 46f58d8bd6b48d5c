"""
ReportEnvelope: the one shape every command prints.

JSON is the wire format (sorted keys, so identical runs are byte-identical);
TSV is derived from the tabular part of a payload through pandas.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from src.lefhodge import __version__
from src.lefhodge.errors import LefhodgeError


def to_jsonable(obj: Any) -> Any:
    """Fractions -> "p/q", tuples -> lists, -inf -> "-inf", dict keys -> str."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if math.isinf(value):
            return "-inf" if value < 0 else "inf"
        return value
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if is_dataclass(obj):
        return to_jsonable({k: getattr(obj, k) for k in obj.__dataclass_fields__})
    return str(obj)


@dataclass
class ReportEnvelope:
    command: str
    inputs: Dict[str, Any]
    status: str = "ok"
    result: Any = None
    version: str = __version__
    rows: Optional[List[Dict[str, Any]]] = field(default=None, repr=False)

    @classmethod
    def from_error(cls, command: str, inputs: Dict[str, Any], err: LefhodgeError,
                   version: str = __version__) -> "ReportEnvelope":
        return cls(command, inputs, status=err.status, result=err.to_dict(), version=version)

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable({
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "result": self.result,
            "version": self.version,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_tsv(self) -> str:
        """Tabular rows when the command has them, else the scalar fields of the result."""
        if self.rows is not None:
            frame = pd.DataFrame(to_jsonable(self.rows))
        else:
            payload = to_jsonable(self.result)
            if not isinstance(payload, dict):
                payload = {"result": payload}
            scalars = {k: v for k, v in sorted(payload.items()) if not isinstance(v, (dict, list))}
            frame = pd.DataFrame([{"command": self.command, "status": self.status, **scalars}])
        return frame.to_csv(sep="\t", index=False)
