"""
Load abelian-variety descriptors from JSON: {"factors": [{"type", "f", "d", "g", "m", "label"?}, ...]}
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from src.lefhodge.errors import DescriptorSchemaError
from src.lefhodge.lefschetz.albert import AbelianDescriptor, AbelianFactor, AlbertType

logger = logging.getLogger(__name__)

REQUIRED = ("type", "f", "d", "g")
OPTIONAL = ("m", "label")


def _int_field(entry: Dict[str, Any], key: str, where: str) -> int:
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptorSchemaError(f"{where}: {key!r} must be an integer, got {value!r}")
    return value


def parse_descriptor(doc: Any) -> AbelianDescriptor:
    if not isinstance(doc, dict) or not isinstance(doc.get("factors"), list):
        raise DescriptorSchemaError("descriptor must be an object with a 'factors' list")
    extra = set(doc) - {"factors"}
    if extra:
        raise DescriptorSchemaError(f"unknown top-level keys {sorted(extra)}")
    factors: List[AbelianFactor] = []
    for i, entry in enumerate(doc["factors"], start=1):
        where = f"factor {i}"
        if not isinstance(entry, dict):
            raise DescriptorSchemaError(f"{where}: expected an object, got {type(entry).__name__}")
        missing = [k for k in REQUIRED if k not in entry]
        if missing:
            raise DescriptorSchemaError(f"{where}: missing keys {missing}")
        unknown = set(entry) - set(REQUIRED) - set(OPTIONAL)
        if unknown:
            raise DescriptorSchemaError(f"{where}: unknown keys {sorted(unknown)}")
        label = entry.get("label")
        if label is not None and not isinstance(label, str):
            raise DescriptorSchemaError(f"{where}: 'label' must be a string")
        try:
            albert_type = AlbertType.parse(entry["type"])
        except Exception as e:
            raise DescriptorSchemaError(f"{where}: {e}") from None
        factors.append(AbelianFactor(
            albert_type=albert_type,
            f=_int_field(entry, "f", where),
            d=_int_field(entry, "d", where),
            g=_int_field(entry, "g", where),
            m=_int_field(entry, "m", where) if "m" in entry else 1,
            label=label,
        ))
    return AbelianDescriptor(tuple(factors))


def load_descriptor(path: str | Path) -> AbelianDescriptor:
    p = Path(path)
    if not p.exists():
        raise DescriptorSchemaError(f"descriptor file not found: {p}", rule="descriptor-file")
    try:
        with open(p, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise DescriptorSchemaError(f"{p}: invalid JSON ({e.msg} at line {e.lineno})") from None
    desc = parse_descriptor(doc)
    logger.info("loaded descriptor %s: %d factor(s), dim %d", p.name, len(desc.factors), desc.total_dimension)
    return desc
