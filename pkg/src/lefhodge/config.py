"""
Configuration loader: packaged YAML defaults merged with an optional user YAML.
No environment overrides: a run is fully described by its flags and files.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict

import yaml

_ROOT = Path(__file__).resolve().parents[2]
_DEFAULT_PATH = _ROOT / "configs" / "default.yaml"


def load_config(path: str | Path | None = None) -> Dict[str, Any]:
    """Load config from YAML; merge with default."""
    default: Dict[str, Any] = {}
    if _DEFAULT_PATH.exists():
        with open(_DEFAULT_PATH, "r", encoding="utf-8") as f:
            default = yaml.safe_load(f) or {}

    merged = dict(default)
    if path is None:
        return merged

    cfg_path = Path(path)
    if not cfg_path.is_absolute() and not cfg_path.exists():
        cfg_path = _ROOT / cfg_path
    if cfg_path.exists():
        with open(cfg_path, "r", encoding="utf-8") as f:
            overrides = yaml.safe_load(f) or {}
        _deep_merge(merged, overrides)
    return merged


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
    for k, v in override.items():
        if k in base and isinstance(base[k], dict) and isinstance(v, dict):
            _deep_merge(base[k], v)
        else:
            base[k] = v


@dataclass(frozen=True)
class EngineSettings:
    max_tensor_dim: int = 10**6
    sparse_density_threshold: float = 0.25
    max_molien_group_order: int = 10**7
    max_projector_genus: int = 4
    max_cohomology_rank: int = 24
    threads: int = 1


DEFAULT_SETTINGS = EngineSettings()


def engine_settings(cfg: Dict[str, Any] | None = None) -> EngineSettings:
    """Build EngineSettings from the `engine:` section; unknown keys are ignored."""
    eng = (cfg or {}).get("engine", {}) or {}
    known = {k: eng[k] for k in EngineSettings.__dataclass_fields__ if k in eng}
    if "max_tensor_dim" in known:
        known["max_tensor_dim"] = int(known["max_tensor_dim"])
    if "max_molien_group_order" in known:
        known["max_molien_group_order"] = int(known["max_molien_group_order"])
    return EngineSettings(**known)
