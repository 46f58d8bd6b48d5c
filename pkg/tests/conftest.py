"""Shared pytest fixtures and config."""
import json
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def descriptor_dir():
    return ROOT / "configs" / "descriptors"


@pytest.fixture
def sample_config():
    return {
        "engine": {"max_tensor_dim": 4096, "threads": 2, "max_projector_genus": 3},
        "report": {"version": "test"},
        "logging": {"level": "DEBUG"},
    }


@pytest.fixture
def write_descriptor(tmp_path):
    def _write(doc, name="descriptor.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
        return path
    return _write


@pytest.fixture
def run_cli(capsys):
    """Run main(argv); return (exit code, stdout)."""
    from src.lefhodge.app import main

    def _run(*argv):
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out
    return _run
