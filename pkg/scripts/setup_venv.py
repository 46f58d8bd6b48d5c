#!/usr/bin/env python3
"""
Set up a venv and install lefhodge with its dev dependencies.

Usage (Linux/Windows):
  python scripts/setup_venv.py

Does:
  - Creates .venv if it does not exist yet
  - Installs the project into the venv: pip install -e ".[dev]"
"""
import os
import subprocess
import sys
from pathlib import Path


def project_root() -> Path:
    return Path(__file__).resolve().parents[1]


def main() -> int:
    root = project_root()
    venv_dir = root / ".venv"
    is_windows = os.name == "nt"
    scripts_dir = venv_dir / ("Scripts" if is_windows else "bin")
    venv_python = scripts_dir / ("python.exe" if is_windows else "python")

    print("[setup_venv] Project root:", root)

    # 1) Create venv
    if not venv_dir.exists():
        print("[setup_venv] Creating .venv ...")
        r = subprocess.run([sys.executable, "-m", "venv", str(venv_dir)], cwd=root)
        if r.returncode != 0:
            print("[setup_venv] Could not create venv.")
            return 1
    else:
        print("[setup_venv] .venv already exists.")

    if not venv_python.exists():
        print("[setup_venv] Error: no python found in venv:", scripts_dir)
        return 1

    # 2) Install project (sympy, numpy, pandas, pyyaml + pytest)
    print("[setup_venv] Installing: pip install -e \".[dev]\" ...")
    r = subprocess.run([str(venv_python), "-m", "pip", "install", "-e", ".[dev]"], cwd=root)
    if r.returncode != 0:
        print("[setup_venv] pip install failed.")
        return 1
    print("[setup_venv] Install done.")

    # 3) Next steps
    activate = ".\\.venv\\Scripts\\Activate.ps1" if is_windows else "source .venv/bin/activate"
    print()
    print("--- Next steps ---")
    print("  Activate venv:", activate)
    print("  Then for example:")
    print("    ./scripts/run_tests.sh -q")
    print("    lefhodge weyl --kind sp --n 2 --lambda 1,1")
    print("    lefhodge coniveau --descriptor configs/descriptors/very_general_surface.json --k 2")
    print("    python scripts/make_report.py")
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
