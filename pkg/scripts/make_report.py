#!/usr/bin/env python3
"""
lefhodge report generator: run tests + the acceptance grid, write REPORT.md and metrics.json.
Usage:
  python scripts/make_report.py                    # write to reports/latest/
  python scripts/make_report.py --baseline         # also save golden numbers as reports/history/baseline.json
  python scripts/make_report.py --config configs/default.yaml
"""
import argparse
import json
import subprocess
import sys
import time
from datetime import datetime, timezone
from math import comb
from pathlib import Path
from typing import Callable, Dict, List, Tuple

ROOT = Path(__file__).resolve().parents[1]


def get_git_commit() -> str:
    try:
        out = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            capture_output=True,
            text=True,
            check=True,
            cwd=ROOT,
        )
        return (out.stdout or "").strip()[:12]
    except Exception:
        return "unknown"


def run_pytest() -> Tuple[int, int, str]:
    """Run the unit tests; return (passed, failed, short_output)."""
    r = subprocess.run(
        [sys.executable, "-m", "pytest", "tests/unit/", "-q", "--tb=short"],
        capture_output=True,
        text=True,
        cwd=ROOT,
        timeout=600,
    )
    out = (r.stdout or "") + (r.stderr or "")
    passed = failed = 0
    for line in reversed(out.strip().split("\n")):
        parts = line.replace(",", " ").split()
        if "passed" in parts or "failed" in parts:
            for i, p in enumerate(parts):
                if i and p == "passed" and parts[i - 1].isdigit():
                    passed = int(parts[i - 1])
                elif i and p == "failed" and parts[i - 1].isdigit():
                    failed = int(parts[i - 1])
            break
    return passed, failed, out[-2000:]


# -- acceptance grid ----------------------------------------------------------

def check_weyl_oracle(settings) -> bool:
    from src.lefhodge.characters import dominant_weight_for, hodge_specialize, irr_character, weyl_dim
    from src.lefhodge.combinat import enumerate_partitions
    from src.lefhodge.weyl import StandardRep, hodge_profile, s_lambda_space
    for kind in ("sp", "o"):
        for n in (2, 3):
            rep = StandardRep(kind, n)
            for d in range(5):
                for lam in enumerate_partitions(d):
                    space = s_lambda_space(rep, lam, settings=settings)
                    dw = dominant_weight_for(rep.kind, n, lam)
                    if dw is None:
                        if space.dim:
                            return False
                        continue
                    profile = hodge_profile(rep, space)
                    if space.dim != weyl_dim(rep.kind, n, dw) or profile != hodge_specialize(irr_character(rep.kind, n, dw)):
                        return False
                    if not profile.is_palindromic() or profile.max_support != dw.level:
                        return False
    return True


def check_coniveau(settings) -> bool:
    from src.lefhodge.hodge import primitive_filtration_table
    from src.lefhodge.lefschetz import AbelianDescriptor, AbelianFactor, coniveau_report
    for g in (1, 2, 3):
        desc = AbelianDescriptor.of(AbelianFactor("I", 1, 1, g))
        for k in range(2 * g + 1):
            if coniveau_report(desc, 1, k, settings=settings).table.as_dict() != primitive_filtration_table(g, k):
                return False
    return True


def check_sym_vanishing(settings) -> bool:
    from src.lefhodge.hodge import sym_vanishing_check
    return all(sym_vanishing_check(g, i, comb(g, i) + 1) for g in range(1, 5) for i in range(g + 1))


def check_molien(settings) -> bool:
    from src.lefhodge.hodge import molien_holomorphic_invariants
    if molien_holomorphic_invariants(2, 1, settings=settings).coeffs != (1, 0, 1):
        return False
    return all(molien_holomorphic_invariants(2, n, settings=settings).odd_coefficients_vanish() for n in range(1, 5))


def check_kleiman(settings) -> bool:
    from src.lefhodge.hodge import kleiman_projectors, primitive_dim
    for g in (1, 2, 3):
        family = kleiman_projectors(g, settings=settings)
        if not all(family.audit().values()):
            return False
        if any(v != primitive_dim(g, k - 2 * r) for (k, r), v in family.ranks().items()):
            return False
    return True


def check_albert(settings) -> bool:
    from src.lefhodge.errors import RefusalError
    from src.lefhodge.lefschetz import AbelianDescriptor, AbelianFactor, coniveau_report, validate

    def rules(*args):
        return [v.rule for v in validate(AbelianDescriptor.of(AbelianFactor(*args)))]

    if rules("I", 1, 1, 2) or rules("III", 1, 2, 2) != ["type III strict divisibility"] \
            or rules("II", 2, 2, 2) != ["2f | g"]:
        return False
    try:
        coniveau_report(AbelianDescriptor.of(AbelianFactor("IV", 1, 2, 2)), 1, 2, settings=settings)
    except RefusalError:
        return True
    return False


def check_audit(settings) -> bool:
    from src.lefhodge.weyl import StandardRep, decomposition_audit
    return all(decomposition_audit(StandardRep(kind, n), d, settings=settings).passed
               for kind, n in (("sp", 1), ("sp", 2), ("sp", 3), ("o", 2), ("o", 3)) for d in range(2, 5))


ACCEPTANCE: List[Tuple[str, Callable, float]] = [
    ("weyl_oracle_equivalence", check_weyl_oracle, 120.0),
    ("coniveau_equals_primitive", check_coniveau, 60.0),
    ("sym_vanishing_threshold", check_sym_vanishing, 10.0),
    ("molien_odd_vanishing", check_molien, 30.0),
    ("kleiman_family", check_kleiman, 60.0),
    ("albert_validation", check_albert, 10.0),
    ("decomposition_audit", check_audit, 120.0),
]


def run_acceptance(settings) -> List[Dict]:
    rows = []
    for name, check, ceiling in ACCEPTANCE:
        start = time.perf_counter()
        try:
            ok, error = bool(check(settings)), None
        except Exception as e:
            ok, error = False, str(e)
        elapsed = time.perf_counter() - start
        rows.append({"criterion": name, "passed": ok and elapsed < ceiling, "seconds": round(elapsed, 2),
                     "ceiling": ceiling, "error": error})
    return rows


def collect_golden(settings) -> Dict:
    """Golden numbers for reports/history/baseline.json (same shape the regression tests read)."""
    from src.lefhodge.combinat import Partition
    from src.lefhodge.hodge import first_vanishing_power, kleiman_projectors, molien_holomorphic_invariants
    from src.lefhodge.lefschetz import AbelianDescriptor, AbelianFactor, coniveau_report
    from src.lefhodge.weyl import StandardRep, s_lambda_space
    weyl_cases = [("sp", 2, "1,1"), ("sp", 2, "2"), ("sp", 2, "2,1"), ("sp", 2, "1,1,1"), ("sp", 3, "1,1,1"),
                  ("o", 2, "1,1"), ("o", 2, "2,1,1"), ("o", 2, "2,2,1")]
    coniveau_cases = [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 3)]
    return {
        "weyl_dims": [
            {"kind": kind, "n": n, "lambda": lam,
             "dim": s_lambda_space(StandardRep(kind, n), Partition.parse(lam), settings=settings).dim}
            for kind, n, lam in weyl_cases],
        "coniveau": [
            {"g": g, "m": m, "k": k, "table": coniveau_report(
                AbelianDescriptor.of(AbelianFactor("I", 1, 1, g)), m, k, settings=settings).table.to_dict()}
            for g, m, k in coniveau_cases],
        "molien": [
            {"g": 2, "n": n, "coefficients": list(molien_holomorphic_invariants(2, n, settings=settings).coeffs)}
            for n in (1, 2)],
        "kleiman_ranks": {"2": kleiman_projectors(2, settings=settings).to_dict()["ranks"]},
        "first_vanishing_power": [
            {"g": g, "i": i, "N": first_vanishing_power(g, i, 10)} for g, i in ((2, 2), (3, 3), (3, 1))],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description="lefhodge report generator")
    ap.add_argument("--baseline", action="store_true", help="Save golden numbers as baseline.json")
    ap.add_argument("--config", "-c", default=None, help="Config YAML path")
    ap.add_argument("--skip-tests", action="store_true", help="Only run the acceptance grid")
    args = ap.parse_args()
    sys.path.insert(0, str(ROOT))
    from src.lefhodge.config import engine_settings, load_config
    from src.lefhodge.logging_config import setup_logging
    cfg = load_config(args.config)
    setup_logging(cfg)
    settings = engine_settings(cfg)
    latest_dir = ROOT / "reports" / "latest"
    history_dir = ROOT / "reports" / "history"
    latest_dir.mkdir(parents=True, exist_ok=True)
    history_dir.mkdir(parents=True, exist_ok=True)

    run_id = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    git_commit = get_git_commit()

    # 1) Run tests
    passed, failed, test_output = (0, 0, "(skipped)") if args.skip_tests else run_pytest()

    # 2) Acceptance grid and golden numbers
    acceptance = run_acceptance(settings)
    golden = collect_golden(settings)
    payload = {
        "run_id": run_id,
        "git_commit": git_commit,
        "tests": {"passed": passed, "failed": failed},
        "acceptance": acceptance,
        "golden": golden,
    }

    # 3) Write metrics.json (reports/latest)
    (latest_dir / "metrics.json").write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
    if args.baseline:
        (history_dir / "baseline.json").write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
        print("[make_report] Baseline saved to reports/history/baseline.json")

    # 4) Write REPORT.md
    ok = failed == 0 and all(r["passed"] for r in acceptance)
    md_lines = [
        "# lefhodge Report",
        "",
        f"**Run ID:** {run_id}  \n**Git:** `{git_commit}`  \n**Status:** {'PASS' if ok else 'FAIL'}",
        "",
        "## Summary",
        f"- Tests: {passed} passed, {failed} failed",
        f"- Acceptance: {sum(r['passed'] for r in acceptance)}/{len(acceptance)} criteria pass",
        "",
        "## Acceptance grid",
        "| Criterion | Passed | Seconds | Ceiling |",
        "|-----------|--------|---------|---------|",
    ]
    md_lines += [f"| {r['criterion']} | {r['passed']} | {r['seconds']:.2f} | {r['ceiling']:.0f} |" for r in acceptance]
    md_lines += [
        "",
        "## Test output (tail)",
        "```",
        test_output[-1500:] if test_output else "(no output)",
        "```",
        "",
    ]
    (latest_dir / "REPORT.md").write_text("\n".join(md_lines), encoding="utf-8")
    print("[make_report] Wrote reports/latest/REPORT.md and metrics.json")

    if not ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
