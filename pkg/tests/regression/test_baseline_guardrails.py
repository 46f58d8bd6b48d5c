"""
Regression tests: exact numbers must match the golden values in baseline.json.
"""
import json
from pathlib import Path

import pytest

BASELINE = Path(__file__).resolve().parents[2] / "reports" / "history" / "baseline.json"


def _golden():
    if not BASELINE.exists():
        pytest.skip("No baseline.json yet; create one with make_report.py --baseline")
    golden = json.loads(BASELINE.read_text(encoding="utf-8")).get("golden")
    if not golden:
        pytest.skip("Baseline has no golden numbers")
    return golden


def test_regression_weyl_dimensions():
    from src.lefhodge.combinat import Partition
    from src.lefhodge.weyl import StandardRep, s_lambda_space
    for case in _golden().get("weyl_dims", []):
        rep = StandardRep(case["kind"], case["n"])
        assert s_lambda_space(rep, Partition.parse(case["lambda"])).dim == case["dim"], case


def test_regression_coniveau_tables():
    from src.lefhodge.lefschetz import AbelianDescriptor, AbelianFactor, coniveau_report
    for case in _golden().get("coniveau", []):
        desc = AbelianDescriptor.of(AbelianFactor("I", 1, 1, case["g"]))
        assert coniveau_report(desc, case["m"], case["k"]).table.to_dict() == case["table"], case


def test_regression_molien_series():
    from src.lefhodge.hodge import molien_holomorphic_invariants
    for case in _golden().get("molien", []):
        assert list(molien_holomorphic_invariants(case["g"], case["n"]).coeffs) == case["coefficients"], case


def test_regression_kleiman_ranks():
    from src.lefhodge.hodge import kleiman_projectors
    for g, ranks in _golden().get("kleiman_ranks", {}).items():
        assert kleiman_projectors(int(g)).to_dict()["ranks"] == ranks


def test_regression_first_vanishing_power():
    from src.lefhodge.hodge import first_vanishing_power
    for case in _golden().get("first_vanishing_power", []):
        assert first_vanishing_power(case["g"], case["i"], 10) == case["N"], case
