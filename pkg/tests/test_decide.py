"""End-to-end decision procedure."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensurgery.decide import (DecisionReport, cross_check_torus, decide,
                               klein_scan)
from lensurgery.lens import LensParams
from lensurgery.unknot import SearchBudget

TINY = SearchBudget(max_nodes=5, headroom=0, jones_cap=8)


def test_five_one_is_obtainable():
    report = decide(5, 1)
    assert report.obtainable == "yes"
    assert set(report.witnesses) >= {2}
    for entry in report.per_u:
        if entry.status == "witness":
            assert entry.certificate is not None
            assert entry.witness_mode is not None


def test_eight_three_is_not_obtainable():
    report = decide(8, 3)
    assert report.obtainable == "no"
    assert report.witnesses == ()
    # every index was ruled out, none left hanging
    assert all(e.status == "excluded" for e in report.per_u)


def test_five_two_is_not_obtainable():
    # all indices pass the numeric filter here, so the refutation must
    # come from the diagram side: no candidate has trivial determinant.
    report = decide(5, 2)
    assert report.obtainable == "no"


def test_decide_canonicalizes_input():
    a = decide(5, 4, TINY)
    b = decide(5, 1, TINY)
    assert a.canonical == b.canonical == LensParams(5, 1)


def test_report_json_round_trip():
    report = decide(5, 1)
    blob = json.dumps(report.to_dict())
    again = DecisionReport.from_dict(json.loads(blob))
    assert again == report


def test_tiny_budget_never_claims_no_without_proof():
    report = decide(16, 7, TINY)
    assert report.obtainable in ("yes", "inconclusive")
    for entry in report.per_u:
        assert entry.status in ("witness", "excluded", "unknown")


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=2, max_value=12))
def test_trichotomy_invariants(p):
    for q in range(1, p):
        if __import__("math").gcd(p, q) != 1:
            continue
        report = decide(p, q, TINY)
        statuses = {e.status for e in report.per_u}
        if report.obtainable == "yes":
            assert "witness" in statuses
            assert report.witnesses
        elif report.obtainable == "no":
            assert statuses <= {"excluded"}
            assert not report.witnesses
        else:
            assert "unknown" in statuses


def test_klein_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        klein_scan(5, 3)
    with pytest.raises(ValueError):
        klein_scan(1, 4)


def test_cross_check_requires_yes_verdict():
    report = decide(8, 3)
    with pytest.raises(ValueError):
        cross_check_torus(report)


def test_cross_check_requires_known_torus_presentation():
    report = decide(5, 1)
    with pytest.raises(ValueError):
        cross_check_torus(report)
