"""Command-line interface contract."""

import json

import pytest

from lensurgery.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_criterion_pass_example(capsys):
    code, out, _ = run(capsys, "criterion", "16", "7", "3")
    assert code == 0
    assert out.strip() == "psi=5 phi=0 value=-15 pass"


def test_criterion_noncoprime_example(capsys):
    code, out, _ = run(capsys, "criterion", "16", "7", "4")
    assert code == 1
    assert out.strip() == "u=4: fail (non-coprime)"


def test_criterion_fail_exit_code(capsys):
    code, out, _ = run(capsys, "criterion", "12", "5", "1")
    assert code == 1
    assert out.strip().endswith("fail")


def test_criterion_bad_input_is_usage_error(capsys):
    code, _, err = run(capsys, "criterion", "12", "4", "1")
    assert code == 2
    assert "error:" in err


def test_decide_yes_exit_and_json(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code = main(["decide", "5", "1", "--json", "-o", str(out_file)])
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["lens"] == {"p": 5, "q": 1, "canonical_q": 1}
    assert data["obtainable"] == "yes"
    assert data["witnesses"]
    assert data["calibration_id"]
    assert data["budget"]["max_nodes"] == 30000
    assert isinstance(data["per_u"], list)


def test_decide_no_exit(capsys):
    code, out, _ = run(capsys, "decide", "8", "3")
    assert code == 1
    assert "obtainable: no" in out


def test_decide_inconclusive_exit(capsys):
    code, out, _ = run(capsys, "decide", "5", "1", "--max-nodes", "1",
                       "--jones-cap", "1", "--headroom", "0")
    assert code in (0, 3)
    if code == 3:
        assert "obtainable: inconclusive" in out


def test_decide_usage_error(capsys):
    code, _, err = run(capsys, "decide", "6", "2")
    assert code == 2
    assert "error:" in err


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "decide", "5", "1", "--bogus")
    assert code == 2


def test_diagram_raw_headers(capsys):
    code, out, _ = run(capsys, "diagram", "5", "1", "--raw")
    assert code == 0
    assert out.splitlines()[0].endswith("components=1")

    code, out, _ = run(capsys, "diagram", "4", "1", "--raw")
    assert code == 0
    assert out.splitlines()[0].endswith("components=2")


def test_diagram_requires_exactly_one_target(capsys):
    code, _, err = run(capsys, "diagram", "5", "1")
    assert code == 2
    code, _, err = run(capsys, "diagram", "5", "1", "2", "--raw")
    assert code == 2


def test_diagram_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "diagram", "16", "7", "3", "--mode", "crossing+")
    _, second, _ = run(capsys, "diagram", "16", "7", "3", "--mode", "crossing+")
    assert first == second
    assert first.startswith("PD ")


def test_invariants_round_trip(capsys, tmp_path):
    pd_file = tmp_path / "knot.pd"
    code = main(["diagram", "5", "2", "--raw", "-o", str(pd_file)])
    assert code == 0
    code, out, _ = run(capsys, "invariants", str(pd_file))
    assert code == 0
    assert "crossings: 8" in out
    assert "components: 1" in out
    assert "determinant: 5" in out
    assert "jones[t]:" in out


def test_invariants_missing_file(capsys):
    code, _, err = run(capsys, "invariants", "/nonexistent/knot.pd")
    assert code == 2
    assert "error:" in err


@pytest.mark.slow
def test_klein_scan_cli(capsys):
    code, out, _ = run(capsys, "klein", "2", "5")
    assert code == 0
    assert "yes-set: L(16,7) L(20,9)" in out
