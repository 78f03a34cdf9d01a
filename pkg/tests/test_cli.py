"""The command-line interface: subcommands, output modes, exit codes."""
import json
import subprocess
import sys

import pytest

from norden.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main


@pytest.fixture(scope="module")
def model_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "fam23.txt"
    code = main(["family", "--n", "1", "--lambda", "2,3",
                 "--emit-model", str(path), "--quiet"])
    assert code == EXIT_OK
    return str(path)


@pytest.fixture(scope="module")
def broken_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "broken.txt"
    good = subprocess.run(
        [sys.executable, "-m", "norden", "family", "--n", "1", "--lambda", "2,3"],
        capture_output=True, text=True,
    )
    assert good.returncode == EXIT_OK
    path.write_text(good.stdout.replace("[xi]\n1 0 0", "[xi]\n0 1 0"))
    return str(path)


def test_family_emits_parseable_model(model_path, capsys):
    assert main(["validate", model_path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ok" in out


def test_family_stdout_and_json(capsys):
    assert main(["family", "--n", "1", "--lambda", "1/2,-3"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "[brackets]" in text and "1/2" in text
    assert main(["family", "--n", "1", "--lambda", "1/2,-3", "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj["dim"] == 3


def test_family_bad_params():
    assert main(["family", "--n", "1", "--lambda", "1,2,3", "--quiet"]) == EXIT_INPUT
    assert main(["family", "--n", "0", "--lambda", "1,2", "--quiet"]) == EXIT_INPUT
    assert main(["family", "--n", "1", "--lambda", "x,1", "--quiet"]) == EXIT_INPUT
    assert main(["family", "--n", "1", "--lambda", "1/0,1", "--quiet"]) == EXIT_INPUT


def test_validate_json_output(model_path, capsys):
    assert main(["validate", model_path, "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"valid": True, "violations": []}


def test_validate_broken_model(broken_path, capsys):
    assert main(["validate", broken_path, "--json"]) == EXIT_FAIL
    obj = json.loads(capsys.readouterr().out)
    assert obj["valid"] is False
    assert any(v["rule"] == "eta_xi" for v in obj["violations"])


def test_validate_missing_file(capsys):
    assert main(["validate", "/nonexistent/nowhere.txt"]) == EXIT_INPUT
    assert "cannot read" in capsys.readouterr().err


def test_report_text_and_exit_code(model_path, capsys):
    assert main(["report", model_path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "tau = 10" in out
    assert "F11 = yes" in out


def test_report_json(model_path, capsys):
    assert main(["report", model_path, "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj["invariants"]["tau"] == "10"
    assert obj["flags"]["isotropic_kahler"] is False


def test_report_rejects_invalid_model(broken_path, capsys):
    assert main(["report", broken_path, "--json"]) == EXIT_FAIL
    obj = json.loads(capsys.readouterr().out)
    assert obj["valid"] is False


def test_report_quiet(model_path, capsys):
    assert main(["report", model_path, "--quiet"]) == EXIT_OK
    assert capsys.readouterr().out == ""


def test_identities_output(model_path, capsys):
    assert main(["identities", model_path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[pass] norm_chain" in out
    assert "[ n/a] phi_kahler_criterion_closedness" in out
    assert main(["identities", model_path, "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj["norm_chain"]["passed"] is True


def test_section_xi_plane(model_path, capsys):
    assert main(["section", model_path, "--x", "1,0,0", "--y", "0,1,0",
                 "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj["kind"] == "xi"
    assert obj["sectional_curvature"] == "-4"


def test_section_degenerate_plane_is_not_an_error(model_path, capsys):
    assert main(["section", model_path, "--x", "1,0,0", "--y", "0,1,1",
                 "--json"]) == EXIT_OK
    obj = json.loads(capsys.readouterr().out)
    assert obj["sectional_curvature"] is None
    assert "degenerate" in obj["note"]


def test_section_dependent_vectors_are_input_error(model_path, capsys):
    assert main(["section", model_path, "--x", "1,0,0", "--y", "2,0,0",
                 "--quiet"]) == EXIT_INPUT


def test_section_bad_vector_syntax(model_path):
    assert main(["section", model_path, "--x", "1,0", "--y", "0,1,0",
                 "--quiet"]) == EXIT_INPUT
    assert main(["section", model_path, "--x", "a,b,c", "--y", "0,1,0",
                 "--quiet"]) == EXIT_INPUT


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "norden", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    for sub in ("validate", "report", "family", "identities", "section"):
        assert sub in proc.stdout


def test_console_script_round_trip(tmp_path):
    """family --emit-model | validate through the installed script."""
    path = tmp_path / "m.json"
    gen = subprocess.run(
        ["norden", "family", "--n", "2", "--lambda", "1,0,0,2", "--json",
         "--emit-model", str(path)],
        capture_output=True, text=True,
    )
    assert gen.returncode == EXIT_OK
    check = subprocess.run(
        ["norden", "validate", str(path), "--quiet"],
        capture_output=True, text=True,
    )
    assert check.returncode == EXIT_OK
