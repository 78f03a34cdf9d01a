"""The one-stop geometry report: frozen content, determinism, and both
serialized forms."""
import json
from fractions import Fraction as Fr

import pytest

from norden import (
    all_identities_ok,
    report_to_json,
    report_to_json_dict,
    report_to_text,
    run_report,
)


@pytest.fixture(scope="module")
def rep23(fam23):
    return run_report(fam23.model)


def test_report_header_and_flags(rep23):
    assert rep23.dim == 3 and rep23.n == 1
    assert rep23.metric_signature == (2, 1, 0)
    assert rep23.associated_signature == (2, 1, 0)
    assert rep23.is_f11 and not rep23.is_f0
    assert not rep23.normal
    assert rep23.omega_closed and rep23.omega_star_closed
    assert not rep23.isotropic_kahler
    assert not rep23.curvature_phi_kahler


def test_report_frozen_invariants(rep23):
    assert rep23.invariants == {
        "tau": Fr(10),
        "tau_star": Fr(-12),
        "tau_double_star": Fr(0),
        "nabla_phi_square_norm": Fr(10),
        "nabla_eta_square_norm": Fr(-5),
        "nijenhuis_square_norm": Fr(-10),
        "omega_square_norm": Fr(5),
        "div_phi_omega_vec": Fr(5),
        "ricci_xi_xi": Fr(5),
        "s_trace": Fr(5),
    }


def test_report_identities_all_ok(rep23):
    assert all_identities_ok(rep23)


def test_report_tensor_inventory(rep23):
    assert set(rep23.tensors) == {
        "gamma", "fundamental", "theta", "theta_star", "omega", "omega_star",
        "omega_vec", "nabla_eta", "nijenhuis", "s", "psi4_s", "riemann",
        "ricci", "associated_metric",
    }


def test_report_is_deterministic(fam23):
    a = run_report(fam23.model)
    b = run_report(fam23.model)
    assert report_to_json(a) == report_to_json(b)
    assert report_to_text(a) == report_to_text(b)


def test_json_rendering(rep23):
    obj = json.loads(report_to_json(rep23))
    assert obj["invariants"]["tau"] == "10"
    assert obj["invariants"]["nabla_eta_square_norm"] == "-5"
    assert obj["classes"]["f11"] is True
    assert obj["classes"]["f0"] is False
    # undecidable classes are reported as unknown, not guessed
    for i in range(1, 11):
        assert obj["classes"][f"f{i}"] == "unknown"
    assert obj["flags"]["isotropic_kahler"] is False
    assert obj["identities"]["norm_chain"]["passed"] is True
    assert obj["identities"]["phi_kahler_criterion_closedness"]["applicable"] is False
    # tensors serialize as nested arrays of "p/q" strings
    assert obj["tensors"]["ricci"]["components"][0][0] == "5"
    assert obj["tensors"]["gamma"]["variance"] == "udd"


def test_json_dict_matches_json_string(rep23):
    assert json.loads(report_to_json(rep23)) == report_to_json_dict(rep23)


def test_text_rendering(rep23):
    text = report_to_text(rep23)
    assert "dim = 3 (n = 1)" in text
    assert "tau = 10" in text
    assert "F11 = yes" in text
    assert "[pass] norm_chain" in text
    assert "[ n/a] phi_kahler_criterion_closedness" in text
    assert "ricci[0,0] = 5" in text


def test_flat_member_report(fam_zero):
    rep = run_report(fam_zero.model)
    assert rep.is_f0 and rep.is_f11
    assert rep.normal
    assert rep.isotropic_kahler
    assert rep.curvature_phi_kahler
    assert rep.invariants["tau"] == 0
    assert rep.tensors["riemann"].is_zero()
    assert all_identities_ok(rep)


def test_heisenberg_report(heis):
    rep = run_report(heis.model)
    assert not rep.is_f11
    assert rep.normal
    assert rep.invariants["tau"] == Fr(1, 2)
    assert rep.invariants["nijenhuis_square_norm"] == 0
    assert all_identities_ok(rep)  # gated identities are n/a, none fail
    obj = json.loads(report_to_json(rep))
    assert obj["identities"]["norm_chain"]["applicable"] is False
