import json

import pytest

from quswap import verify


@pytest.fixture(scope="module")
def small_suite():
    return verify.run_suite("all", d_max=4, n_max=8)


def test_all_checks_pass(small_suite):
    failed = [r.check for r in small_suite if not r.passed]
    assert failed == []


def test_pass_flag_matches_metric(small_suite):
    for r in small_suite:
        if r.kind == "deviation":
            assert r.passed == (r.metric <= r.tolerance)
        else:
            assert r.passed == (r.metric >= r.tolerance)


def test_reports_are_sorted(small_suite):
    keys = [(r.check, json.dumps(r.to_dict()["params"])) for r in small_suite]
    assert keys == sorted(keys)


def test_report_serialization_field_order(small_suite):
    d = small_suite[0].to_dict()
    assert list(d) == [
        "check", "params", "kind", "metric", "tolerance", "passed", "wall_ms",
    ]
    json.dumps(d)  # must be serializable


def test_reports_deterministic_modulo_walltime():
    def strip(reports):
        out = []
        for r in reports:
            d = r.to_dict()
            d.pop("wall_ms")
            out.append(d)
        return out

    first = strip(verify.run_suite("qudit", d_max=5))
    second = strip(verify.run_suite("qudit", d_max=5))
    assert json.dumps(first) == json.dumps(second)


def test_suite_selection():
    qudit = verify.run_suite("qudit", d_max=3)
    assert all("n_max" not in r.params for r in qudit)
    fock_only = verify.run_suite("fock", n_max=4)
    assert all("d" not in r.params for r in fock_only)
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_exchange_convergence_ladder_respects_cutoff():
    report = verify.check_exchange_convergence(8)
    assert report.params["cutoffs"] == [8]
    assert report.passed


def test_analytic_tol_env_override(monkeypatch):
    monkeypatch.setenv("QUSWAP_TOL", "1e-6")
    assert verify.analytic_tol() == 1e-6
    report = verify.check_clone_closed_form_norm(6)
    assert report.tolerance == 1e-6
    monkeypatch.delenv("QUSWAP_TOL")
    assert verify.analytic_tol() == 1e-10


def test_exact_checks_ignore_env_tolerance(monkeypatch):
    monkeypatch.setenv("QUSWAP_TOL", "1.0")
    report = verify.check_swap_decomposition(4)
    assert report.tolerance == 0.0
    assert report.passed
