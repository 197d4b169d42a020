import math

import pytest

import ojam


def reference():
    return ojam.SystemParams(p_s=100.0, p_j=1000.0, n0=0.0, d=1.0, alpha=3.0,
                             lambda_j=0.1, lambda_e=0.01, sigma=0.1, epsilon=0.01)


def test_special_functions():
    assert ojam.gamma(1.0 / 3.0) == pytest.approx(2.678938534707748, rel=1e-12)
    assert ojam.lower_incomplete_gamma(5.0 / 3.0, 1.0) == pytest.approx(0.3319128865900522, rel=1e-12)


def test_closed_forms():
    p = reference()
    assert ojam.connection_outage(p, 1.0, 1.0) == pytest.approx(0.7265378874892124, rel=1e-12)
    assert ojam.secrecy_outage(p, 1.0, 1.0) == pytest.approx(0.013994222028023, rel=1e-12)
    assert ojam.connection_outage(p, 1.0, ojam.beta_b_star(p, 1.0)) == pytest.approx(0.1, abs=1e-12)
    assert ojam.secrecy_outage(p, 1.0, ojam.beta_e_star(p, 1.0)) == pytest.approx(0.01, abs=1e-12)


def test_validation_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        reference().replace(lambda_e=0.0)
    with pytest.raises(KeyError):
        reference().replace(lambda_x=1.0)


def test_optimizer():
    p = ojam.SystemParams.defaults()
    r = ojam.optimize_delta(p)
    assert r.method == "derivative-bisection"
    assert abs(ojam.throughput_derivative(p, r.delta_star)) < 1e-6
    assert r.design.mu >= max(ojam.throughput(p, 10 ** (k / 10.0)).mu for k in range(-90, 13))
    assert ojam.golden_section_delta(p).design.mu == pytest.approx(r.design.mu, rel=1e-9)
    baseline = ojam.random_baseline_throughput(p, ojam.selection_probability(r.delta_star))
    assert baseline.mu <= r.design.mu


def test_monte_carlo_matches_closed_form():
    p = reference()
    co, so = ojam.estimate_outages(p, 1.0, 1.0, 1.0, trials=5000, seed=7, radius=30.0)
    assert abs(co.p_hat - ojam.connection_outage(p, 1.0, 1.0)) < 4 * co.std_err
    assert co.trials == 5000
    assert 0.0 <= so.p_hat <= 1.0


def test_cli_round_trip():
    code, out, err = ojam.run_cli(["analyze", "--delta", str(math.log(2.0))])
    assert code == 0
    header, row = out.strip().split("\n")
    cells = dict(zip(header.split(","), row.split(",")))
    assert float(cells["prob_j"]) == pytest.approx(0.5)
    assert ojam.run_cli(["analyze", "--delta", "1", "--lambda-e", "0"])[0] == 2
