"""HTTP service endpoints against the in-process library results."""

import numpy as np
import pytest
from fastapi.testclient import TestClient

import paritynet.runner as runner_module
from paritynet import COLUMNS, __version__, figure_preset, simulate
from paritynet.scenarios import ScenarioConfig
from paritynet.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}


def test_run_matches_library(client):
    response = client.post("/run", json={
        "preset": "fig2", "state": "psi+", "delta": -0.1,
        "tmax": 10.0, "samples": 21,
    })
    assert response.status_code == 200
    payload = response.json()
    assert payload["columns"] == list(COLUMNS)
    scenario = ScenarioConfig(state="psi+", params=figure_preset("fig2", -0.1),
                              t_max=10.0, n_samples=21)
    series = simulate(scenario)
    assert np.abs(np.asarray(payload["rows"]) - series.rows).max() == 0.0
    assert payload["metadata"]["state"] == "psi+"


def test_run_defaults_follow_preset_window(client):
    response = client.post("/run", json={"preset": "fig3", "samples": 3})
    assert response.status_code == 200
    rows = response.json()["rows"]
    assert rows[-1][0] == 30.0  # fig3 default window
    assert len(rows) == 3


def test_run_without_preset_requires_full_parameters(client):
    response = client.post("/run", json={"state": "psi+"})
    assert response.status_code == 422
    response = client.post("/run", json={
        "state": "psi+", "omega0": 0.5, "upsilon": 0.4,
        "lambdas": [-0.2, -0.2, -0.2], "gammas": [0.1, 0.1, 0.1], "tmax": 5.0,
        "samples": 11,
    })
    assert response.status_code == 200


def test_run_validation_failures(client):
    bad = [
        {"preset": "fig4"},
        {"preset": "fig2", "state": "custom"},  # no amplitudes
        {"preset": "fig2", "samples": 1},
        {"preset": "fig2", "tmax": -1.0},
        {"preset": "fig2", "lambdas": [-0.6, 0.0, 0.0]},  # domain violation
        {"preset": "fig2", "amplitudes": [[1.0, 0.0]] * 5},  # amplitudes w/o custom
    ]
    for body in bad:
        assert client.post("/run", json=body).status_code == 422, body


def test_run_custom_state(client):
    s = 1 / np.sqrt(2)
    response = client.post("/run", json={
        "preset": "fig2", "state": "custom", "samples": 5,
        "amplitudes": [[s, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, s]],
    })
    assert response.status_code == 200
    assert response.json()["metadata"]["amplitudes"] == [[s, 0.0], [0.0, 0.0],
                                                         [0.0, 0.0], [0.0, 0.0],
                                                         [0.0, s]]


def test_run_oracle_flag_adds_metadata(client):
    response = client.post("/run", json={
        "preset": "fig2", "samples": 11, "tmax": 5.0, "oracle": True,
    })
    assert response.status_code == 200
    assert response.json()["metadata"]["oracle_max_deviation"] <= 1e-8


def test_run_oracle_corruption_is_internal_error(client, monkeypatch):
    original = runner_module.propagate_closed_form

    def corrupted(rho0, basis, rates, t):
        return original(rho0, basis, rates, t).conj()

    monkeypatch.setattr(runner_module, "propagate_closed_form", corrupted)
    response = client.post("/run", json={
        "preset": "fig2", "samples": 11, "tmax": 5.0, "oracle": True,
    })
    assert response.status_code == 500


def test_sweep_returns_one_series_per_point(client):
    response = client.post("/sweep", json={
        "preset": "fig2", "samples": 5, "tmax": 5.0,
        "grid": {"delta": [-0.1, 0.0, 0.1], "upsilon": [0.5, 1.0]},
    })
    assert response.status_code == 200
    series = response.json()["series"]
    assert len(series) == 6
    coords = [s["metadata"]["sweep_coords"] for s in series]
    assert {"delta": -0.1, "upsilon": 0.5} in coords
    assert all(set(c) == {"delta", "upsilon"} for c in coords)


def test_sweep_rejects_unknown_grid_key(client):
    response = client.post("/sweep", json={
        "preset": "fig2", "samples": 5, "grid": {"eta": [1.0]},
    })
    assert response.status_code == 422
    response = client.post("/sweep", json={"preset": "fig2", "samples": 5, "grid": {}})
    assert response.status_code == 422


def test_verify_endpoint(client):
    response = client.post("/verify", json={
        "preset": "fig2", "state": "psi+", "tmax": 10.0, "samples": 11,
    })
    assert response.status_code == 200
    report = response.json()
    assert report["passed"] is True
    assert report["max_deviation"] <= 1e-8
    assert report["threshold"] == 1e-8
    assert report["reduction_ok"] is True
