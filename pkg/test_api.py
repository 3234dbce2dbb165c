"""Tests for the HTTP API."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from fastapi.testclient import TestClient

from main import app

TRIANGLE = "3 3\n1 2\n2 3\n1 3"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_ratio(client):
    body = client.get("/api/v1/ratio/cos").json()
    assert body["approximation_ratio"] == pytest.approx(0.8786, abs=1e-3)
    assert body["class_g"]["passed"]

    body = client.get("/api/v1/ratio/cos", params={"lo": 2.5}).json()
    assert body["interval"] == pytest.approx([2.5, 3.141592653589793])
    assert body["interval_ratio"] > 0.8786


def test_ratio_unknown_coupling(client):
    assert client.get("/api/v1/ratio/tanh").status_code == 422


def test_generate(client):
    body = client.get("/api/v1/generate/hypercube", params={"d": 3}).json()
    assert body["n"] == 8
    assert body["edges"] == 12
    assert body["edge_list"].startswith("8 12\n")
    assert client.get("/api/v1/generate/cubic", params={"n": 5}).status_code == 422


def test_oracle(client):
    body = client.post("/api/v1/oracle", json={"edge_list": TRIANGLE}).json()
    assert body["value"] == 2
    assert body["optimal_count"] == 3


def test_oracle_parse_error(client):
    response = client.post("/api/v1/oracle", json={"edge_list": "1 1"})
    assert response.status_code == 422
    assert "line 1" in response.json()["detail"]


def test_solve(client):
    payload = {"edge_list": TRIANGLE, "config": {"coupling": "cos", "mu": 0.0, "restarts": 4}}
    body = client.post("/api/v1/solve", json=payload).json()
    assert body["best"]["cut"] == 2
    assert len(body["restarts"]) == 4
    assert body["config"]["output"] is None


def test_solve_rejects_unknown_coupling(client):
    payload = {"edge_list": TRIANGLE, "config": {"coupling": "sin"}}
    assert client.post("/api/v1/solve", json=payload).status_code == 422
