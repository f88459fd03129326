import logging

from fastapi.testclient import TestClient

from app.main import app

client = TestClient(app)


def test_health():
    log = logging.getLogger()
    log.debug('Testing the health check')

    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"
    assert response.headers["X-Frame-Options"] == "DENY"


def test_transform():
    log = logging.getLogger()
    log.debug('Testing the transform endpoint')

    response = client.post(
        "/geometry/transform",
        json={"context": {"sigma": -1}, "document": {"g": ["2", "1", "1", "1"], "point": ["0", "1"]}},
    )
    log.debug(f'Response: {response.json()}')
    assert response.status_code == 200
    assert response.json()["point"] == ["3/2", "1/2"]


def test_measure_decimals():
    log = logging.getLogger()
    log.debug('Testing JSON numbers are read as written')

    response = client.post(
        "/geometry/measure",
        json={"context": {"sigma": 0}, "document": {"kind": "distance", "points": [[0.5, 1], [0.25, 2]]}},
    )
    assert response.status_code == 200
    assert response.json()["value"] == "1/16"


def test_invalid_requests():
    log = logging.getLogger()
    log.debug('Testing invalid requests')

    response = client.post("/geometry/measure", json={"context": {"sigma": 2}, "document": {}})
    assert response.status_code == 422

    response = client.post("/geometry/measure", json={"backend": "decimal", "document": {}})
    assert response.status_code == 422

    response = client.post("/geometry/measure", json={"document": {"kind": "distance"}})
    assert response.status_code == 422
    assert "points" in response.json()["detail"]

    response = client.post("/geometry/cayley", json={})
    assert response.status_code == 422


def test_verify():
    log = logging.getLogger()
    log.debug('Testing the verify endpoint')

    response = client.post("/geometry/verify", json={"trials": 0})
    assert response.status_code == 200
    assert response.json()["results"] == []

    response = client.post("/geometry/verify", json={"seed": 3, "trials": 1, "only": "clifford"})
    assert response.status_code == 200
    report = response.json()
    assert report["ok"] is True
    assert report["seed"] == 3

    response = client.post("/geometry/verify", json={"trials": 1000})
    assert response.status_code == 422
