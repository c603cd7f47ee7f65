import json

import pytest
from fastapi.testclient import TestClient

from adeinv.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_healthz(client):
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_invariants_group(client):
    r = client.post("/invariants", json={"kind": "group", "spec": "S4", "K": 4})
    assert r.status_code == 200
    body = r.json()
    assert body["moments"] == ["1", "1", "2", "5", "15"]
    assert body["epsilon"] == "(d_3+d_4)/2+(d_1'-d_1)/4"
    assert body["epsilon_json"]["terms"][0]["base"]["type"] == "orbit"


def test_invariants_graph_json_spec(client):
    spec = json.dumps({"n": 2, "edges": [[0, 1, 2]], "root": 0})
    r = client.post("/invariants", json={"kind": "graph", "spec": spec, "K": 3})
    assert r.status_code == 200
    assert r.json()["moments"] == ["1", "4", "16", "64"]


def test_invariants_graph_catalog(client):
    r = client.post("/invariants", json={"kind": "graph", "spec": "Delta7", "K": 4})
    assert r.status_code == 200
    assert r.json()["moments"] == ["1", "2", "5", "15", "51"]
    assert r.json()["epsilon"] == "(d_2'+d_3)/2"


def test_invariants_dual_and_measure(client):
    r = client.post("/invariants", json={"kind": "dual", "spec": "D3", "K": 2})
    assert r.json()["moments"] == ["1", "2", "6"]
    r = client.post("/invariants", json={"kind": "dual", "spec": "Dinf", "K": 3})
    assert r.json()["moments"] == ["1", "2", "6", "20"]
    r = client.post("/invariants", json={"kind": "measure", "spec": "gamma0", "K": 2})
    assert r.json()["moments"] == ["1", "0", "0"]
    assert r.json()["spectral_atoms"] == [{"value": "0", "weight": "1"}]
    spec = json.dumps({"terms": [{"base": {"type": "lebesgue"}, "density": ["1"]}]})
    r = client.post("/invariants", json={"kind": "measure", "spec": spec, "K": 3})
    assert r.json()["moments"] == ["1", "2", "6", "20"]


def test_invariants_group_cycles_and_json(client):
    r = client.post("/invariants", json={"kind": "group", "spec": "(1 2),(3 4)", "K": 3})
    assert r.status_code == 200
    assert r.json()["moments"] == ["1", "2", "6", "20"]
    spec = json.dumps({"degree": 4, "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]})
    r = client.post("/invariants", json={"kind": "group", "spec": spec, "K": 2})
    assert r.status_code == 200
    assert r.json()["moments"] == ["1", "1", "4"]


def test_invariants_input_errors(client):
    for kind, spec in [("group", "NOPE"), ("graph", "Qtilde3"), ("dual", "Xinf"),
                       ("measure", "nonsense"), ("graph", "{bad json")]:
        r = client.post("/invariants", json={"kind": kind, "spec": spec})
        assert r.status_code == 422, (kind, spec)


def test_tables_endpoint(client):
    r = client.post("/tables", json={"K": 16, "nmax": 8})
    assert r.status_code == 200
    body = r.json()
    names = [t["table"] for t in body["tables"]]
    assert names == ["thm-9.1", "thm-10.2", "thm-11.2", "thm-11.3", "final-1", "final-2"]
    t10 = body["tables"][1]
    assert {"graph": "Atilde7", "objects": ["group:V"],
            "moments": t10["rows"][3]["moments"]} == t10["rows"][3]


def test_tables_corrupt_conflict(client):
    r = client.post("/tables", json={"K": 12, "nmax": 8, "corrupt_graph": "Dtilde6"})
    assert r.status_code == 409
    assert "Dtilde6" in r.json()["detail"]


def test_verify_endpoint(client):
    r = client.post("/verify", json={"suite": "fusion", "seed": 7})
    assert r.status_code == 200
    body = r.json()
    assert body["passed"] is True
    assert all(p["passed"] for p in body["properties"])


def test_match_endpoint(client):
    records = [
        {"name": "z2", "kind": "group", "moments": ["1", "2", "8", "32"]},
        {"name": "a3", "kind": "graph", "moments": ["1", "2", "8", "32"]},
        {"name": "z1", "kind": "group", "moments": ["1", "4", "16", "64"]},
    ]
    r = client.post("/match", json={"records": records, "K": 3})
    assert r.status_code == 200
    assert r.json()["classes"] == [["graph:a3", "group:z2"], ["group:z1"]]
    r = client.post("/match", json={"records": [{"name": "x", "moments": ["1"]}], "K": 3})
    assert r.status_code == 422
