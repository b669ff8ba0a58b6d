"""
Tests for the HTTP front end
"""

from fastapi.testclient import TestClient

from api.main import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_normalize():
    data = client.get("/api/normalize", params={"word": "eaB"}).json()
    assert data["normal_form"] == "e^1 a^1 | stg"
    assert (data["eps_exp"], data["alpha_bit"], data["core"]) == (1, 1, "stg")


def test_normalize_bad_letter():
    response = client.get("/api/normalize", params={"word": "gq"})
    assert response.status_code == 400
    assert "'q'" in response.json()["detail"]


def test_equal():
    assert client.get("/api/equal", params={"left": "bB", "right": ""}).json()["equal"] is True
    assert client.get("/api/equal", params={"left": "b", "right": "B"}).json()["equal"] is False


def test_order():
    assert client.get("/api/order", params={"word": "gbs"}).json()["order"] == 2
    assert client.get("/api/order", params={"word": "b"}).json()["order"] == "infinite"


def test_member():
    data = client.get("/api/member", params={"word": "gb", "subgroup": "StabPairPointwise"}).json()
    assert data["member"] is True
    data = client.get("/api/member", params={"word": "s", "subgroup": "StabPairPointwise"}).json()
    assert data["member"] is False
    response = client.get("/api/member", params={"word": "s", "subgroup": "Nope"})
    assert response.status_code == 400


def test_amalgam():
    data = client.get("/api/amalgam", params={"word": "gs"}).json()
    assert data["prefix"] == "e^0 a^0 | 1"
    assert data["syllables"] == [{"side": "A", "core": "g"}, {"side": "B", "core": "s"}]


def test_classify():
    data = client.get("/api/classify", params={"word": "gs"}).json()
    assert data["kind"] == "hyperbolic"
    assert data["translation_length"] == 2
    data = client.get("/api/classify", params={"word": "b"}).json()
    assert data["summary"] == "elliptic black:1"


def test_primitive():
    data = client.get("/api/primitive", params={"word": "xxy"}).json()
    assert data["primitive"] is True
    assert data["disk_class"] == "primitive"
    assert data["exponent_sums"] == [2, 1]
    data = client.get("/api/primitive", params={"word": "xyXY"}).json()
    assert data["disk_class"] == "non-primitive"
    assert client.get("/api/primitive", params={"word": "xa"}).status_code == 400


def test_ball():
    response = client.get("/api/ball", params={"radius": 1, "branch_bound": 3})
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/plain")
    assert response.text.startswith("graph tree {")


def test_ball_caps():
    assert client.get("/api/ball", params={"radius": 7}).status_code == 422
    assert client.get("/api/ball", params={"radius": -1}).status_code == 422


def test_verify_caps():
    assert client.get("/api/verify", params={"oracle_length": 13}).status_code == 422


def test_verify_rejects_empty_ranges():
    assert client.get("/api/verify", params={"oracle_length": 0}).status_code == 422
    assert client.get("/api/verify", params={"radius": 0}).status_code == 422
