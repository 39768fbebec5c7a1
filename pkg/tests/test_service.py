import pytest
from fastapi.testclient import TestClient

from sortmatch import SortingPuzzle, validate_grid
from sortmatch.service import create_app

FIG2_FIRST = [[1, 6, 8], [7, 5, 4], [9, 3, 2]]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_check_unsolvable(client):
    r = client.post("/check", json={"n": 3, "rows": "DAD", "cols": "DDA"})
    assert r.status_code == 200
    body = r.json()
    assert body["solvable"] is False
    assert set(body["witness"]) == {"rows", "cols"}


def test_check_solvable_has_no_witness(client):
    body = client.post("/check", json={"n": 3, "rows": "ADD", "cols": "ADD"}).json()
    assert body == {"solvable": True, "witness": None}


def test_solve_returns_valid_grid(client):
    r = client.post("/solve", json={"n": 3, "rows": "ADD", "cols": "ADD"})
    assert r.status_code == 200
    grid = tuple(tuple(row) for row in r.json()["grid"])
    assert validate_grid(SortingPuzzle(3, "ADD", "ADD"), grid)
    check = client.post(
        "/validate", json={"n": 3, "rows": "ADD", "cols": "ADD", "grid": r.json()["grid"]}
    ).json()
    assert check["valid"] and check["complete"]


def test_solve_conflict_on_unsolvable(client):
    r = client.post("/solve", json={"n": 3, "rows": "DAD", "cols": "DDA"})
    assert r.status_code == 409
    assert r.json()["witness"] is not None


def test_count(client):
    body = client.post("/count", json={"n": 3, "rows": "ADD", "cols": "ADD"}).json()
    assert body == {"count": "60", "method": "formula"}


def test_repair(client):
    body = client.post("/repair", json={"n": 3, "rows": "DAD", "cols": "DDA"}).json()
    assert body["cost"] == 1
    assert body["strategy"] == "row-uniform"
    assert body["target"]["rows"] == "DDD"


def test_validate_fig2(client):
    body = client.post(
        "/validate", json={"n": 3, "rows": "ADD", "cols": "ADD", "grid": FIG2_FIRST}
    ).json()
    assert body["valid"] is True and body["violations"] == []


def test_validate_flags_hopeless_placement(client):
    body = client.post(
        "/validate",
        json={
            "n": 3,
            "rows": "AAA",
            "cols": "AAA",
            "grid": [[9, None, None], [None, None, None], [None, None, None]],
        },
    ).json()
    kinds = {(v["kind"], v["line"]) for v in body["violations"]}
    assert kinds == {("row", 1), ("col", 1)}


def test_hint_solvable(client):
    body = client.post("/hint", json={"n": 3, "rows": "ADD", "cols": "ADD"}).json()
    assert body["value"] == 1 and body["cell"] == [1, 1]
    partial = client.post(
        "/hint",
        json={
            "n": 3,
            "rows": "ADD",
            "cols": "ADD",
            "grid": [[1, None, None], [None, None, None], [None, None, None]],
        },
    ).json()
    assert partial["value"] == 2


def test_hint_unsolvable_suggests_repair(client):
    body = client.post("/hint", json={"n": 3, "rows": "DAD", "cols": "DDA"}).json()
    assert body["cell"] is None
    assert body["repair"]["cost"] == 1


def test_hint_complete_board(client):
    body = client.post(
        "/hint", json={"n": 3, "rows": "ADD", "cols": "ADD", "grid": FIG2_FIRST}
    ).json()
    assert body["cell"] is None and "complete" in body["reason"]


def test_permutation_solve(client):
    r = client.post(
        "/permutation/solve",
        json={
            "n": 3,
            "rho": [[1, 2, 3], [1, 2, 3], [1, 2, 3]],
            "gamma": [[1, 2, 3], [2, 1, 3], [1, 2, 3]],
        },
    )
    assert r.status_code == 200
    col2 = [row[1] for row in r.json()["grid"]]
    assert col2[1] < col2[0] < col2[2]


def test_permutation_solve_conflict(client):
    r = client.post(
        "/permutation/solve",
        json={"n": 2, "rho": [[1, 2], [2, 1]], "gamma": [[2, 1], [1, 2]]},
    )
    assert r.status_code == 409
    assert len(r.json()["cycle"]) >= 4


def test_malformed_is_400(client):
    assert client.post("/check", json={"rows": "ADD"}).status_code == 400
    assert client.post("/check", json={"n": 3, "rows": "ADX", "cols": "ADD"}).status_code == 400
    bad_grid = {"n": 2, "rows": "AD", "cols": "AD", "grid": [[1, 1], [2, None]]}
    assert client.post("/validate", json=bad_grid).status_code == 400


def test_budget_exceeded_is_422():
    tiny = TestClient(create_app(budget=3))
    r = tiny.post("/count", json={"n": 4, "rows": "AAAA", "cols": "AADA"})
    assert r.status_code == 422


def test_responses_are_pure(client):
    body = {"n": 3, "rows": "DAD", "cols": "DDA"}
    first = client.post("/check", json=body)
    second = client.post("/check", json=body)
    assert first.content == second.content
