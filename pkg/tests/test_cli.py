import json

import pytest

from sortmatch import reduction_from_json, validate_grid
from sortmatch.cli import main
from sortmatch.model import parse_puzzle_text


@pytest.fixture()
def puzzle_file(tmp_path):
    def write(text, name="puzzle.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_unsolvable(puzzle_file, capsys):
    code, out, _ = run(capsys, "check", puzzle_file("3\nDAD\nDDA"))
    assert code == 1
    assert out.startswith("UNSOLVABLE")
    assert "rows=" in out and "cols=" in out


def test_check_solvable(puzzle_file, capsys):
    code, out, _ = run(capsys, "check", puzzle_file("3\nADD\nADD"))
    assert code == 0 and out.strip() == "SOLVABLE"


def test_census(capsys):
    code, out, _ = run(capsys, "census", "4")
    assert code == 0 and out.strip() == "78"


def test_count_formula(puzzle_file, capsys):
    code, out, _ = run(capsys, "count", puzzle_file("3\nADD\nADD"))
    assert code == 0 and out.strip() == "60 (formula)"


def test_solve_then_check_grid_round_trip(puzzle_file, capsys, tmp_path):
    code, out, _ = run(capsys, "solve", puzzle_file("3\nADD\nADD"))
    assert code == 0
    puzzle, grid = parse_puzzle_text(out)
    assert grid is not None and validate_grid(puzzle, grid)
    solved = tmp_path / "solved.txt"
    solved.write_text(out)
    code, out, _ = run(capsys, "check", str(solved), "--grid")
    assert code == 0 and out.strip() == "VALID"


def test_solve_unsolvable_exit_code(puzzle_file, capsys):
    code, _, err = run(capsys, "solve", puzzle_file("3\nDAD\nDDA"))
    assert code == 1 and "unsolvable" in err


def test_repair_output(puzzle_file, capsys):
    code, out, _ = run(capsys, "repair", puzzle_file("3\nDAD\nDDA"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "cost 1 (row-uniform)"
    target, _ = parse_puzzle_text("\n".join(lines[1:]))
    assert target.rows == "DDD" and target.cols == "DDA"


def test_unique_json(puzzle_file, capsys):
    code, out, _ = run(capsys, "unique", puzzle_file("5\nAAAAA\nADADA"), "--json")
    assert code == 0 and json.loads(out) == {"unique": True}


def test_enumerate_limit(puzzle_file, capsys):
    code, out, _ = run(capsys, "enumerate", puzzle_file("2\nAD\nAD"), "--limit", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"solutions": [[[1, 3], [4, 2]], [[1, 4], [3, 2]]]}


def test_permutation_solve(tmp_path, capsys):
    path = tmp_path / "pp.json"
    path.write_text(json.dumps({
        "n": 3,
        "rho": [[1, 2, 3], [1, 2, 3], [1, 2, 3]],
        "gamma": [[1, 2, 3], [2, 1, 3], [1, 2, 3]],
    }))
    code, out, _ = run(capsys, "permutation-solve", str(path))
    assert code == 0
    grid = [[int(v) for v in line.split()] for line in out.strip().splitlines()]
    col2 = [row[1] for row in grid]
    assert col2[1] < col2[0] < col2[2]


def test_reduce_writes_verifiable_json(tmp_path, capsys):
    src = tmp_path / "h.json"
    src.write_text(json.dumps({
        "n": 5,
        "edges": [[2, 1], [2, 4], [5, 2], [5, 4], [4, 3], [1, 3], [5, 1], [4, 1], [3, 5]],
    }))
    out_path = tmp_path / "g.json"
    code, out, err = run(capsys, "reduce", "--in", str(src), "--out", str(out_path), "--verify")
    assert code == 0
    assert out.count("PASS") == 5 and "FAIL" not in out
    data = json.loads(out_path.read_text())
    assert data["N"] == 29
    back = reduction_from_json(data)
    assert len(back.key_cells) == 5


def test_byte_identical_output(puzzle_file, capsys):
    path = puzzle_file("3\nADD\nADD")
    results = [run(capsys, verb, path) for verb in ("solve", "count") for _ in range(2)]
    assert results[0] == results[1]
    assert results[2] == results[3]


def test_input_error_exit_code(puzzle_file, capsys):
    code, _, err = run(capsys, "check", puzzle_file("3\nADX\nADD"))
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "check", "/nonexistent/file.txt")
    assert code == 2


def test_budget_env_override(puzzle_file, capsys, monkeypatch):
    monkeypatch.setenv("SORTMATCH_BUDGET", "3")
    code, _, err = run(capsys, "count", puzzle_file("4\nAAAA\nAADA"))
    assert code == 2 and "budget" in err
    monkeypatch.setenv("SORTMATCH_BUDGET", "100000000")
    code, out, _ = run(capsys, "count", puzzle_file("4\nAAAA\nAADA"))
    assert code == 0 and out.strip() == "14 (enumeration)"
