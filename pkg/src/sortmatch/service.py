"""Local HTTP/JSON API for the playground UI.

Stateless by design: every request carries the full puzzle state, so
handlers are pure functions of their bodies and safe under concurrent
requests.  Binds 127.0.0.1; CORS is open for the local UI.

Status codes: 400 malformed input, 409 unsolvable where a solution is
required, 422 enumeration budget exceeded.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import counting, model, repair, solvability
from .graphs import (
    CycleError,
    PermutationPuzzle,
    build_graph_permutation,
    build_graph_sorting,
    solve_by_toposort,
)


class PuzzleBody(BaseModel):
    n: int
    rows: str
    cols: str


class BoardBody(PuzzleBody):
    grid: list[list[int | None]] | None = None


class PermutationBody(BaseModel):
    n: int
    rho: list[list[int]]
    gamma: list[list[int]]


class BadInput(ValueError):
    pass


def _puzzle(body: PuzzleBody) -> model.SortingPuzzle:
    try:
        return model.SortingPuzzle(body.n, body.rows, body.cols)
    except model.PuzzleFormatError as exc:
        raise BadInput(str(exc)) from None


def _board(body: BoardBody) -> tuple[model.SortingPuzzle, model.Grid]:
    """Normalize an optional partial grid; 0 or null marks an empty cell."""
    puzzle = _puzzle(body)
    n = puzzle.n
    if body.grid is None:
        return puzzle, tuple((0,) * n for _ in range(n))
    if len(body.grid) != n or any(len(row) != n for row in body.grid):
        raise BadInput(f"grid must be {n}x{n}")
    grid = tuple(tuple(0 if v is None else int(v) for v in row) for row in body.grid)
    placed = [v for row in grid for v in row if v != 0]
    if any(not 1 <= v <= n * n for v in placed):
        raise BadInput(f"grid values must lie in 1..{n * n}")
    if len(placed) != len(set(placed)):
        raise BadInput("grid values must be distinct")
    return puzzle, grid


def _witness_json(w: solvability.ForbiddenWitness | None) -> dict[str, Any] | None:
    if w is None:
        return None
    return {"rows": list(w.rows), "cols": list(w.cols)}


def _repair_json(result: repair.RepairResult) -> dict[str, Any]:
    return {
        "cost": result.cost,
        "strategy": result.strategy,
        "target": model.puzzle_to_json(result.target),
    }


def create_app(budget: int = counting.DEFAULT_NODE_BUDGET) -> FastAPI:
    app = FastAPI(title="sortmatch", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(BadInput)
    async def bad_input(request: Request, exc: BadInput):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(counting.BudgetExceededError)
    async def over_budget(request: Request, exc: counting.BudgetExceededError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/check")
    def check(body: PuzzleBody) -> dict[str, Any]:
        puzzle = _puzzle(body)
        witness = solvability.forbidden_witness(puzzle)
        return {"solvable": witness is None, "witness": _witness_json(witness)}

    @app.post("/solve")
    def solve(body: PuzzleBody):
        puzzle = _puzzle(body)
        witness = solvability.forbidden_witness(puzzle)
        if witness is not None:
            return JSONResponse(
                status_code=409,
                content={"detail": "unsolvable", "witness": _witness_json(witness)},
            )
        grid = solvability.construct_solution(puzzle)
        return {"grid": [list(row) for row in grid]}

    @app.post("/count")
    def count(body: PuzzleBody) -> dict[str, Any]:
        puzzle = _puzzle(body)
        result = counting.count_solutions(puzzle, budget=budget)
        return {"count": str(result.value), "method": result.method}

    @app.post("/repair")
    def repair_endpoint(body: PuzzleBody) -> dict[str, Any]:
        return _repair_json(repair.nearest_solvable(_puzzle(body)))

    @app.post("/validate")
    def validate(body: BoardBody) -> dict[str, Any]:
        puzzle, grid = _board(body)
        violations = model.find_violations(puzzle, grid)
        placed = sum(1 for row in grid for v in row if v != 0)
        return {
            "valid": not violations,
            "complete": placed == puzzle.n * puzzle.n,
            "violations": [
                {
                    "kind": v.kind,
                    "line": v.line,
                    "positions": [list(p) for p in v.positions],
                }
                for v in violations
            ],
        }

    @app.post("/hint")
    def hint(body: BoardBody) -> dict[str, Any]:
        puzzle, grid = _board(body)
        witness = solvability.forbidden_witness(puzzle)
        if witness is not None:
            suggestion = repair.nearest_solvable(puzzle)
            return {
                "cell": None,
                "value": None,
                "reason": "unsolvable; flip the suggested labels first",
                "repair": _repair_json(suggestion),
            }
        solution = solve_by_toposort(build_graph_sorting(puzzle))
        placed = {v for row in grid for v in row if v != 0}
        value = next(
            (v for v in range(1, puzzle.n * puzzle.n + 1) if v not in placed), None
        )
        if value is None:
            return {"cell": None, "value": None, "reason": "board is complete"}
        cell = next(
            (i + 1, j + 1)
            for i, row in enumerate(solution)
            for j, v in enumerate(row)
            if v == value
        )
        return {
            "cell": list(cell),
            "value": value,
            "reason": "next placement in the deterministic topological solution",
        }

    @app.post("/permutation/solve")
    def permutation_solve(body: PermutationBody):
        try:
            puzzle = PermutationPuzzle(
                body.n,
                tuple(tuple(p) for p in body.rho),
                tuple(tuple(p) for p in body.gamma),
            )
        except ValueError as exc:
            raise BadInput(str(exc)) from None
        try:
            grid = solve_by_toposort(build_graph_permutation(puzzle))
        except CycleError as exc:
            return JSONResponse(
                status_code=409,
                content={"detail": "unsolvable", "cycle": [list(c) for c in exc.cycle]},
            )
        return {"grid": [list(row) for row in grid]}

    return app


app = create_app()
