"""Command-line front end.

Verbs: check, solve, count, enumerate, unique, repair,
permutation-solve, reduce, census, serve.  Puzzles are read from a file
argument or stdin ("-") in the bit-exact text format; --json switches
any verb to JSON output.  Exit codes: 0 success, 1 unsolvable where a
solution was required, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import counting, model, reduction, repair, solvability
from .graphs import (
    CycleError,
    PermutationPuzzle,
    build_graph_permutation,
    solve_by_toposort,
)

EXIT_OK = 0
EXIT_UNSOLVABLE = 1
EXIT_INPUT = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_puzzle(path: str) -> tuple[model.SortingPuzzle, model.Grid | None]:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return model.puzzle_from_json(json.loads(text))
    return model.parse_puzzle_text(text)


def _emit(data: dict[str, Any], as_json: bool, plain: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(plain)


def _witness_json(w: solvability.ForbiddenWitness | None) -> dict[str, Any] | None:
    if w is None:
        return None
    return {"rows": list(w.rows), "cols": list(w.cols)}


def _budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SORTMATCH_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"SORTMATCH_BUDGET must be an integer, got {env!r}")
    return counting.DEFAULT_NODE_BUDGET


def _cmd_check(args: argparse.Namespace) -> int:
    puzzle, grid = _load_puzzle(args.puzzle)
    if args.grid:
        if grid is None:
            print("error: --grid requires grid lines in the input", file=sys.stderr)
            return EXIT_INPUT
        ok = model.validate_grid(puzzle, grid)
        _emit({"valid": ok}, args.json, "VALID" if ok else "INVALID")
        return EXIT_OK if ok else EXIT_UNSOLVABLE
    witness = solvability.forbidden_witness(puzzle)
    solvable = witness is None
    if args.json:
        _emit({"solvable": solvable, "witness": _witness_json(witness)}, True, "")
    elif solvable:
        print("SOLVABLE")
    else:
        assert witness is not None
        print(f"UNSOLVABLE rows={witness.rows[0]},{witness.rows[1]} cols={witness.cols[0]},{witness.cols[1]}")
    return EXIT_OK if solvable else EXIT_UNSOLVABLE


def _cmd_solve(args: argparse.Namespace) -> int:
    puzzle, _ = _load_puzzle(args.puzzle)
    try:
        grid = solvability.construct_solution(puzzle)
    except solvability.UnsolvableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    if args.json:
        _emit(model.puzzle_to_json(puzzle, grid), True, "")
    else:
        print(model.format_puzzle(puzzle, grid))
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    puzzle, _ = _load_puzzle(args.puzzle)
    result = counting.count_solutions(puzzle, budget=_budget(args))
    _emit(
        {"count": str(result.value), "method": result.method},
        args.json,
        f"{result.value} ({result.method})",
    )
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    puzzle, _ = _load_puzzle(args.puzzle)
    grids = counting.enumerate_solutions(puzzle, args.limit, budget=_budget(args))
    if args.json:
        _emit({"solutions": [[list(row) for row in g] for g in grids]}, True, "")
    else:
        blocks = ["\n".join(" ".join(str(v) for v in row) for row in g) for g in grids]
        print(f"{len(grids)} solution(s)")
        if blocks:
            print("\n\n".join(blocks))
    return EXIT_OK


def _cmd_unique(args: argparse.Namespace) -> int:
    puzzle, _ = _load_puzzle(args.puzzle)
    unique = solvability.is_unique(puzzle)
    _emit({"unique": unique}, args.json, "UNIQUE" if unique else "NOT UNIQUE")
    return EXIT_OK


def _cmd_repair(args: argparse.Namespace) -> int:
    puzzle, _ = _load_puzzle(args.puzzle)
    result = repair.nearest_solvable(puzzle)
    if args.json:
        _emit(
            {
                "cost": result.cost,
                "strategy": result.strategy,
                "target": model.puzzle_to_json(result.target),
            },
            True,
            "",
        )
    else:
        print(f"cost {result.cost} ({result.strategy})")
        print(model.format_puzzle(result.target))
    return EXIT_OK


def _cmd_permutation_solve(args: argparse.Namespace) -> int:
    data = json.loads(_read_text(args.puzzle))
    puzzle = PermutationPuzzle(
        int(data["n"]),
        tuple(tuple(int(x) for x in perm) for perm in data["rho"]),
        tuple(tuple(int(x) for x in perm) for perm in data["gamma"]),
    )
    try:
        grid = solve_by_toposort(build_graph_permutation(puzzle))
    except CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    if args.json:
        _emit({"grid": [list(row) for row in grid]}, True, "")
    else:
        print("\n".join(" ".join(str(v) for v in row) for row in grid))
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    data = json.loads(_read_text(args.infile))
    h = reduction.digraph_from_json(data)
    built = reduction.build_reduction(h)
    if args.verify:
        report = reduction.verify_reduction(built)
        for name, ok in report.checks.items():
            print(f"{'PASS' if ok else 'FAIL'} {name}")
        for v in report.violations:
            print(f"violation: {v}", file=sys.stderr)
    payload = json.dumps(reduction.reduction_to_json(built), sort_keys=True, indent=2)
    if args.out == "-":
        print(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    value = counting.count_solvable_puzzles(args.n)
    _emit({"n": args.n, "count": str(value)}, args.json, str(value))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(budget=_budget(args))
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sortmatch", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = add("check", _cmd_check, help="decide solvability, or validate a grid with --grid")
    p.add_argument("puzzle", help="puzzle file or - for stdin")
    p.add_argument("--grid", action="store_true", help="validate the grid included in the input")

    p = add("solve", _cmd_solve, help="construct a solution grid")
    p.add_argument("puzzle")

    p = add("count", _cmd_count, help="count solutions exactly")
    p.add_argument("puzzle")
    p.add_argument("--budget", type=int, default=None, help="enumeration node budget")

    p = add("enumerate", _cmd_enumerate, help="list solutions in lexicographic order")
    p.add_argument("puzzle")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--budget", type=int, default=None)

    p = add("unique", _cmd_unique, help="decide whether exactly one solution exists")
    p.add_argument("puzzle")

    p = add("repair", _cmd_repair, help="nearest solvable puzzle by label flips")
    p.add_argument("puzzle")

    p = add("permutation-solve", _cmd_permutation_solve, help="solve a permutation puzzle from JSON")
    p.add_argument("puzzle")

    p = add("reduce", _cmd_reduce, help="build a grid acyclification instance from a digraph")
    p.add_argument("--in", dest="infile", required=True, help="digraph JSON file or -")
    p.add_argument("--out", default="-", help="output file for the reduction JSON")
    p.add_argument("--verify", action="store_true", help="print the structural check report")

    p = add("census", _cmd_census, help="number of solvable puzzles of a given order")
    p.add_argument("n", type=int)

    p = add("serve", _cmd_serve, help="run the local HTTP service")
    p.add_argument("--port", type=int, default=8737)
    p.add_argument("--budget", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (model.PuzzleFormatError, reduction.ReductionBuildError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except counting.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
