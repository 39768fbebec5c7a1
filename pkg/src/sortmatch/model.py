"""Core model for sorting match puzzles.

An order-n puzzle labels every row and column of an n x n grid with A
(ascending) or D (descending).  A solution arranges 1..n^2 so that each
line respects its label.

Reading conventions (fixed once, used everywhere): row 1 is the top row,
column 1 the leftmost; rows are read left to right and columns top to
bottom, so an A column increases downward.

Text format (bit-exact):
    line 1: decimal order n
    line 2: row labels, n characters from {A, D}
    line 3: column labels, likewise
    optional n further lines: grid rows as space-separated decimals

JSON form: {"n": 3, "rows": "ADD", "cols": "ADD", "grid": [[...], ...]}
with "grid" optional.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

Cell = tuple[int, int]  # (row, col), 1-based
Grid = tuple[tuple[int, ...], ...]

_LABELS = frozenset("AD")


class PuzzleFormatError(ValueError):
    """Malformed puzzle text, JSON payload, or grid data."""


def _check_word(word: str, n: int, which: str) -> None:
    if len(word) != n:
        raise PuzzleFormatError(
            f"{which} labels must have length {n}, got {len(word)!r}"
        )
    bad = set(word) - _LABELS
    if bad:
        raise PuzzleFormatError(
            f"{which} labels contain characters outside A/D: {sorted(bad)}"
        )


@dataclass(frozen=True)
class SortingPuzzle:
    """Immutable puzzle: order plus the two label words."""

    n: int
    rows: str
    cols: str

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise PuzzleFormatError(f"order must be a positive integer, got {self.n!r}")
        _check_word(self.rows, self.n, "row")
        _check_word(self.cols, self.n, "column")

    def transposed(self) -> SortingPuzzle:
        return SortingPuzzle(self.n, self.cols, self.rows)


class Shape(Enum):
    """Structure of a single label word."""

    UNIFORM_A = "uniform-A"
    UNIFORM_D = "uniform-D"
    A_THEN_D = "AthenD"
    D_THEN_A = "DthenA"
    OTHER = "other"


@dataclass(frozen=True)
class ShapeClass:
    kind: Shape
    switch_index: int | None = None  # prefix length before the single label change


def classify_shape(word: str) -> ShapeClass:
    """Classify a label word by its switch structure.

    A^n and D^n are uniform; A^k D^(n-k) and D^k A^(n-k) with one
    adjacent label change at position k are single-switch; anything with
    two or more changes is OTHER.
    """
    switches = [i for i in range(1, len(word)) if word[i] != word[i - 1]]
    if not switches:
        return ShapeClass(Shape.UNIFORM_A if word[0] == "A" else Shape.UNIFORM_D)
    if len(switches) == 1:
        k = switches[0]
        kind = Shape.A_THEN_D if word[0] == "A" else Shape.D_THEN_A
        return ShapeClass(kind, k)
    return ShapeClass(Shape.OTHER)


def flip_word(word: str) -> str:
    """Swap every A for D and vice versa."""
    return word.translate(str.maketrans("AD", "DA"))


# ---------------------------------------------------------------------------
# Parsing and formatting


def parse_puzzle_text(text: str) -> tuple[SortingPuzzle, Grid | None]:
    """Parse the text format; the grid block is optional."""
    lines = [line.strip() for line in text.strip().splitlines()]
    if len(lines) < 3:
        raise PuzzleFormatError("expected at least 3 lines: order, row labels, column labels")
    try:
        n = int(lines[0])
    except ValueError:
        raise PuzzleFormatError(f"first line must be the order, got {lines[0]!r}") from None
    puzzle = SortingPuzzle(n, lines[1], lines[2])
    rest = [line for line in lines[3:] if line]
    if not rest:
        return puzzle, None
    if len(rest) != n:
        raise PuzzleFormatError(f"expected {n} grid lines, got {len(rest)}")
    rows = []
    for line in rest:
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise PuzzleFormatError(f"grid line is not space-separated integers: {line!r}") from None
        rows.append(row)
    grid = tuple(rows)
    check_grid_values(n, grid)
    return puzzle, grid


def parse_puzzle(text: str) -> SortingPuzzle:
    """Parse a puzzle from the text format, ignoring any trailing grid."""
    return parse_puzzle_text(text)[0]


def format_puzzle(puzzle: SortingPuzzle, grid: Grid | None = None) -> str:
    """Inverse of parse_puzzle_text; round-trips exactly."""
    lines = [str(puzzle.n), puzzle.rows, puzzle.cols]
    if grid is not None:
        lines.extend(" ".join(str(v) for v in row) for row in grid)
    return "\n".join(lines)


def puzzle_to_json(puzzle: SortingPuzzle, grid: Grid | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": puzzle.n, "rows": puzzle.rows, "cols": puzzle.cols}
    if grid is not None:
        out["grid"] = [list(row) for row in grid]
    return out


def puzzle_from_json(data: dict[str, Any]) -> tuple[SortingPuzzle, Grid | None]:
    try:
        puzzle = SortingPuzzle(data["n"], data["rows"], data["cols"])
    except KeyError as exc:
        raise PuzzleFormatError(f"missing puzzle field {exc}") from None
    grid = None
    if data.get("grid") is not None:
        grid = tuple(tuple(int(v) for v in row) for row in data["grid"])
        check_grid_values(puzzle.n, grid)
    return puzzle, grid


# ---------------------------------------------------------------------------
# Grids


def check_grid_values(n: int, grid: Grid) -> None:
    """Require an n x n grid holding exactly the multiset {1, ..., n^2}."""
    if len(grid) != n or any(len(row) != n for row in grid):
        raise PuzzleFormatError(f"grid must be {n}x{n}")
    seen = sorted(v for row in grid for v in row)
    if seen != list(range(1, n * n + 1)):
        raise PuzzleFormatError(f"grid must contain each of 1..{n * n} exactly once")


def transpose_grid(grid: Grid) -> Grid:
    return tuple(zip(*grid))


def _line_ordered(values: tuple[int, ...], label: str) -> bool:
    if label == "A":
        return all(a < b for a, b in zip(values, values[1:]))
    return all(a > b for a, b in zip(values, values[1:]))


def validate_grid(puzzle: SortingPuzzle, grid: Grid) -> bool:
    """True iff every row and column obeys its label.

    The grid must already be an n x n arrangement (dimension mismatch
    raises); cell values are taken as given.
    """
    n = puzzle.n
    if len(grid) != n or any(len(row) != n for row in grid):
        raise PuzzleFormatError(f"grid must be {n}x{n} to match the puzzle")
    for label, row in zip(puzzle.rows, grid):
        if not _line_ordered(row, label):
            return False
    for label, col in zip(puzzle.cols, transpose_grid(grid)):
        if not _line_ordered(col, label):
            return False
    return True


@dataclass(frozen=True)
class Violation:
    """One violation in a line: an out-of-order placed pair (two
    positions) or a single placement no completion can ever satisfy."""

    kind: str  # "row" or "col"
    line: int  # 1-based row or column index
    positions: tuple[Cell, ...]


def find_violations(puzzle: SortingPuzzle, grid: Grid) -> list[Violation]:
    """Violations in a possibly partial grid (0 marks an empty cell).

    Consecutive placed cells in each line are compared in reading order.
    A placed value also violates alone when its line position leaves too
    few smaller or larger values in 1..n^2 to fill the rest of the line,
    so hopeless placements light up immediately.
    """
    n = puzzle.n
    if len(grid) != n or any(len(row) != n for row in grid):
        raise PuzzleFormatError(f"grid must be {n}x{n} to match the puzzle")
    total = n * n
    out: list[Violation] = []

    def scan(kind: str, index: int, label: str, cells: list[tuple[Cell, int]]) -> None:
        placed = [(pos, v) for pos, v in cells if v != 0]
        for (pos_a, a), (pos_b, b) in zip(placed, placed[1:]):
            ok = a < b if label == "A" else a > b
            if not ok:
                out.append(Violation(kind, index, (pos_a, pos_b)))
        for t, (pos, v) in enumerate((item for item in cells), start=1):
            if v == 0:
                continue
            before, after = t - 1, n - t
            if label == "A":
                bad = v <= before or v > total - after
            else:
                bad = v <= after or v > total - before
            if bad:
                out.append(Violation(kind, index, (pos,)))

    for i in range(1, n + 1):
        scan("row", i, puzzle.rows[i - 1], [((i, j), grid[i - 1][j - 1]) for j in range(1, n + 1)])
    for j in range(1, n + 1):
        scan("col", j, puzzle.cols[j - 1], [((i, j), grid[i - 1][j - 1]) for i in range(1, n + 1)])
    return out
