"""Solvability decisions, obstruction witnesses, and constructive solutions.

A puzzle is solvable exactly when it is row-uniform, column-uniform, or
both words switch once in the same direction.  Unsolvable puzzles always
contain a 2x2 crossing obstruction: a row pair and a column pair whose
switch directions oppose, which chains four cells into a strict cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    Cell,
    Grid,
    Shape,
    SortingPuzzle,
    classify_shape,
    flip_word,
)

_SINGLE_OR_UNIFORM_A = {Shape.UNIFORM_A, Shape.UNIFORM_D, Shape.A_THEN_D}
_SINGLE_OR_UNIFORM_D = {Shape.UNIFORM_A, Shape.UNIFORM_D, Shape.D_THEN_A}


@dataclass(frozen=True)
class ForbiddenWitness:
    """Index pairs of a 2x2 crossing obstruction.

    rows = (i, j) with i < j and cols = (p, q) with p < q such that the
    row labels at i, j and the column labels at p, q switch in opposite
    directions; the four corner cells then demand a cyclic chain of
    strict inequalities.
    """

    rows: tuple[int, int]
    cols: tuple[int, int]


class UnsolvableError(ValueError):
    """A solution was required but the puzzle has none."""

    def __init__(self, puzzle: SortingPuzzle, witness: ForbiddenWitness | None):
        self.puzzle = puzzle
        self.witness = witness
        detail = ""
        if witness is not None:
            detail = f" (obstruction rows {witness.rows}, cols {witness.cols})"
        super().__init__(f"puzzle ({puzzle.rows}, {puzzle.cols}) is unsolvable{detail}")


def is_solvable(puzzle: SortingPuzzle) -> bool:
    r = classify_shape(puzzle.rows)
    c = classify_shape(puzzle.cols)
    if r.kind in (Shape.UNIFORM_A, Shape.UNIFORM_D):
        return True
    if c.kind in (Shape.UNIFORM_A, Shape.UNIFORM_D):
        return True
    if r.kind == Shape.A_THEN_D and c.kind == Shape.A_THEN_D:
        return True
    return r.kind == Shape.D_THEN_A and c.kind == Shape.D_THEN_A


def _first_switch(word: str, first: str, second: str) -> tuple[int, int] | None:
    """1-based positions of the first adjacent (first, second) label pair."""
    for i in range(len(word) - 1):
        if word[i] == first and word[i + 1] == second:
            return (i + 1, i + 2)
    return None


def forbidden_witness(puzzle: SortingPuzzle) -> ForbiddenWitness | None:
    """Some crossing obstruction, or None exactly when the puzzle is solvable.

    The returned indices are the earliest adjacent switches realizing an
    opposing pair, which keeps the witness deterministic.
    """
    rows_da = _first_switch(puzzle.rows, "D", "A")
    rows_ad = _first_switch(puzzle.rows, "A", "D")
    cols_da = _first_switch(puzzle.cols, "D", "A")
    cols_ad = _first_switch(puzzle.cols, "A", "D")
    if rows_da and cols_ad:
        return ForbiddenWitness(rows_da, cols_ad)
    if rows_ad and cols_da:
        return ForbiddenWitness(rows_ad, cols_da)
    return None


# ---------------------------------------------------------------------------
# Constructive solutions


@dataclass(frozen=True)
class QuadrantFill:
    """The four sub-rectangles cut by a row switch k and column switch l."""

    n: int
    row_switch: int
    col_switch: int

    @property
    def nw(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i in range(1, self.row_switch + 1)
            for j in range(1, self.col_switch + 1)
        )

    @property
    def ne(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i in range(1, self.row_switch + 1)
            for j in range(self.col_switch + 1, self.n + 1)
        )

    @property
    def sw(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i in range(self.row_switch + 1, self.n + 1)
            for j in range(1, self.col_switch + 1)
        )

    @property
    def se(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i in range(self.row_switch + 1, self.n + 1)
            for j in range(self.col_switch + 1, self.n + 1)
        )


def _block_fill_by_rows(puzzle: SortingPuzzle) -> Grid:
    # Column-uniform: rows take consecutive value blocks; an all-A column
    # word stacks blocks downward, all-D upward.  Each row orders its own
    # block per its label.
    n = puzzle.n
    downward = puzzle.cols[0] == "A"
    grid = []
    for i in range(1, n + 1):
        rank = i if downward else n + 1 - i
        block = range((rank - 1) * n + 1, rank * n + 1)
        row = tuple(block) if puzzle.rows[i - 1] == "A" else tuple(reversed(block))
        grid.append(row)
    return tuple(grid)


def _block_fill_by_cols(puzzle: SortingPuzzle) -> Grid:
    # Row-uniform: columns take consecutive value blocks, leftmost block
    # smallest for all-A rows, rightmost smallest for all-D rows.
    n = puzzle.n
    rightward = puzzle.rows[0] == "A"
    cols = []
    for j in range(1, n + 1):
        rank = j if rightward else n + 1 - j
        block = range((rank - 1) * n + 1, rank * n + 1)
        col = tuple(block) if puzzle.cols[j - 1] == "A" else tuple(reversed(block))
        cols.append(col)
    return tuple(zip(*cols))


def _quadrant_fill(n: int, k: int, l: int) -> Grid:
    """Fill for rows A^k D^(n-k), columns A^l D^(n-l).

    The four blocks take the value ranges of the worked 9x9 example: NW
    gets 1..k*l ascending row-major; SE gets the next block descending
    row-major; NE rows hold descending blocks each written ascending; SW
    rows hold ascending blocks each written descending.
    """
    low = k * l + (n - k) * (n - l)
    grid = [[0] * n for _ in range(n)]
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            grid[i - 1][j - 1] = (i - 1) * l + j
    for a in range(1, n - k + 1):
        for b in range(1, n - l + 1):
            grid[k + a - 1][l + b - 1] = low - (a - 1) * (n - l) - (b - 1)
    for i in range(1, k + 1):
        for b in range(1, n - l + 1):
            grid[i - 1][l + b - 1] = low + (k - i) * (n - l) + b
    base = low + k * (n - l)
    for a in range(1, n - k + 1):
        for j in range(1, l + 1):
            grid[k + a - 1][j - 1] = base + (a - 1) * l + (l - j) + 1
    return tuple(tuple(row) for row in grid)


def construct_solution(puzzle: SortingPuzzle) -> Grid:
    """A witness solution for any solvable puzzle.

    Column-uniform puzzles use the row-block fill, row-uniform ones its
    transpose, and double-switch puzzles the four-quadrant fill (the
    descending-first case reuses it through the label-flip symmetry
    v -> n^2 + 1 - v).
    """
    if not is_solvable(puzzle):
        raise UnsolvableError(puzzle, forbidden_witness(puzzle))
    n = puzzle.n
    c_shape = classify_shape(puzzle.cols)
    r_shape = classify_shape(puzzle.rows)
    if c_shape.kind in (Shape.UNIFORM_A, Shape.UNIFORM_D):
        return _block_fill_by_rows(puzzle)
    if r_shape.kind in (Shape.UNIFORM_A, Shape.UNIFORM_D):
        return _block_fill_by_cols(puzzle)
    if r_shape.kind == Shape.A_THEN_D:
        assert r_shape.switch_index is not None and c_shape.switch_index is not None
        return _quadrant_fill(n, r_shape.switch_index, c_shape.switch_index)
    flipped = SortingPuzzle(n, flip_word(puzzle.rows), flip_word(puzzle.cols))
    mirror = construct_solution(flipped)
    return tuple(tuple(n * n + 1 - v for v in row) for row in mirror)


# ---------------------------------------------------------------------------
# Unique solutions


def _is_uniform(word: str) -> bool:
    return len(set(word)) == 1


def _is_alternating(word: str) -> bool:
    return all(a != b for a, b in zip(word, word[1:]))


def is_unique(puzzle: SortingPuzzle) -> bool:
    """True iff the puzzle has exactly one solution.

    For n >= 2 this is the boustrophedon family: one side uniform, the
    other strictly alternating.  A 1x1 puzzle is trivially unique.
    """
    if puzzle.n == 1:
        return True
    if _is_uniform(puzzle.rows) and _is_alternating(puzzle.cols):
        return True
    return _is_uniform(puzzle.cols) and _is_alternating(puzzle.rows)


def boustrophedon(puzzle: SortingPuzzle) -> Grid:
    """The unique snake-fill solution for the alternating family.

    Each line on the alternating side takes a consecutive block of
    values; the traversal direction flips line by line, tracing the
    snake of the 5x5 worked example.
    """
    if not is_unique(puzzle):
        raise ValueError(
            f"puzzle ({puzzle.rows}, {puzzle.cols}) is outside the unique-solution family"
        )
    if _is_uniform(puzzle.rows) and _is_alternating(puzzle.cols):
        return _block_fill_by_cols(puzzle)
    return _block_fill_by_rows(puzzle)
