import pytest
from hypothesis import given, settings, strategies as st

from sortmatch import (
    SortingPuzzle,
    UnsolvableError,
    boustrophedon,
    construct_solution,
    enumerate_solutions,
    flip_word,
    forbidden_witness,
    is_solvable,
    is_unique,
    validate_grid,
)
from oracles import all_puzzles, brute_force_solutions

# 9x9 solution with a row switch at 5 and a column switch at 3, copied
# cell for cell from the worked figure: NW holds 1-15, SE 39 down to 16,
# NE 40-69, SW 70-81.
FIG5 = (
    (1, 2, 3, 64, 65, 66, 67, 68, 69),
    (4, 5, 6, 58, 59, 60, 61, 62, 63),
    (7, 8, 9, 52, 53, 54, 55, 56, 57),
    (10, 11, 12, 46, 47, 48, 49, 50, 51),
    (13, 14, 15, 40, 41, 42, 43, 44, 45),
    (72, 71, 70, 39, 38, 37, 36, 35, 34),
    (75, 74, 73, 33, 32, 31, 30, 29, 28),
    (78, 77, 76, 27, 26, 25, 24, 23, 22),
    (81, 80, 79, 21, 20, 19, 18, 17, 16),
)

# 5x5 boustrophedon figure: rows all A, columns ADADA.
FIG_SNAKE = (
    (1, 10, 11, 20, 21),
    (2, 9, 12, 19, 22),
    (3, 8, 13, 18, 23),
    (4, 7, 14, 17, 24),
    (5, 6, 15, 16, 25),
)


def test_is_solvable_examples():
    assert is_solvable(SortingPuzzle(3, "ADD", "ADD"))
    assert not is_solvable(SortingPuzzle(3, "DAD", "DDA"))
    assert is_solvable(SortingPuzzle(3, "AAA", "AAA"))
    assert not is_solvable(SortingPuzzle(2, "AD", "DA"))


def test_ad_da_unsolvable_by_brute_force():
    assert brute_force_solutions(SortingPuzzle(2, "AD", "DA")) == []


def _witness_is_crossing(puzzle, w):
    i, j = w.rows
    p, q = w.cols
    assert 1 <= i < j <= puzzle.n and 1 <= p < q <= puzzle.n
    row_pair = (puzzle.rows[i - 1], puzzle.rows[j - 1])
    col_pair = (puzzle.cols[p - 1], puzzle.cols[q - 1])
    return (row_pair, col_pair) in {(("A", "D"), ("D", "A")), (("D", "A"), ("A", "D"))}


def test_witness_examples():
    w = forbidden_witness(SortingPuzzle(3, "DAD", "DDA"))
    assert w is not None and _witness_is_crossing(SortingPuzzle(3, "DAD", "DDA"), w)
    assert forbidden_witness(SortingPuzzle(3, "AAA", "ADA")) is None
    w = forbidden_witness(SortingPuzzle(3, "ADA", "ADA"))
    assert w is not None and _witness_is_crossing(SortingPuzzle(3, "ADA", "ADA"), w)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_witness_iff_unsolvable(n):
    for p in all_puzzles(n):
        w = forbidden_witness(p)
        assert (w is None) == is_solvable(p)
        if w is not None:
            assert _witness_is_crossing(p, w)


def test_construct_reproduces_worked_nine_by_nine():
    p = SortingPuzzle(9, "A" * 5 + "D" * 4, "A" * 3 + "D" * 6)
    assert construct_solution(p) == FIG5


def test_construct_row_major_for_all_ascending():
    assert construct_solution(SortingPuzzle(3, "AAA", "AAA")) == (
        (1, 2, 3),
        (4, 5, 6),
        (7, 8, 9),
    )


def test_construct_raises_on_unsolvable():
    with pytest.raises(UnsolvableError):
        construct_solution(SortingPuzzle(3, "DAD", "DDA"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_construct_validates_exhaustive(n):
    for p in all_puzzles(n):
        if is_solvable(p):
            assert validate_grid(p, construct_solution(p))


@given(
    st.integers(min_value=1, max_value=12),
    st.randoms(use_true_random=False),
)
@settings(max_examples=60)
def test_construct_validates_random_solvable(n, rnd):
    # Random member of the solvable family: uniform side or double switch.
    style = rnd.randrange(3)
    if style == 0:
        rows = rnd.choice("AD") * n
        cols = "".join(rnd.choice("AD") for _ in range(n))
    elif style == 1:
        rows = "".join(rnd.choice("AD") for _ in range(n))
        cols = rnd.choice("AD") * n
    else:
        first, second = rnd.choice([("A", "D"), ("D", "A")])
        k = rnd.randint(1, n - 1) if n > 1 else n
        l = rnd.randint(1, n - 1) if n > 1 else n
        rows = first * k + second * (n - k)
        cols = first * l + second * (n - l)
    p = SortingPuzzle(n, rows, cols)
    assert validate_grid(p, construct_solution(p))


def test_descending_first_construction_uses_flip_symmetry():
    p = SortingPuzzle(4, "DDAA", "DAAA")
    grid = construct_solution(p)
    assert validate_grid(p, grid)
    mirror = construct_solution(SortingPuzzle(4, flip_word(p.rows), flip_word(p.cols)))
    assert grid == tuple(tuple(17 - v for v in row) for row in mirror)


def test_is_unique_examples():
    assert is_unique(SortingPuzzle(5, "AAAAA", "ADADA"))
    assert not is_unique(SortingPuzzle(4, "AAAA", "DDAD"))
    assert not is_unique(SortingPuzzle(2, "AD", "AD"))
    assert is_unique(SortingPuzzle(1, "A", "D"))


@pytest.mark.parametrize("n", [2, 3])
def test_is_unique_matches_solution_count(n):
    for p in all_puzzles(n):
        count = len(brute_force_solutions(p))
        assert is_unique(p) == (count == 1), p


def test_boustrophedon_figure():
    assert boustrophedon(SortingPuzzle(5, "AAAAA", "ADADA")) == FIG_SNAKE


def test_boustrophedon_trivial():
    assert boustrophedon(SortingPuzzle(1, "A", "A")) == ((1,),)


def test_boustrophedon_two_by_two():
    # Brute force confirms this puzzle has exactly one solution.
    p = SortingPuzzle(2, "AA", "AD")
    assert brute_force_solutions(p) == [((1, 4), (2, 3))]
    assert boustrophedon(p) == ((1, 4), (2, 3))


def test_boustrophedon_rejects_non_unique():
    with pytest.raises(ValueError):
        boustrophedon(SortingPuzzle(2, "AD", "AD"))


def test_two_solutions_of_the_four_by_four_example():
    p = SortingPuzzle(4, "AAAA", "DDAD")
    first = ((4, 8, 9, 16), (3, 7, 10, 15), (2, 6, 11, 14), (1, 5, 12, 13))
    second = ((7, 8, 9, 16), (5, 6, 10, 15), (3, 4, 11, 14), (1, 2, 12, 13))
    assert validate_grid(p, first) and validate_grid(p, second)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_solvability_invariant_under_transpose(n):
    for p in all_puzzles(n):
        assert is_solvable(p) == is_solvable(p.transposed())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_solvability_invariant_under_flip_and_reverse(n):
    for p in all_puzzles(n):
        rotated = SortingPuzzle(n, flip_word(p.rows)[::-1], flip_word(p.cols)[::-1])
        assert is_solvable(p) == is_solvable(rotated)


def test_three_way_oracle_small():
    # Spot version of the full acceptance sweep at n = 2.
    for p in all_puzzles(2):
        assert is_solvable(p) == bool(enumerate_solutions(p, 1))
