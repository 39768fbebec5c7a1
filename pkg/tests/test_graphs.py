import pytest

from sortmatch import (
    CycleError,
    PermutationPuzzle,
    SortingPuzzle,
    build_graph_permutation,
    build_graph_sorting,
    find_cycle,
    is_solvable,
    is_solvable_permutation,
    permutation_from_sorting,
    satisfies,
    solve_by_toposort,
    validate_grid,
)
from oracles import all_puzzles, brute_force_solutions

# Worked permutation example: identity rows, identity columns except the
# middle one, which demands middle < top < bottom.
FIG4 = PermutationPuzzle(
    3,
    ((1, 2, 3), (1, 2, 3), (1, 2, 3)),
    ((1, 2, 3), (2, 1, 3), (1, 2, 3)),
)
FIG4_GRID = ((1, 5, 6), (2, 3, 8), (4, 7, 9))


def test_sorting_graph_trivial():
    assert build_graph_sorting(SortingPuzzle(1, "A", "A")).edges == frozenset()


def test_sorting_graph_all_ascending_two():
    g = build_graph_sorting(SortingPuzzle(2, "AA", "AA"))
    assert g.edges == {
        ((1, 1), (1, 2)),
        ((2, 1), (2, 2)),
        ((1, 1), (2, 1)),
        ((1, 2), (2, 2)),
    }


def test_sorting_graph_cycle_matches_unsolvability():
    assert find_cycle(build_graph_sorting(SortingPuzzle(3, "DAD", "DDA"))) is not None


def test_two_by_two_crossing_cycle():
    cycle = find_cycle(build_graph_sorting(SortingPuzzle(2, "AD", "DA")))
    assert cycle is not None
    assert cycle[0] == cycle[-1]
    assert len(set(cycle[:-1])) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_edge_counts(n):
    p = SortingPuzzle(n, "A" * n, "D" * n)
    assert len(build_graph_sorting(p).edges) == 2 * n * (n - 1)
    assert len(build_graph_permutation(permutation_from_sorting(p)).edges) == 2 * n * (n - 1)


def test_permutation_graph_fig4():
    g = build_graph_permutation(FIG4)
    assert find_cycle(g) is None
    assert ((2, 2), (1, 2)) in g.edges and ((1, 2), (3, 2)) in g.edges
    assert satisfies(g, FIG4_GRID)


def test_permutation_graph_identity_equals_all_ascending():
    n = 3
    identity = tuple(tuple(range(1, n + 1)) for _ in range(n))
    pp = PermutationPuzzle(n, identity, identity)
    assert build_graph_permutation(pp).edges == build_graph_sorting(
        SortingPuzzle(n, "A" * n, "A" * n)
    ).edges


def test_permutation_graph_trivial():
    assert build_graph_permutation(PermutationPuzzle(1, ((1,),), ((1,),))).edges == frozenset()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_label_embedding_gives_equal_graphs(n):
    for p in all_puzzles(n):
        assert (
            build_graph_permutation(permutation_from_sorting(p)).edges
            == build_graph_sorting(p).edges
        ), p


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_characterization_agrees_with_acyclicity(n):
    for p in all_puzzles(n):
        assert is_solvable(p) == (find_cycle(build_graph_sorting(p)) is None), p


def test_toposort_row_major_tie_break():
    g = build_graph_sorting(SortingPuzzle(2, "AA", "AA"))
    assert solve_by_toposort(g) == ((1, 2), (3, 4))


def test_toposort_fig4_solution_is_valid():
    g = build_graph_permutation(FIG4)
    grid = solve_by_toposort(g)
    assert satisfies(g, grid)
    col2 = [grid[i][1] for i in range(3)]
    assert col2[1] < col2[0] < col2[2]


def test_toposort_raises_with_cycle_diagnostic():
    g = build_graph_sorting(SortingPuzzle(2, "AD", "DA"))
    with pytest.raises(CycleError) as err:
        solve_by_toposort(g)
    cycle = err.value.cycle
    assert cycle[0] == cycle[-1] and len(cycle) > 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_toposort_output_validates_for_sorting_puzzles(n):
    for p in all_puzzles(n):
        g = build_graph_sorting(p)
        if find_cycle(g) is None:
            assert validate_grid(p, solve_by_toposort(g)), p


def test_is_solvable_permutation():
    assert is_solvable_permutation(FIG4)
    ident, rev = (1, 2), (2, 1)
    crossed = PermutationPuzzle(2, (ident, rev), (rev, ident))
    assert not is_solvable_permutation(crossed)
    assert brute_force_solutions(SortingPuzzle(2, "AD", "DA")) == []
    all_ident = PermutationPuzzle(2, (ident, ident), (ident, ident))
    assert is_solvable_permutation(all_ident)


def test_permutation_validation():
    with pytest.raises(ValueError):
        PermutationPuzzle(2, ((1, 1), (1, 2)), ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        PermutationPuzzle(2, ((1, 2),), ((1, 2), (1, 2)))
