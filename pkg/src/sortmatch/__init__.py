"""Sorting match puzzle engine.

Decide, construct, count, and repair ascending/descending grid puzzles;
solve generalized permutation match puzzles through constraint graphs;
and build the grid-acyclification hardness reduction with empirical
validation helpers.
"""

from .counting import (
    BudgetExceededError,
    CountResult,
    DEFAULT_NODE_BUDGET,
    count_solutions,
    count_solvable_puzzles,
    enumerate_solutions,
    hook_syt_count,
)
from .graphs import (
    ConstraintGraph,
    CycleError,
    PermutationPuzzle,
    build_graph_permutation,
    build_graph_sorting,
    find_cycle,
    is_solvable_permutation,
    permutation_from_sorting,
    satisfies,
    solve_by_toposort,
)
from .model import (
    Cell,
    Grid,
    PuzzleFormatError,
    Shape,
    ShapeClass,
    SortingPuzzle,
    Violation,
    classify_shape,
    find_violations,
    flip_word,
    format_puzzle,
    parse_puzzle,
    parse_puzzle_text,
    puzzle_from_json,
    puzzle_to_json,
    validate_grid,
)
from .reduction import (
    Digraph,
    GridReduction,
    ReductionBuildError,
    ReductionReport,
    build_reduction,
    digraph_from_json,
    digraph_is_acyclic,
    digraph_to_json,
    fvs_bruteforce,
    grid_cycle_after_deletion,
    grid_deletion_bruteforce,
    lift_solution,
    push_solution,
    reduction_from_json,
    reduction_to_json,
    verify_reduction,
)
from .repair import (
    PrefixProfile,
    RepairResult,
    hamming,
    min_cost_monotone,
    nearest_solvable,
    prefix_profile,
    repair_oracle,
)
from .solvability import (
    ForbiddenWitness,
    QuadrantFill,
    UnsolvableError,
    boustrophedon,
    construct_solution,
    forbidden_witness,
    is_solvable,
    is_unique,
)

__all__ = [name for name in dir() if not name.startswith("_")]
