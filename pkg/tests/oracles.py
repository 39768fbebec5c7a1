"""Independent brute-force oracles used to freeze expected values.

Everything here works from first principles (permutation scans and
direct backtracking) and deliberately shares no code with the engine's
solvers, so oracle agreement genuinely cross-checks the implementation.
"""

from functools import lru_cache
from itertools import permutations, product

from sortmatch import SortingPuzzle


def all_puzzles(n):
    for rows in product("AD", repeat=n):
        for cols in product("AD", repeat=n):
            yield SortingPuzzle(n, "".join(rows), "".join(cols))


@lru_cache(maxsize=None)
def brute_counts(n):
    """Solution counts for every order-n puzzle by full permutation scan.

    Cached so the expensive n = 3 sweep (64 puzzles x 9! fills) runs at
    most once per session, whichever test asks first.
    """
    return {p: brute_force_count(p) for p in all_puzzles(n)}


def order_pairs(puzzle):
    """Row-major index pairs (a, b) that must satisfy value[a] < value[b]."""
    n = puzzle.n
    pairs = []
    for i in range(n):
        for j in range(n - 1):
            a, b = i * n + j, i * n + j + 1
            pairs.append((a, b) if puzzle.rows[i] == "A" else (b, a))
    for j in range(n):
        for i in range(n - 1):
            a, b = i * n + j, (i + 1) * n + j
            pairs.append((a, b) if puzzle.cols[j] == "A" else (b, a))
    return pairs


def brute_force_count(puzzle):
    """Number of valid fills by scanning every permutation of 1..n^2."""
    n = puzzle.n
    pairs = order_pairs(puzzle)
    count = 0
    for perm in permutations(range(1, n * n + 1)):
        if all(perm[a] < perm[b] for a, b in pairs):
            count += 1
    return count


def brute_force_solutions(puzzle):
    """All valid grids by permutation scan, in lexicographic order."""
    n = puzzle.n
    pairs = order_pairs(puzzle)
    out = []
    for perm in permutations(range(1, n * n + 1)):
        if all(perm[a] < perm[b] for a, b in pairs):
            out.append(tuple(perm[i * n : (i + 1) * n] for i in range(n)))
    return out


def syt_count_bruteforce(a, b):
    """Count standard Young tableaux of an a x b rectangle by backtracking.

    Values 1..ab are placed in increasing order; each value may go into
    any cell whose left and upper neighbours are already filled.
    """
    filled = [[False] * b for _ in range(a)]

    def frontier():
        cells = []
        for i in range(a):
            for j in range(b):
                if not filled[i][j]:
                    left_ok = j == 0 or filled[i][j - 1]
                    up_ok = i == 0 or filled[i - 1][j]
                    if left_ok and up_ok:
                        cells.append((i, j))
        return cells

    def place(remaining):
        if remaining == 0:
            return 1
        total = 0
        for i, j in frontier():
            filled[i][j] = True
            total += place(remaining - 1)
            filled[i][j] = False
        return total

    return place(a * b)
