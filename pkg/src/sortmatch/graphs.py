"""Constraint graphs for sorting and permutation match puzzles.

Every cell is a vertex; a directed edge u -> v means the value at u must
be smaller than the value at v.  Only consecutive-rank edges are added
per line (the transitive reduction of each line's total order), so a
graph always has exactly 2n(n-1) edges.  A puzzle is solvable iff its
graph is acyclic, and any topological order gives a solution.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .model import Cell, Grid, SortingPuzzle


@dataclass(frozen=True)
class ConstraintGraph:
    n: int
    edges: frozenset[tuple[Cell, Cell]]

    def successors(self) -> dict[Cell, list[Cell]]:
        adj: dict[Cell, list[Cell]] = {
            (i, j): [] for i in range(1, self.n + 1) for j in range(1, self.n + 1)
        }
        for u, v in self.edges:
            adj[u].append(v)
        for targets in adj.values():
            targets.sort()
        return adj


class CycleError(ValueError):
    """The graph has a directed cycle where an order was required."""

    def __init__(self, cycle: list[Cell]):
        self.cycle = cycle
        super().__init__(f"constraint graph contains a cycle: {cycle}")


@dataclass(frozen=True)
class PermutationPuzzle:
    """Order-n puzzle whose lines carry arbitrary rank permutations.

    rho[i][j] is the rank (1 = smallest) demanded of the entry at column
    j+1 of row i+1; gamma[j][i] likewise for column j+1 read top to
    bottom.  A and D labels correspond to the identity and reversal.
    """

    n: int
    rho: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("order must be positive")
        for name, perms in (("rho", self.rho), ("gamma", self.gamma)):
            if len(perms) != self.n:
                raise ValueError(f"{name} must hold {self.n} permutations")
            for perm in perms:
                if sorted(perm) != list(range(1, self.n + 1)):
                    raise ValueError(f"{name} entry {perm} is not a permutation of 1..{self.n}")


def permutation_from_sorting(puzzle: SortingPuzzle) -> PermutationPuzzle:
    """Embed a sorting puzzle: A becomes the identity, D the reversal."""
    n = puzzle.n
    identity = tuple(range(1, n + 1))
    reversal = tuple(range(n, 0, -1))
    rho = tuple(identity if ch == "A" else reversal for ch in puzzle.rows)
    gamma = tuple(identity if ch == "A" else reversal for ch in puzzle.cols)
    return PermutationPuzzle(n, rho, gamma)


def build_graph_sorting(puzzle: SortingPuzzle) -> ConstraintGraph:
    """Chain each line in the direction of increasing values."""
    n = puzzle.n
    edges = set()
    for i in range(1, n + 1):
        for j in range(1, n):
            a, b = (i, j), (i, j + 1)
            edges.add((a, b) if puzzle.rows[i - 1] == "A" else (b, a))
    for j in range(1, n + 1):
        for i in range(1, n):
            a, b = (i, j), (i + 1, j)
            edges.add((a, b) if puzzle.cols[j - 1] == "A" else (b, a))
    return ConstraintGraph(n, frozenset(edges))


def build_graph_permutation(puzzle: PermutationPuzzle) -> ConstraintGraph:
    """Chain each line following its rank permutation."""
    n = puzzle.n
    edges = set()
    for i in range(1, n + 1):
        ranks = puzzle.rho[i - 1]
        by_rank = {rank: pos for pos, rank in enumerate(ranks, start=1)}
        for t in range(1, n):
            edges.add(((i, by_rank[t]), (i, by_rank[t + 1])))
    for j in range(1, n + 1):
        ranks = puzzle.gamma[j - 1]
        by_rank = {rank: pos for pos, rank in enumerate(ranks, start=1)}
        for t in range(1, n):
            edges.add(((by_rank[t], j), (by_rank[t + 1], j)))
    return ConstraintGraph(n, frozenset(edges))


def find_cycle(graph: ConstraintGraph) -> list[Cell] | None:
    """A directed cycle as a closed vertex list, or None if acyclic.

    Depth-first search over vertices in row-major order with sorted
    adjacency, so the answer is deterministic.
    """
    adj = graph.successors()
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in adj}
    for start in sorted(adj):
        if color[start] != WHITE:
            continue
        stack: list[tuple[Cell, int]] = [(start, 0)]
        path = [start]
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            if idx < len(adj[node]):
                stack[-1] = (node, idx + 1)
                nxt = adj[node][idx]
                if color[nxt] == GRAY:
                    at = path.index(nxt)
                    return path[at:] + [nxt]
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, 0))
                    path.append(nxt)
            else:
                color[node] = BLACK
                stack.pop()
                path.pop()
    return None


def solve_by_toposort(graph: ConstraintGraph) -> Grid:
    """Assign 1..n^2 along the topological order, row-major on ties."""
    n = graph.n
    adj = graph.successors()
    indegree = {v: 0 for v in adj}
    for u, targets in adj.items():
        for v in targets:
            indegree[v] += 1
    ready = [v for v, d in sorted(indegree.items()) if d == 0]
    heapq.heapify(ready)
    grid = [[0] * n for _ in range(n)]
    value = 0
    while ready:
        i, j = heapq.heappop(ready)
        value += 1
        grid[i - 1][j - 1] = value
        for nxt in adj[(i, j)]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(ready, nxt)
    if value != n * n:
        cycle = find_cycle(graph)
        assert cycle is not None
        raise CycleError(cycle)
    return tuple(tuple(row) for row in grid)


def satisfies(graph: ConstraintGraph, grid: Grid) -> bool:
    """True iff every edge constraint holds in the grid."""
    return all(
        grid[ui - 1][uj - 1] < grid[vi - 1][vj - 1]
        for (ui, uj), (vi, vj) in graph.edges
    )


def is_solvable_permutation(puzzle: PermutationPuzzle) -> bool:
    return find_cycle(build_graph_permutation(puzzle)) is None
