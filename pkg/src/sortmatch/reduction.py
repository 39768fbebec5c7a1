"""Grid acyclification instances built from arbitrary simple digraphs.

Given a digraph H with n vertices and m edges, build an N x N grid
digraph G (N = 4n + m) in which every row and column induces an acyclic
tournament, such that H has a feedback vertex set of size k iff G can be
made acyclic by deleting k vertices.

Layout.  A staircase of active cells climbs from the bottom-left block
by block in vertex order.  The block for vertex v holds a red segment of
in_degree(v) + 1 cells (horizontal runs of at most three, joined by
single upward steps), a key cell directly above the last red cell, and a
green segment of out_degree(v) + 1 cells (vertical runs of at most
three, joined by single rightward steps) starting beside the key.  Each
H-edge (u, w) gets an off-staircase edge cell placed on the private row
of a green cell of u and the private column of a red cell of w; a
private line carries at most two edge cells, keeping every line at three
active cells or fewer.  Blocks occupy disjoint row and column bands, so
no stray line ever connects two blocks.

Orientation rules, in priority order: staircase cells sharing a line
point from earlier to later along the staircase; a green cell feeds its
edge cells (row) and an edge cell feeds its red cell (column); every
active cell beats every inactive cell in its lines; inactive-inactive
pairs default to left-to-right in rows and top-to-bottom in columns.
Two edge cells sharing a line get a direction from a propagated
two-coloring with one rule: no edge cell may both receive a column hop
and emit a row hop.  Otherwise a path could slide from one vertex's
column into another vertex's row and fabricate a cycle G has no right
to; under the rule every path through edge cells still realizes a real
H-edge.

The run-of-three layout supports vertex degrees up to six; larger
degrees cannot honor both the fixed segment sizes and the three-active
line limit, and the build refuses them explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Iterable

from .model import Cell

MAX_DEGREE = 6


class ReductionBuildError(ValueError):
    """The digraph cannot be laid out under the grid invariants."""


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ReductionBuildError("digraph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ReductionBuildError(f"edge ({u}, {v}) leaves the vertex range 1..{self.n}")
            if u == v:
                raise ReductionBuildError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ReductionBuildError(f"parallel edge ({u}, {v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, w in self.edges if w == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for u, _ in self.edges if u == v)


def digraph_is_acyclic(h: Digraph, removed: frozenset[int] = frozenset()) -> bool:
    """Kahn's algorithm on H minus a vertex set."""
    alive = [v for v in range(1, h.n + 1) if v not in removed]
    indeg = {v: 0 for v in alive}
    succ: dict[int, list[int]] = {v: [] for v in alive}
    for u, v in h.edges:
        if u in indeg and v in indeg:
            succ[u].append(v)
            indeg[v] += 1
    queue = [v for v in alive if indeg[v] == 0]
    done = 0
    while queue:
        u = queue.pop()
        done += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return done == len(alive)


def digraph_to_json(h: Digraph) -> dict[str, Any]:
    return {"n": h.n, "edges": [list(e) for e in h.edges]}


def digraph_from_json(data: dict[str, Any]) -> Digraph:
    return Digraph(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))


@dataclass(frozen=True)
class CellRole:
    kind: str  # "red" | "key" | "green" | "edge"
    vertex: int | None = None
    edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class GridReduction:
    source: Digraph
    side: int
    roles: dict[Cell, CellRole]
    key_cells: dict[int, Cell]
    red_segments: dict[int, tuple[Cell, ...]]
    green_segments: dict[int, tuple[Cell, ...]]
    edge_cells: dict[tuple[int, int], Cell]
    active_edges: frozenset[tuple[Cell, Cell]]
    staircase: tuple[Cell, ...] = field(repr=False)

    def is_active(self, cell: Cell) -> bool:
        return cell in self.roles

    def active_cells(self) -> list[Cell]:
        return sorted(self.roles)

    def orientation(self, a: Cell, b: Cell) -> tuple[Cell, Cell]:
        """Direction of the tournament edge between two same-line cells."""
        if a == b or (a[0] != b[0] and a[1] != b[1]):
            raise ValueError(f"{a} and {b} do not share a row or column")
        if (a, b) in self.active_edges:
            return a, b
        if (b, a) in self.active_edges:
            return b, a
        a_act, b_act = self.is_active(a), self.is_active(b)
        if a_act and b_act:
            raise ValueError(f"active pair {a}, {b} missing from the tournament")
        if a_act != b_act:
            return (a, b) if a_act else (b, a)
        return (a, b) if a < b else (b, a)

    def active_successors(self) -> dict[Cell, list[Cell]]:
        adj: dict[Cell, list[Cell]] = {cell: [] for cell in self.roles}
        for u, v in self.active_edges:
            adj[u].append(v)
        for nbrs in adj.values():
            nbrs.sort()
        return adj


def _runs(cells: int, key_adjacent_last: bool) -> list[int]:
    """Split a segment into runs of at most three cells.

    The remainder run sits next to the key (last for red segments, first
    for green ones) so the key-adjacent cell absorbs a join where
    possible, maximizing cells left with a private line.
    """
    full, rem = divmod(cells, 3)
    runs = [3] * full
    if rem:
        runs = runs + [rem] if key_adjacent_last else [rem] + runs
    return runs


def build_reduction(h: Digraph) -> GridReduction:
    """Construct and verify the grid instance for a simple digraph."""
    n, m = h.n, h.m
    side = 4 * n + m
    for v in range(1, n + 1):
        if h.in_degree(v) > MAX_DEGREE or h.out_degree(v) > MAX_DEGREE:
            raise ReductionBuildError(
                f"vertex {v} has degree above {MAX_DEGREE}; the run-of-three "
                "layout cannot give every incident edge a private line"
            )

    roles: dict[Cell, CellRole] = {}
    key_cells: dict[int, Cell] = {}
    red_segments: dict[int, tuple[Cell, ...]] = {}
    green_segments: dict[int, tuple[Cell, ...]] = {}
    usable_red: dict[int, list[Cell]] = {}
    usable_green: dict[int, list[Cell]] = {}
    staircase: list[Cell] = []

    # Lay blocks out with row 0 at the bottom-left start, rows decreasing
    # upward; shift into 1..N at the end.
    bottom, left = 0, 1
    for v in range(1, n + 1):
        d_in, d_out = h.in_degree(v), h.out_degree(v)

        reds: list[Cell] = []
        r, c = bottom, left
        for idx, run in enumerate(_runs(d_in + 1, key_adjacent_last=True)):
            if idx > 0:
                r -= 1
            for t in range(run):
                if t > 0:
                    c += 1
                reds.append((r, c))
        key = (reds[-1][0] - 1, reds[-1][1])

        greens: list[Cell] = []
        gr, gc = key[0], key[1] + 1
        for idx, run in enumerate(_runs(d_out + 1, key_adjacent_last=False)):
            if idx > 0:
                gc += 1
            for t in range(run):
                if t > 0:
                    gr -= 1
                greens.append((gr, gc))

        for cell in reds:
            roles[cell] = CellRole("red", vertex=v)
        roles[key] = CellRole("key", vertex=v)
        for cell in greens:
            roles[cell] = CellRole("green", vertex=v)
        key_cells[v] = key
        red_segments[v] = tuple(reds)
        green_segments[v] = tuple(greens)
        staircase.extend(reds)
        staircase.append(key)
        staircase.extend(greens)

        red_col_load: dict[int, int] = {}
        for _, cc in reds:
            red_col_load[cc] = red_col_load.get(cc, 0) + 1
        usable_red[v] = [
            cell for cell in reds if red_col_load[cell[1]] == 1 and cell[1] != key[1]
        ]
        green_row_load: dict[int, int] = {}
        for rr, _ in greens:
            green_row_load[rr] = green_row_load.get(rr, 0) + 1
        usable_green[v] = [
            cell for cell in greens if green_row_load[cell[0]] == 1 and cell[0] != key[0]
        ]

        if d_in > 2 * len(usable_red[v]):
            raise ReductionBuildError(
                f"vertex {v}: in-degree {d_in} exceeds red segment capacity"
            )
        if d_out > 2 * len(usable_green[v]):
            raise ReductionBuildError(
                f"vertex {v}: out-degree {d_out} exceeds green segment capacity"
            )

        block_cells = reds + [key] + greens
        bottom = min(cell[0] for cell in block_cells) - 1
        left = max(cell[1] for cell in block_cells) + 1

    min_row = min(cell[0] for cell in roles)
    if 1 - min_row > side or left - 1 > side:
        raise ReductionBuildError(
            f"layout needs {1 - min_row} rows and {left - 1} columns "
            f"but the grid side is {side}"
        )

    def shift(cell: Cell) -> Cell:
        return (cell[0] + side, cell[1])

    roles = {shift(cell): role for cell, role in roles.items()}
    key_cells = {v: shift(cell) for v, cell in key_cells.items()}
    red_segments = {v: tuple(shift(c) for c in seg) for v, seg in red_segments.items()}
    green_segments = {v: tuple(shift(c) for c in seg) for v, seg in green_segments.items()}
    usable_red = {v: [shift(c) for c in cells] for v, cells in usable_red.items()}
    usable_green = {v: [shift(c) for c in cells] for v, cells in usable_green.items()}
    staircase = [shift(c) for c in staircase]

    def assign(slots: list[Cell], wanted: list[tuple[int, int]]) -> dict[tuple[int, int], Cell]:
        if len(wanted) <= len(slots):
            return {edge: slots[t] for t, edge in enumerate(wanted)}
        return {edge: slots[t % len(slots)] for t, edge in enumerate(wanted)}

    green_of: dict[tuple[int, int], Cell] = {}
    red_of: dict[tuple[int, int], Cell] = {}
    for v in range(1, n + 1):
        outgoing = sorted(e for e in h.edges if e[0] == v)
        incoming = sorted(e for e in h.edges if e[1] == v)
        green_of.update(assign(usable_green[v], outgoing))
        red_of.update(assign(usable_red[v], incoming))

    edge_cells: dict[tuple[int, int], Cell] = {}
    for e in h.edges:
        cell = (green_of[e][0], red_of[e][1])
        if cell in roles or cell in edge_cells.values():
            raise ReductionBuildError(f"edge cell collision at {cell} for edge {e}")
        edge_cells[e] = cell
    for e, cell in edge_cells.items():
        roles[cell] = CellRole("edge", edge=e)

    # Tournament over active cells: group by line, orient each pair.
    order = {cell: idx for idx, cell in enumerate(staircase)}
    by_row: dict[int, list[Cell]] = {}
    by_col: dict[int, list[Cell]] = {}
    for cell in roles:
        by_row.setdefault(cell[0], []).append(cell)
        by_col.setdefault(cell[1], []).append(cell)

    row_partner: dict[Cell, Cell] = {}
    col_partner: dict[Cell, Cell] = {}
    for lines, partner in ((by_row, row_partner), (by_col, col_partner)):
        for cells in lines.values():
            eps = sorted(c for c in cells if roles[c].kind == "edge")
            if len(eps) == 2:
                partner[eps[0]] = eps[1]
                partner[eps[1]] = eps[0]

    # Edge-edge orientation.  row_out[y] means y emits the hop in its
    # row pair, col_out[y] that it emits in its column pair.  The safety
    # rule "no column-in together with row-out" becomes the implication
    # row_out -> col_out, propagated across the pairing graph (a union
    # of paths and alternating cycles, so propagation always succeeds).
    row_out: dict[Cell, bool] = {}
    col_out: dict[Cell, bool] = {}

    def set_row(y: Cell, val: bool) -> None:
        if y in row_out:
            if row_out[y] != val:
                raise ReductionBuildError("edge-cell orientation conflict")
            return
        row_out[y] = val
        set_row(row_partner[y], not val)
        if val and y in col_partner:
            set_col(y, True)

    def set_col(y: Cell, val: bool) -> None:
        if y in col_out:
            if col_out[y] != val:
                raise ReductionBuildError("edge-cell orientation conflict")
            return
        col_out[y] = val
        set_col(col_partner[y], not val)
        if not val and y in row_partner:
            set_row(y, False)

    for y in sorted(col_partner):
        if y not in col_out:
            set_col(y, True)
    for y in sorted(row_partner):
        if y not in row_out:
            set_row(y, True)

    active_edges: set[tuple[Cell, Cell]] = set()
    for lines, out_map in ((by_row, row_out), (by_col, col_out)):
        for cells in lines.values():
            cells.sort()
            for a, b in combinations(cells, 2):
                ra, rb = roles[a], roles[b]
                if ra.kind != "edge" and rb.kind != "edge":
                    pair = (a, b) if order[a] < order[b] else (b, a)
                elif ra.kind == "edge" and rb.kind == "edge":
                    pair = (a, b) if out_map[a] else (b, a)
                else:
                    eps, other = (a, b) if ra.kind == "edge" else (b, a)
                    e = roles[eps].edge
                    assert e is not None
                    if roles[other].kind == "green" and green_of[e] == other:
                        pair = (other, eps)
                    elif roles[other].kind == "red" and red_of[e] == other:
                        pair = (eps, other)
                    else:
                        raise ReductionBuildError(
                            f"unexpected line sharing between {eps} and {other}"
                        )
                active_edges.add(pair)

    built = GridReduction(
        source=h,
        side=side,
        roles=roles,
        key_cells=key_cells,
        red_segments=red_segments,
        green_segments=green_segments,
        edge_cells=edge_cells,
        active_edges=frozenset(active_edges),
        staircase=tuple(staircase),
    )
    report = verify_reduction(built)
    if not report.ok:
        raise ReductionBuildError(
            "construction violates grid invariants: " + "; ".join(report.violations)
        )
    return built


# ---------------------------------------------------------------------------
# Verification


@dataclass
class ReductionReport:
    checks: dict[str, bool]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def _line_cells(g: GridReduction) -> Iterable[tuple[str, int, list[Cell]]]:
    for i in range(1, g.side + 1):
        yield "row", i, [(i, j) for j in range(1, g.side + 1)]
    for j in range(1, g.side + 1):
        yield "col", j, [(i, j) for i in range(1, g.side + 1)]


def _acyclic(nodes: list[Cell], edges: set[tuple[Cell, Cell]]) -> bool:
    indeg = {v: 0 for v in nodes}
    succ: dict[Cell, list[Cell]] = {v: [] for v in nodes}
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    queue = [v for v in nodes if indeg[v] == 0]
    done = 0
    while queue:
        u = queue.pop()
        done += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return done == len(nodes)


def verify_reduction(g: GridReduction) -> ReductionReport:
    """Check every structural guarantee of the construction.

    (a) each row and column induces an acyclic tournament;
    (b) inactive cells receive every edge shared with an active cell;
    (c) no line holds more than three active cells;
    (d) segment sizes match degrees and every H-edge has a well-placed
        edge cell;
    (e) no cycle can touch an inactive cell: their only out-edges lead to
        other inactive cells, whose induced subgraph is itself acyclic.
    """
    violations: list[str] = []
    checks = {}
    h = g.source

    ok_a = ok_b = ok_c = ok_e = True
    inactive_edges: set[tuple[Cell, Cell]] = set()
    inactive_nodes: list[Cell] = []
    for kind, index, cells in _line_cells(g):
        active = [c for c in cells if g.is_active(c)]
        if len(active) > 3:
            ok_c = False
            violations.append(f"{kind} {index} holds {len(active)} active cells")
        line_edges: set[tuple[Cell, Cell]] = set()
        broken = False
        for a, b in combinations(cells, 2):
            try:
                u, v = g.orientation(a, b)
            except ValueError as exc:
                ok_a = False
                violations.append(f"{kind} {index}: {exc}")
                broken = True
                continue
            line_edges.add((u, v))
            u_act, v_act = g.is_active(u), g.is_active(v)
            if v_act and not u_act:
                ok_b = False
                violations.append(f"inactive cell {u} has an edge into active {v}")
            if not u_act and not v_act:
                inactive_edges.add((u, v))
        if not broken and not _acyclic(cells, line_edges):
            ok_a = False
            violations.append(f"{kind} {index} tournament has a cycle")
    for i in range(1, g.side + 1):
        for j in range(1, g.side + 1):
            if not g.is_active((i, j)):
                inactive_nodes.append((i, j))
    if not _acyclic(inactive_nodes, inactive_edges):
        ok_e = False
        violations.append("inactive-induced subgraph has a cycle")

    ok_d = True

    def flag(msg: str) -> None:
        nonlocal ok_d
        ok_d = False
        violations.append(msg)

    for v in range(1, h.n + 1):
        if len(g.red_segments.get(v, ())) != h.in_degree(v) + 1:
            flag(f"red segment of {v} has {len(g.red_segments.get(v, ()))} cells")
        if len(g.green_segments.get(v, ())) != h.out_degree(v) + 1:
            flag(f"green segment of {v} has {len(g.green_segments.get(v, ()))} cells")
        if v not in g.key_cells:
            flag(f"vertex {v} has no key cell")
    green_sets = {v: set(seg) for v, seg in g.green_segments.items()}
    red_sets = {v: set(seg) for v, seg in g.red_segments.items()}
    for e in h.edges:
        cell = g.edge_cells.get(e)
        if cell is None:
            flag(f"edge {e} has no edge cell")
            continue
        src_greens = [c for c in green_sets[e[0]] if c[0] == cell[0]]
        dst_reds = [c for c in red_sets[e[1]] if c[1] == cell[1]]
        if len(src_greens) != 1:
            flag(f"edge cell {cell} shares its row with {len(src_greens)} green cells of {e[0]}")
        if len(dst_reds) != 1:
            flag(f"edge cell {cell} shares its column with {len(dst_reds)} red cells of {e[1]}")

    checks["line-tournaments-acyclic"] = ok_a
    checks["inactive-sinks"] = ok_b
    checks["active-per-line"] = ok_c
    checks["segments-match-degrees"] = ok_d
    checks["inactive-on-no-cycle"] = ok_e
    return ReductionReport(checks, violations)


# ---------------------------------------------------------------------------
# Cycles, deletion, and the solution correspondence


def _cycle_in(adj: dict[Cell, list[Cell]], gone: frozenset[Cell] | set[Cell]) -> list[Cell] | None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {c: WHITE for c in adj if c not in gone}
    for start in sorted(color):
        if color[start] != WHITE:
            continue
        stack = [(start, 0)]
        path = [start]
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            nbrs = adj[node]
            if idx < len(nbrs):
                stack[-1] = (node, idx + 1)
                nxt = nbrs[idx]
                if nxt in gone:
                    continue
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


def grid_cycle_after_deletion(
    g: GridReduction, deleted: Iterable[Cell] = ()
) -> list[Cell] | None:
    """A directed cycle of G minus the deleted cells, or None.

    The search runs on active cells only; inactive cells provably sit on
    no cycle, and deleting them changes nothing.
    """
    return _cycle_in(g.active_successors(), frozenset(deleted))


def push_solution(g: GridReduction, deleted: Iterable[Cell]) -> frozenset[int]:
    """Map a grid deletion set to a feedback vertex set of H, no larger.

    Key, red, and green cells push to their own vertex; the edge cell of
    (u, w) pushes to u; inactive cells drop out.
    """
    cells = frozenset(deleted)
    if grid_cycle_after_deletion(g, cells) is not None:
        raise ValueError("deletion set does not make the grid acyclic")
    pushed = set()
    for cell in cells:
        role = g.roles.get(cell)
        if role is None:
            continue
        if role.kind == "edge":
            assert role.edge is not None
            pushed.add(role.edge[0])
        else:
            assert role.vertex is not None
            pushed.add(role.vertex)
    result = frozenset(pushed)
    assert digraph_is_acyclic(g.source, result), "pushing argument failed"
    return result


def lift_solution(g: GridReduction, vertices: Iterable[int]) -> frozenset[Cell]:
    """Map a feedback vertex set of H to the matching key-cell deletion."""
    fvs = frozenset(vertices)
    if not digraph_is_acyclic(g.source, fvs):
        raise ValueError("vertex set is not a feedback vertex set of the source digraph")
    lifted = frozenset(g.key_cells[v] for v in fvs)
    assert grid_cycle_after_deletion(g, lifted) is None, "lifted set left a grid cycle"
    return lifted


DEFAULT_SUBSET_BUDGET = 2 * 10**6


def fvs_bruteforce(
    h: Digraph, k_max: int, max_vertices: int = 12
) -> frozenset[int] | None:
    """Smallest feedback vertex set of size <= k_max, or None.

    Exhaustive over vertex subsets in lexicographic order, so the result
    is the lexicographically smallest among minimum sets.
    """
    if h.n > max_vertices:
        raise ValueError(f"exhaustive search only supported up to {max_vertices} vertices")
    for size in range(0, min(k_max, h.n) + 1):
        for subset in combinations(range(1, h.n + 1), size):
            if digraph_is_acyclic(h, frozenset(subset)):
                return frozenset(subset)
    return None


def grid_deletion_bruteforce(
    g: GridReduction, k_max: int, subset_budget: int = DEFAULT_SUBSET_BUDGET
) -> frozenset[Cell] | None:
    """Smallest active-cell deletion acyclifying G, size <= k_max, or None.

    Restricting to active cells is lossless: inactive cells lie on no
    cycle, so removing one never helps.
    """
    actives = g.active_cells()
    total = sum(comb(len(actives), s) for s in range(0, k_max + 1))
    if total > subset_budget:
        raise ValueError(
            f"{total} candidate subsets exceed the budget of {subset_budget}"
        )
    adj = g.active_successors()
    for size in range(0, k_max + 1):
        for subset in combinations(actives, size):
            if _cycle_in(adj, set(subset)) is None:
                return frozenset(subset)
    return None


# ---------------------------------------------------------------------------
# Serialization


def reduction_to_json(g: GridReduction) -> dict[str, Any]:
    role_rows = []
    for cell in sorted(g.roles):
        role = g.roles[cell]
        row: dict[str, Any] = {"cell": list(cell), "kind": role.kind}
        if role.vertex is not None:
            row["vertex"] = role.vertex
        if role.edge is not None:
            row["edge"] = list(role.edge)
        role_rows.append(row)
    return {
        "N": g.side,
        "source": digraph_to_json(g.source),
        "roles": role_rows,
        "active_edges": sorted([list(u), list(v)] for u, v in g.active_edges),
    }


def reduction_from_json(data: dict[str, Any]) -> GridReduction:
    h = digraph_from_json(data["source"])
    roles: dict[Cell, CellRole] = {}
    for row in data["roles"]:
        cell = (int(row["cell"][0]), int(row["cell"][1]))
        edge = tuple(row["edge"]) if "edge" in row else None
        roles[cell] = CellRole(row["kind"], row.get("vertex"), edge)

    def chain_order(cell: Cell) -> tuple[int, int]:
        return (-cell[0], cell[1])

    key_cells = {}
    red_segments: dict[int, tuple[Cell, ...]] = {}
    green_segments: dict[int, tuple[Cell, ...]] = {}
    edge_cells: dict[tuple[int, int], Cell] = {}
    for v in range(1, h.n + 1):
        reds = sorted((c for c, r in roles.items() if r.kind == "red" and r.vertex == v), key=chain_order)
        greens = sorted((c for c, r in roles.items() if r.kind == "green" and r.vertex == v), key=chain_order)
        red_segments[v] = tuple(reds)
        green_segments[v] = tuple(greens)
        keys = [c for c, r in roles.items() if r.kind == "key" and r.vertex == v]
        if len(keys) != 1:
            raise ReductionBuildError(f"vertex {v} must have exactly one key cell")
        key_cells[v] = keys[0]
    for c, r in roles.items():
        if r.kind == "edge":
            assert r.edge is not None
            edge_cells[r.edge] = c
    staircase: list[Cell] = []
    for v in range(1, h.n + 1):
        staircase.extend(red_segments[v])
        staircase.append(key_cells[v])
        staircase.extend(green_segments[v])
    active_edges = frozenset(
        ((int(u[0]), int(u[1])), (int(v[0]), int(v[1])))
        for u, v in data["active_edges"]
    )
    return GridReduction(
        source=h,
        side=int(data["N"]),
        roles=roles,
        key_cells=key_cells,
        red_segments=red_segments,
        green_segments=green_segments,
        edge_cells=edge_cells,
        active_edges=active_edges,
        staircase=tuple(staircase),
    )
