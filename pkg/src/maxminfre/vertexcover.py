"""Minimum vertex cover through the relational solver.

A simple graph maps to the zero-target instance A = adjacency, b = 0,
c = 1, maximized: a feasible x keeps min{a_ij, x_i, x_j} = 0 on every pair,
i.e. no edge may have both endpoints positive, and maximizing the sum pushes
an independent set of coordinates to one.  The complement {j : x_j = 0} is a
minimum vertex cover.  All diagonal entries equal the target, so every row is
diag_eq, anchors and diag_lt variants degenerate, and every selector
assignment is admissible; the optimum is binary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, ZERO, Vec
from .extremals import classify_rows, extremal_solutions
from .model import Instance, InstanceError
from .reduction import build_masks
from .solver import Solution, solve


class GraphError(ValueError):
    """Malformed graph input (bad header, self-loop, asymmetry, range)."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]  # normalized u < v, vertices 1..n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rows[u - 1][v - 1] = rows[v - 1][u - 1] = 1
        return tuple(tuple(r) for r in rows)

def make_graph(n: int, edges) -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    normalized = set()
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) outside vertex range 1..{n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}; only simple graphs are supported")
        normalized.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=frozenset(normalized))


def graph_from_adjacency(matrix) -> Graph:
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise GraphError("adjacency matrix must be square and nonempty")
    edges = []
    for i in range(n):
        for j in range(n):
            val = matrix[i][j]
            if val not in (0, 1):
                raise GraphError(f"adjacency entries must be 0/1, got {val!r}")
            if matrix[i][j] != matrix[j][i]:
                raise GraphError(f"adjacency must be symmetric (rows {i + 1}, {j + 1})")
            if i == j and val:
                raise GraphError(f"self-loop at vertex {i + 1}")
            if val and i < j:
                edges.append((i + 1, j + 1))
    return make_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either an edge-list ('p <n> <m>' then 'e <u> <v>' lines,
    'c' comments) or a JSON object with an "adjacency" matrix."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON graph: {exc}") from exc
        if "adjacency" not in doc:
            raise GraphError('JSON graph must contain an "adjacency" matrix')
        return graph_from_adjacency(doc["adjacency"])
    n = None
    declared_edges = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            try:
                n, declared_edges = int(parts[-2]), int(parts[-1])
            except (ValueError, IndexError) as exc:
                raise GraphError(f"bad problem line {lineno}: {raw!r}") from exc
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"edge before problem line at line {lineno}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (ValueError, IndexError) as exc:
                raise GraphError(f"bad edge line {lineno}: {raw!r}") from exc
            edges.append((u, v))
        else:
            raise GraphError(f"unrecognized line {lineno}: {raw!r}")
    if n is None:
        raise GraphError("missing problem line 'p <n> <m>'")
    graph = make_graph(n, edges)
    if declared_edges is not None and declared_edges != len(graph.edges):
        raise GraphError(
            f"header declares {declared_edges} edges, found {len(graph.edges)}"
        )
    return graph


def load_graph(source) -> Graph:
    """Load a graph from a Graph, inline content, or a file path."""
    if isinstance(source, Graph):
        return source
    text = str(source)
    if "\n" not in text and not text.lstrip().startswith("{"):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphError(f"cannot read graph file: {exc}") from exc
    return parse_graph(text)


def graph_to_doc(g: Graph) -> str:
    lines = [f"p {g.n} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def graph_to_instance(g: Graph) -> Instance:
    adjacency = g.adjacency
    return Instance(
        n=g.n,
        A=tuple(tuple(Fraction(v) for v in row) for row in adjacency),
        b=(ZERO,) * g.n,
        c=(ONE,) * g.n,
        sense="max",
    )


@dataclass(frozen=True)
class CoverResult:
    cover: tuple[int, ...]
    size: int
    x_star: Vec
    selector: dict[int, int]  # winning variant per row
    solution: Solution


def _specialized_optimum(g: Graph) -> tuple[Vec, tuple[int, ...]]:
    """Direct search over variant assignments with forward pruning.

    Assigning variant 2 to a row zeroes its neighbors' coordinates, so two
    adjacent rows never both need variant 2: whenever a neighbor already
    holds 2, only variant 1 is tried.  The first-found best keeps the
    lexicographically smallest assignment.
    """
    n = g.n
    adjacency = g.adjacency
    ones: Vec = (ONE,) * n
    best_vec: Vec | None = None
    best_sum: Fraction | None = None
    best_assign: tuple[int, ...] | None = None

    def descend(row: int, cur: Vec, assign: tuple[int, ...]):
        nonlocal best_vec, best_sum, best_assign
        if row > n:
            total = sum(cur, ZERO)
            if best_sum is None or total > best_sum:
                best_vec, best_sum, best_assign = cur, total, assign
            return
        pinned = tuple(
            cur[j] if j != row - 1 else min(cur[j], ZERO) for j in range(n)
        )
        descend(row + 1, pinned, assign + (1,))
        if any(assign[v - 1] == 2 for v in range(1, row) if adjacency[row - 1][v - 1]):
            return
        capped = tuple(
            min(cur[j], ZERO) if adjacency[row - 1][j] else cur[j] for j in range(n)
        )
        descend(row + 1, capped, assign + (2,))

    descend(1, ones, ())
    assert best_vec is not None and best_assign is not None
    return best_vec, best_assign


def solve_cover(g: Graph, specialized: bool = False) -> CoverResult:
    """Minimum vertex cover via the general solver.

    With ``specialized`` the pruned direct search runs as well and its result
    is asserted identical to the general route.
    """
    inst = graph_to_instance(g)
    sol = solve(inst)
    if not sol.optimal:  # zero vector always satisfies zero targets
        raise AssertionError(f"cover instance reported infeasible: {sol.cause}")
    cand = sol.candidate
    x = cand.x
    selector = dict(cand.triple.eq_choice)
    if specialized:
        spec_x, spec_assign = _specialized_optimum(g)
        if spec_x != x or spec_assign != cand.triple.eq_choices:
            raise AssertionError(
                "specialized search disagrees with the general solver: "
                f"{spec_x} vs {x}"
            )
    cover = tuple(j for j in range(1, g.n + 1) if x[j - 1] == ZERO)
    return CoverResult(
        cover=cover,
        size=len(cover),
        x_star=x,
        selector=selector,
        solution=sol,
    )


@dataclass(frozen=True)
class StructureCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[StructureCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_structure(result: CoverResult, g: Graph) -> StructureReport:
    """Audit the structural facts the reduction guarantees for cover runs."""
    inst = graph_to_instance(g)
    cls = classify_rows(inst)
    ext = extremal_solutions(inst, cls)
    checks = []

    all_eq = not cls.diag_gt and not cls.diag_lt and len(cls.diag_eq) == g.n
    checks.append(
        StructureCheck(
            "all-rows-diag-eq",
            all_eq,
            "" if all_eq else f"gt={cls.diag_gt} lt={cls.diag_lt}",
        )
    )

    stats = result.solution.statistics
    full = stats.enumerated == 2**g.n and stats.admissible == 2**g.n
    checks.append(
        StructureCheck(
            "every-assignment-admissible",
            full,
            "" if full else f"enumerated={stats.enumerated} admissible={stats.admissible}",
        )
    )

    twos = tuple(i for i, v in sorted(result.selector.items()) if v == 2)
    has_two = not g.edges or bool(twos)
    checks.append(
        StructureCheck(
            "some-variant-2",
            has_two,
            "" if has_two else "no row chose variant 2 despite edges",
        )
    )

    adjacency = g.adjacency
    clash = next(
        (
            (i1, i2)
            for a, i1 in enumerate(twos)
            for i2 in twos[a + 1 :]
            if adjacency[i1 - 1][i2 - 1]
        ),
        None,
    )
    checks.append(
        StructureCheck(
            "variant-2-rows-independent",
            clash is None,
            "" if clash is None else f"adjacent rows {clash} both chose variant 2",
        )
    )

    masks = build_masks(ext, cls, inst.b)
    pin_ok = all(
        masks.eq_max1[k] == tuple(ZERO if j == i else ONE for j in range(1, g.n + 1))
        for k, i in enumerate(masks.eq_rows)
    )
    cap_ok = all(
        masks.eq_max2[k]
        == tuple(ONE - Fraction(adjacency[i - 1][j - 1]) for j in range(1, g.n + 1))
        for k, i in enumerate(masks.eq_rows)
    )
    checks.append(
        StructureCheck(
            "masks-complement-adjacency",
            pin_ok and cap_ok,
            "" if pin_ok and cap_ok else f"pin_ok={pin_ok} cap_ok={cap_ok}",
        )
    )

    return StructureReport(checks=tuple(checks))
