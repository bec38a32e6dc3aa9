"""End-to-end solve pipeline.

classify -> extremals -> bounds -> feasibility gates -> masks -> rules ->
streaming enumeration of selector triples -> per-triple candidate -> best
objective.  A selector triple (anchor assignment, diag_eq variants, diag_lt
variants) is admissible when its box is nonempty; by construction the
feasible region is exactly the union of those boxes, and some admissible
triple's candidate attains the optimum.

Enumeration is lexicographic in (anchors, eq variants, lt variants) with rows
ascending and values ascending, as a DFS that folds componentwise max/min
bounds along the path.  A branch is cut as soon as the partial upper bound
drops below the fixed lower bound somewhere; only provably empty boxes are
skipped, so the admissible stream is unaffected.  Ties between equal
objectives go to the lexicographically smallest triple, which the streaming
order yields for free.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import ZERO, Vec
from .extremals import (
    BoundVectors,
    Cell,
    ExtremalSet,
    RowClassification,
    aggregate_bounds,
    classify_rows,
    extremal_solutions,
    vec_le,
    vec_max,
    vec_min,
)
from .model import Instance
from .reduction import (
    CAUSE_BOUND_CROSSING,
    CAUSE_EMPTY_SUPPORT,
    CAUSE_NO_TRIPLE,
    Infeasibility,
    ReductionState,
    TraceEvent,
    build_masks,
    initial_state,
    reduce_domains,
)

PARALLEL_ENV = "MAXMINFRE_PARALLEL"


@dataclass(frozen=True)
class Triple:
    """One selector choice; value tuples follow ascending row order."""

    anchor_rows: tuple[int, ...]
    anchors: tuple[int, ...]
    eq_rows: tuple[int, ...]
    eq_choices: tuple[int, ...]
    lt_rows: tuple[int, ...]
    lt_choices: tuple[int, ...]

    def key(self) -> tuple:
        return (self.anchors, self.eq_choices, self.lt_choices)

    @property
    def anchor(self) -> dict[int, int]:
        return dict(zip(self.anchor_rows, self.anchors))

    @property
    def eq_choice(self) -> dict[int, int]:
        return dict(zip(self.eq_rows, self.eq_choices))

    @property
    def lt_choice(self) -> dict[int, int]:
        return dict(zip(self.lt_rows, self.lt_choices))


@dataclass(frozen=True)
class Candidate:
    triple: Triple
    cell: Cell
    x: Vec
    objective: Fraction


@dataclass(frozen=True)
class Statistics:
    enumerated: int  # size of the reduced selector product
    admissible: int  # triples whose box is nonempty
    initial_cards: tuple[int, int, int]  # (eq, lt, anchor) domain products
    final_cards: tuple[int, int, int]
    rule_firings: tuple[tuple[int, int], ...]  # (rule, count), rules that fired
    trace: tuple[TraceEvent, ...]


@dataclass(frozen=True)
class Solution:
    status: str  # "optimal" | "infeasible"
    candidate: Candidate | None
    cause: Infeasibility | None
    statistics: Statistics

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def gate_feasibility(
    inst: Instance, cls: RowClassification, bounds: BoundVectors
) -> Infeasibility | None:
    """Cheap necessary conditions checked before any enumeration."""
    if cls.empty_support:
        return Infeasibility(CAUSE_EMPTY_SUPPORT, cls.empty_support)
    lower = vec_max(bounds.lower_gt, bounds.lower_eq)
    if not vec_le(lower, bounds.upper_gt):
        rows = tuple(
            j for j in inst.rows if lower[j - 1] > bounds.upper_gt[j - 1]
        )
        return Infeasibility(CAUSE_BOUND_CROSSING, rows)
    return None


def _stats(state: ReductionState, admissible: int = 0, enumerated: int = 0) -> Statistics:
    initial = state.snapshots[0][1:]
    final = state.cardinalities()
    firings: dict[int, int] = {}
    for event in state.trace:
        firings[event.rule] = firings.get(event.rule, 0) + 1
    return Statistics(
        enumerated=enumerated,
        admissible=admissible,
        initial_cards=initial,
        final_cards=final,
        rule_firings=tuple(sorted(firings.items())),
        trace=tuple(state.trace),
    )


def enumerate_admissible(
    state: ReductionState,
    bounds: BoundVectors,
    ext: ExtremalSet,
) -> Iterator[tuple[Triple, Cell]]:
    """Yield (triple, nonempty box) over the reduced domains in lex order."""
    anchor_rows = state.masks.lt_rows
    eq_rows = state.masks.eq_rows
    lt_rows = anchor_rows
    anchor_doms = [state.anchor_dom[i] for i in anchor_rows]
    eq_doms = [state.eq_dom[i] for i in eq_rows]
    lt_doms = [state.lt_dom[i] for i in lt_rows]
    base_lower = vec_max(bounds.lower_gt, bounds.lower_eq)
    n = len(base_lower)
    cols = range(n)

    def lt_pass(lower: Vec, upper: Vec, anchors: tuple[int, ...], eqs: tuple[int, ...]):
        stack = [(0, upper, ())]
        while stack:
            depth, cur, chosen = stack.pop()
            if depth == len(lt_rows):
                if all(lower[j] <= cur[j] for j in cols):
                    yield Triple(
                        anchor_rows, anchors, eq_rows, eqs, lt_rows, chosen
                    ), Cell(lower, cur)
                continue
            row = lt_rows[depth]
            for variant in reversed(lt_doms[depth]):
                nxt = vec_min(cur, ext.maximal(row, variant))
                if all(lower[j] <= nxt[j] for j in cols):
                    stack.append((depth + 1, nxt, chosen + (variant,)))

    def eq_pass(lower: Vec, anchors: tuple[int, ...]):
        stack = [(0, bounds.upper_gt, ())]
        while stack:
            depth, cur, chosen = stack.pop()
            if depth == len(eq_rows):
                yield from lt_pass(lower, cur, anchors, chosen)
                continue
            row = eq_rows[depth]
            for variant in reversed(eq_doms[depth]):
                nxt = vec_min(cur, ext.maximal(row, variant))
                if all(lower[j] <= nxt[j] for j in cols):
                    stack.append((depth + 1, nxt, chosen + (variant,)))

    def anchor_pass():
        stack = [(0, base_lower, ())]
        while stack:
            depth, cur, chosen = stack.pop()
            if depth == len(anchor_rows):
                yield from eq_pass(cur, chosen)
                continue
            row = anchor_rows[depth]
            for column in reversed(anchor_doms[depth]):
                nxt = vec_max(cur, ext.min_anchor[row, column])
                if all(nxt[j] <= bounds.upper_gt[j] for j in cols):
                    stack.append((depth + 1, nxt, chosen + (column,)))

    yield from anchor_pass()


def make_candidate(triple: Triple, cell: Cell, c: Vec, sense: str) -> Candidate:
    """Per-box optimum: coordinates split by cost sign between the bounds."""
    take_lower_on_nonneg = sense == "min"
    x = tuple(
        (cell.lower[j] if take_lower_on_nonneg else cell.upper[j])
        if c[j] >= ZERO
        else (cell.upper[j] if take_lower_on_nonneg else cell.lower[j])
        for j in range(len(c))
    )
    objective = sum((cj * xj for cj, xj in zip(c, x)), ZERO)
    return Candidate(triple=triple, cell=cell, x=x, objective=objective)


def _better(sense: str, challenger: Fraction, incumbent: Fraction) -> bool:
    return challenger < incumbent if sense == "min" else challenger > incumbent


def _prepare(inst: Instance, use_rules: bool):
    cls = classify_rows(inst)
    if cls.empty_support:
        return cls, None, None, None, Infeasibility(CAUSE_EMPTY_SUPPORT, cls.empty_support)
    ext = extremal_solutions(inst, cls)
    bounds = aggregate_bounds(ext, cls)
    gate = gate_feasibility(inst, cls, bounds)
    if gate is not None:
        return cls, ext, bounds, None, gate
    if use_rules:
        state = reduce_domains(inst, cls, ext, bounds)
    else:
        state = initial_state(build_masks(ext, cls, inst.b), cls)
    return cls, ext, bounds, state, state.infeasible


def _empty_stats() -> Statistics:
    return Statistics(0, 0, (1, 1, 1), (1, 1, 1), (), ())


def parallelism_degree() -> int:
    try:
        return max(1, int(os.environ.get(PARALLEL_ENV, "1")))
    except ValueError:
        return 1


def solve(inst: Instance, use_rules: bool = True) -> Solution:
    """Global optimum or an infeasibility verdict naming its detector."""
    cls, ext, bounds, state, infeasible = _prepare(inst, use_rules)
    if infeasible is not None:
        stats = _stats(state) if state is not None else _empty_stats()
        return Solution("infeasible", None, infeasible, stats)

    enumerated = math.prod(state.cardinalities())
    best: Candidate | None = None
    admissible = 0
    degree = parallelism_degree()
    stream = enumerate_admissible(state, bounds, ext)
    if degree > 1:
        candidates = _parallel_candidates(inst, stream, degree)
    else:
        candidates = (
            make_candidate(triple, cell, inst.c, inst.sense) for triple, cell in stream
        )
    for cand in candidates:
        admissible += 1
        if best is None or _better(inst.sense, cand.objective, best.objective):
            best = cand

    stats = _stats(state, admissible=admissible, enumerated=enumerated)
    if best is None:
        return Solution("infeasible", None, Infeasibility(CAUSE_NO_TRIPLE), stats)
    return Solution("optimal", best, None, stats)


def _parallel_candidates(inst, stream, degree):
    """Evaluate candidates in worker processes, preserving stream order."""
    import multiprocessing as mp

    try:
        pool = mp.get_context("fork").Pool(degree)
    except (OSError, ValueError):  # restricted environments: fall back
        for triple, cell in stream:
            yield make_candidate(triple, cell, inst.c, inst.sense)
        return
    with pool:
        yield from pool.imap(
            _candidate_worker,
            ((triple, cell, inst.c, inst.sense) for triple, cell in stream),
            chunksize=64,
        )


def _candidate_worker(args):
    triple, cell, c, sense = args
    return make_candidate(triple, cell, c, sense)


def feasible_region(inst: Instance, dedup: bool = True) -> list[Cell]:
    """All nonempty boxes over admissible triples; empty when infeasible.

    With ``dedup`` every box contained in another returned box is dropped
    (first occurrence wins among equals), which does not change the union.
    """
    cls, ext, bounds, state, infeasible = _prepare(inst, use_rules=True)
    if infeasible is not None:
        return []
    cells = [cell for _, cell in enumerate_admissible(state, bounds, ext)]
    if not dedup:
        return cells
    kept: list[Cell] = []
    for cell in cells:
        if any(other.dominates(cell) for other in kept):
            continue
        kept = [other for other in kept if not cell.dominates(other)]
        kept.append(cell)
    return kept
