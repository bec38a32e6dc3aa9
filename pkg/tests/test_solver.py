import itertools

import pytest
from hypothesis import assume, given

from maxminfre import (
    Instance,
    aggregate_bounds,
    cell_of,
    check_membership,
    classify_rows,
    extremal_solutions,
    feasible_region,
    gate_feasibility,
    load_instance,
    make_candidate,
    selector_bounds,
    solve,
)
from maxminfre.exact import ONE, ZERO
from maxminfre.extremals import BoundVectors, Cell
from maxminfre.reduction import (
    CAUSE_BOUND_CROSSING,
    CAUSE_EMPTY_SUPPORT,
    CAUSE_NO_TRIPLE,
    build_masks,
    initial_state,
)
from maxminfre.solver import enumerate_admissible

from .conftest import (
    DEMO_OBJECTIVE,
    DEMO_OPTIMUM,
    DEMO_REGION_LOWER,
    DEMO_REGION_UPPER,
    RULES_BLIND_INFEASIBLE,
    frac,
    fracs,
    instances,
)


def _prep(inst):
    cls = classify_rows(inst)
    ext = extremal_solutions(inst, cls)
    bounds = aggregate_bounds(ext, cls)
    return cls, ext, bounds


def test_gate_reports_empty_support():
    inst = load_instance({"A": [["0.2"]], "b": ["0.6"], "c": ["1"]})
    cls, ext, bounds = _prep(inst)
    verdict = gate_feasibility(inst, cls, bounds)
    assert verdict is not None and verdict.cause == CAUSE_EMPTY_SUPPORT


def test_gate_passes_two_pinned_rows():
    inst = load_instance(
        {"A": [["0.9", "0.1"], ["0.1", "0.9"]], "b": ["0.5", "0.8"], "c": ["1", "1"]}
    )
    cls, ext, bounds = _prep(inst)
    assert gate_feasibility(inst, cls, bounds) is None
    from maxminfre.oracle import grid_optimum

    assert solve(inst).optimal and grid_optimum(inst).feasible


def test_gate_detects_synthetic_crossing():
    # real instances only put lower-bound mass on each row's own coordinate,
    # so a crossing cannot arise from aggregate_bounds; feed one directly
    inst = load_instance({"A": [["0.9"]], "b": ["0.5"], "c": ["1"]})
    cls, _, _ = _prep(inst)
    fake = BoundVectors(lower_gt=(frac("0.5"),), upper_gt=(frac("0.5"),), lower_eq=(frac("0.8"),))
    verdict = gate_feasibility(inst, cls, fake)
    assert verdict is not None and verdict.cause == CAUSE_BOUND_CROSSING
    assert verdict.rows == (1,)


def test_demo_enumeration_counts(demo10):
    sol = solve(demo10)
    assert sol.statistics.enumerated == 8
    assert sol.statistics.admissible == 8
    assert sol.statistics.initial_cards == (16, 8, 144)
    assert sol.statistics.final_cards == (2, 1, 4)


def test_enumeration_streams_in_lexicographic_order(demo10):
    cls, ext, bounds = _prep(demo10)
    from maxminfre.reduction import reduce_domains

    state = reduce_domains(demo10, cls, ext, bounds)
    keys = [t.key() for t, _ in enumerate_admissible(state, bounds, ext)]
    assert keys == sorted(keys)
    assert keys[0] == ((1, 1, 1), (1, 1, 1, 1), (1, 1, 1))
    assert ((1, 1, 1), (1, 1, 1, 2), (1, 1, 1)) in keys


@given(instances(max_n=3))
def test_enumeration_matches_cross_product_filter(inst):
    cls, ext, bounds = _prep(inst)
    assume(not cls.empty_support)
    state = initial_state(build_masks(ext, cls, inst.b), cls)
    total = 1
    for dom in (
        [cls.support[i] for i in cls.diag_lt]
        + [(1, 2)] * len(cls.diag_eq)
        + [(1, 2)] * len(cls.diag_lt)
    ):
        total *= len(dom)
    assume(total <= 400)

    streamed = [(t.key(), c) for t, c in enumerate_admissible(state, bounds, ext)]

    expected = []
    for anchors in itertools.product(*[cls.support[i] for i in cls.diag_lt]):
        for eqs in itertools.product(*[(1, 2)] * len(cls.diag_eq)):
            for lts in itertools.product(*[(1, 2)] * len(cls.diag_lt)):
                sel = selector_bounds(
                    ext,
                    cls,
                    dict(zip(cls.diag_eq, eqs)),
                    dict(zip(cls.diag_lt, lts)),
                    dict(zip(cls.diag_lt, anchors)),
                )
                cell = cell_of(bounds, sel)
                if not cell.is_empty:
                    expected.append(((anchors, eqs, lts), cell))
    assert streamed == expected


def test_make_candidate_bound_selection():
    cell = Cell(lower=fracs(0, "0.2"), upper=fracs("0.8", 1))
    c = fracs(1, 1)
    assert make_candidate(None, cell, c, "min").x == cell.lower
    assert make_candidate(None, cell, c, "max").x == cell.upper
    negative = fracs(-1, -1)
    assert make_candidate(None, cell, negative, "min").x == cell.upper
    assert make_candidate(None, cell, negative, "max").x == cell.lower
    mixed = fracs(1, -1)
    assert make_candidate(None, cell, mixed, "min").x == fracs(0, 1)
    assert make_candidate(None, cell, mixed, "min").objective == frac(-1)


def test_zero_cost_counts_as_nonnegative():
    cell = Cell(lower=fracs("0.3",), upper=fracs("0.9",))
    assert make_candidate(None, cell, (ZERO,), "min").x == (frac("0.3"),)
    assert make_candidate(None, cell, (ZERO,), "max").x == (frac("0.9"),)


def test_solve_demo_golden(demo10):
    sol = solve(demo10)
    assert sol.optimal
    assert sol.candidate.x == DEMO_OPTIMUM
    assert sol.candidate.objective == DEMO_OBJECTIVE
    assert sol.candidate.triple.key() == ((1, 1, 1), (1, 1, 1, 2), (1, 1, 1))
    assert check_membership(demo10, sol.candidate.x).feasible


def test_solve_single_row():
    inst = load_instance({"A": [["0.5"]], "b": ["0.5"], "c": ["1"]})
    sol = solve(inst)
    assert sol.optimal and sol.candidate.x == (frac("0.5"),)
    assert sol.candidate.objective == frac("0.5")


def test_solve_reports_rules_blind_infeasibility():
    sol = solve(load_instance(RULES_BLIND_INFEASIBLE))
    assert sol.status == "infeasible"
    assert sol.cause.cause == CAUSE_NO_TRIPLE
    assert sol.statistics.rule_firings == ()


def test_solve_deterministic(demo10):
    assert solve(demo10) == solve(demo10)


def test_parallel_matches_sequential(demo10, monkeypatch):
    sequential = solve(demo10)
    monkeypatch.setenv("MAXMINFRE_PARALLEL", "2")
    parallel = solve(demo10)
    assert parallel == sequential


@given(instances(max_n=4))
def test_rules_do_not_change_the_optimum(inst):
    with_rules = solve(inst, use_rules=True)
    without = solve(inst, use_rules=False)
    assert with_rules.status == without.status
    if with_rules.optimal:
        assert with_rules.candidate == without.candidate


@given(instances(max_n=4))
def test_candidates_are_members(inst):
    sol = solve(inst)
    if sol.optimal:
        assert check_membership(inst, sol.candidate.x).feasible
        assert sol.candidate.cell.contains(sol.candidate.x)


def test_region_demo_single_cell(demo10):
    cells = feasible_region(demo10)
    assert len(cells) == 1
    assert cells[0].lower == DEMO_REGION_LOWER
    assert cells[0].upper == DEMO_REGION_UPPER


def test_region_without_dedup_keeps_every_box(demo10):
    cells = feasible_region(demo10, dedup=False)
    assert len(cells) == 8
    kept = feasible_region(demo10)
    assert all(any(k.dominates(c) for k in kept) for c in cells)


def test_region_infeasible_is_empty():
    assert feasible_region(load_instance(RULES_BLIND_INFEASIBLE)) == []
    assert feasible_region(load_instance({"A": [["0.2"]], "b": ["0.6"], "c": ["1"]})) == []


@given(instances(max_n=3))
def test_region_union_matches_membership_on_grid(inst):
    cells = feasible_region(inst)
    grid = sorted({ZERO, ONE, *inst.b})
    points = itertools.product(grid, repeat=inst.n)
    for x in itertools.islice(points, 200):
        member = check_membership(inst, x).feasible
        assert member == any(cell.contains(x) for cell in cells)


def test_binary_coefficients_give_binary_optimum():
    inst = Instance(
        n=3,
        A=(fracs(0, 1, 1), fracs(1, 0, 0), fracs(1, 0, 1)),
        b=(ZERO, ZERO, ZERO),
        c=fracs("2.5", "-1.5", "0.5"),
        sense="min",
    )
    for sense in ("min", "max"):
        sol = solve(Instance(inst.n, inst.A, inst.b, inst.c, sense))
        assert sol.optimal
        assert set(sol.candidate.x) <= {ZERO, ONE}
