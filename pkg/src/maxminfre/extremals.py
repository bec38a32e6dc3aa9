"""Row classification and extremal solutions of single rows.

The feasible set of one row depends on how the diagonal entry compares with
the target b_i:

* ``diag_gt`` (a_ii > b_i): a single box; x_i is pinned to b_i.
* ``diag_eq`` (a_ii = b_i): one minimum solution and two maximal ones.
* ``diag_lt`` (a_ii < b_i): two maximal solutions and one minimal solution
  per anchor column j with a_ij >= b_i (the row then needs both x_i and x_j
  to reach b_i).

The two maximal constructions are the same for diag_eq and diag_lt rows:
variant 1 caps the row's own coordinate at b_i, variant 2 caps every column
with a_ij > b_i at b_i.  Aggregating per-class extremals componentwise gives
the box bounds that assemble the full feasible region.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, ZERO, Vec
from .model import Instance

VARIANTS = (1, 2)


def vec_min(*vecs: Vec) -> Vec:
    return tuple(map(min, *vecs))


def vec_max(*vecs: Vec) -> Vec:
    return tuple(map(max, *vecs))


def vec_le(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class RowClassification:
    n: int
    support: dict[int, tuple[int, ...]]  # columns with a_ij >= b_i
    support_strict: dict[int, tuple[int, ...]]  # a_ij > b_i
    support_equal: dict[int, tuple[int, ...]]  # a_ij = b_i
    diag_gt: tuple[int, ...]
    diag_eq: tuple[int, ...]
    diag_lt: tuple[int, ...]
    empty_support: tuple[int, ...]  # rows whose support is empty: infeasible


def classify_rows(inst: Instance) -> RowClassification:
    support: dict[int, tuple[int, ...]] = {}
    strict: dict[int, tuple[int, ...]] = {}
    equal: dict[int, tuple[int, ...]] = {}
    diag_gt, diag_eq, diag_lt = [], [], []
    empty = []
    for i in inst.rows:
        row = inst.A[i - 1]
        target = inst.b[i - 1]
        strict[i] = tuple(j for j in inst.rows if row[j - 1] > target)
        equal[i] = tuple(j for j in inst.rows if row[j - 1] == target)
        support[i] = tuple(sorted(strict[i] + equal[i]))
        if not support[i]:
            empty.append(i)
        diag = row[i - 1]
        if diag > target:
            diag_gt.append(i)
        elif diag == target:
            diag_eq.append(i)
        else:
            diag_lt.append(i)
    return RowClassification(
        n=inst.n,
        support=support,
        support_strict=strict,
        support_equal=equal,
        diag_gt=tuple(diag_gt),
        diag_eq=tuple(diag_eq),
        diag_lt=tuple(diag_lt),
        empty_support=tuple(empty),
    )


@dataclass(frozen=True)
class ExtremalSet:
    """Every extremal vector of every single-row feasible set."""

    row_max: dict[int, Vec]  # diag_gt rows: unique maximum
    row_min: dict[int, Vec]  # diag_gt and diag_eq rows: unique minimum
    max_pin: dict[int, Vec]  # diag_eq/diag_lt rows: variant-1 maximal
    max_cap: dict[int, Vec]  # diag_eq/diag_lt rows: variant-2 maximal
    min_anchor: dict[tuple[int, int], Vec]  # diag_lt rows: minimal per anchor

    def maximal(self, i: int, variant: int) -> Vec:
        return self.max_pin[i] if variant == 1 else self.max_cap[i]


def _pin_vector(n: int, i: int, value: Fraction) -> Vec:
    return tuple(value if j == i else ONE for j in range(1, n + 1))


def _unit_vector(n: int, i: int, value: Fraction) -> Vec:
    return tuple(value if j == i else ZERO for j in range(1, n + 1))


def extremal_solutions(inst: Instance, cls: RowClassification) -> ExtremalSet:
    n = inst.n
    row_max: dict[int, Vec] = {}
    row_min: dict[int, Vec] = {}
    max_pin: dict[int, Vec] = {}
    max_cap: dict[int, Vec] = {}
    min_anchor: dict[tuple[int, int], Vec] = {}
    for i in cls.diag_gt:
        target = inst.b[i - 1]
        row_max[i] = _pin_vector(n, i, target)
        row_min[i] = _unit_vector(n, i, target)
    for i in cls.diag_eq + cls.diag_lt:
        target = inst.b[i - 1]
        strict = set(cls.support_strict[i])
        max_pin[i] = _pin_vector(n, i, target)
        max_cap[i] = tuple(target if j in strict else ONE for j in range(1, n + 1))
        if i in cls.diag_eq:
            row_min[i] = _unit_vector(n, i, target)
        else:
            for j in cls.support[i]:
                min_anchor[i, j] = tuple(
                    target if k in (i, j) else ZERO for k in range(1, n + 1)
                )
    return ExtremalSet(row_max, row_min, max_pin, max_cap, min_anchor)


@dataclass(frozen=True)
class BoundVectors:
    """Componentwise aggregates over the selector-free extremal families.

    Empty families follow the lattice conventions: a max over nothing is the
    zero vector, a min over nothing the all-ones vector.
    """

    lower_gt: Vec  # max of diag_gt minimums
    upper_gt: Vec  # min of diag_gt maximums
    lower_eq: Vec  # max of diag_eq minimums


def aggregate_bounds(ext: ExtremalSet, cls: RowClassification) -> BoundVectors:
    n = cls.n
    zeros = (ZERO,) * n
    ones = (ONE,) * n
    lower_gt = vec_max(zeros, *(ext.row_min[i] for i in cls.diag_gt)) if cls.diag_gt else zeros
    upper_gt = vec_min(ones, *(ext.row_max[i] for i in cls.diag_gt)) if cls.diag_gt else ones
    lower_eq = vec_max(zeros, *(ext.row_min[i] for i in cls.diag_eq)) if cls.diag_eq else zeros
    return BoundVectors(lower_gt=lower_gt, upper_gt=upper_gt, lower_eq=lower_eq)


@dataclass(frozen=True)
class SelectorBounds:
    upper_eq: Vec  # min of chosen diag_eq maximal variants
    upper_lt: Vec  # min of chosen diag_lt maximal variants
    lower_lt: Vec  # max of chosen diag_lt anchored minimals


def selector_bounds(
    ext: ExtremalSet,
    cls: RowClassification,
    eq_choice: dict[int, int],
    lt_choice: dict[int, int],
    anchor: dict[int, int],
) -> SelectorBounds:
    """Bounds induced by one choice of variants and anchors.

    ``eq_choice`` picks a maximal variant per diag_eq row, ``lt_choice`` per
    diag_lt row, and ``anchor`` picks the anchored minimal per diag_lt row;
    anchors must lie in the row's support.
    """
    n = cls.n
    zeros = (ZERO,) * n
    ones = (ONE,) * n
    for i in cls.diag_eq:
        if eq_choice.get(i) not in VARIANTS:
            raise ValueError(f"eq choice for row {i} must be 1 or 2")
    for i in cls.diag_lt:
        if lt_choice.get(i) not in VARIANTS:
            raise ValueError(f"lt choice for row {i} must be 1 or 2")
        if anchor.get(i) not in cls.support[i]:
            raise ValueError(f"anchor for row {i} must lie in its support")
    upper_eq = (
        vec_min(ones, *(ext.maximal(i, eq_choice[i]) for i in cls.diag_eq))
        if cls.diag_eq
        else ones
    )
    upper_lt = (
        vec_min(ones, *(ext.maximal(i, lt_choice[i]) for i in cls.diag_lt))
        if cls.diag_lt
        else ones
    )
    lower_lt = (
        vec_max(zeros, *(ext.min_anchor[i, anchor[i]] for i in cls.diag_lt))
        if cls.diag_lt
        else zeros
    )
    return SelectorBounds(upper_eq=upper_eq, upper_lt=upper_lt, lower_lt=lower_lt)


@dataclass(frozen=True)
class Cell:
    """Axis-aligned box {x : lower <= x <= upper componentwise}."""

    lower: Vec
    upper: Vec

    @property
    def is_empty(self) -> bool:
        return not vec_le(self.lower, self.upper)

    def contains(self, x: Vec) -> bool:
        return vec_le(self.lower, x) and vec_le(x, self.upper)

    def dominates(self, other: "Cell") -> bool:
        """True when this box contains the other box entirely."""
        return vec_le(self.lower, other.lower) and vec_le(other.upper, self.upper)


def cell_of(bounds: BoundVectors, sel: SelectorBounds) -> Cell:
    return Cell(
        lower=vec_max(bounds.lower_gt, bounds.lower_eq, sel.lower_lt),
        upper=vec_min(bounds.upper_gt, sel.upper_eq, sel.upper_lt),
    )
