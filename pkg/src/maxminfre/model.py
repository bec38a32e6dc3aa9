"""Problem instances and exact membership testing.

An instance is a square system over x in [0,1]^n:

    for every row i:   max_j min{a_ij, x_i, x_j} = b_i

together with a linear objective c'x to minimize or maximize.  Row i is
satisfied exactly when (I) min{a_ij, x_i, x_j} <= b_i for every column j and
(II) equality holds for at least one column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, ZERO, Vec, as_vector, decimal_str, parse_scalar


class InstanceError(ValueError):
    """Malformed instance document: parse, dimension or range failure."""


@dataclass(frozen=True)
class Instance:
    n: int
    A: tuple[Vec, ...]
    b: Vec
    c: Vec
    sense: str  # "min" | "max"

    @property
    def rows(self) -> range:
        """Row/column indices; everything user-facing is 1-based."""
        return range(1, self.n + 1)

    def entry(self, i: int, j: int) -> Fraction:
        return self.A[i - 1][j - 1]


@dataclass(frozen=True)
class RowStatus:
    row: int
    achieved: Fraction
    required: Fraction
    witness: int | None  # first column attaining equality, if any
    violation: int | None  # first column whose term exceeds the target

    @property
    def satisfied(self) -> bool:
        return self.achieved == self.required


@dataclass(frozen=True)
class MembershipReport:
    feasible: bool
    rows: tuple[RowStatus, ...]


def squarify(A: list[list[Fraction]], b: list[Fraction]):
    """Pad a rectangular system to square order max(m, n).

    Extra columns (m > n) carry zero coefficients everywhere; extra rows
    (m < n) are all-zero with a zero target, hence vacuously satisfiable.
    """
    m = len(A)
    n = len(A[0]) if A else 0
    if m > n:
        A = [row + [ZERO] * (m - n) for row in A]
    elif n > m:
        A = [list(row) for row in A] + [[ZERO] * n for _ in range(n - m)]
        b = list(b) + [ZERO] * (n - m)
    return A, b


def _check_unit(value: Fraction, what: str) -> Fraction:
    if not (ZERO <= value <= ONE):
        raise InstanceError(f"{what} = {decimal_str(value)} outside [0, 1]")
    return value


def instance_from_doc(doc: dict) -> Instance:
    """Validate a parsed instance document and build an Instance.

    Non-square systems are padded to square order; costs for variables
    introduced by column padding default to zero.
    """
    if not isinstance(doc, dict):
        raise InstanceError("instance document must be a JSON object")
    for key in ("A", "b", "c"):
        if key not in doc:
            raise InstanceError(f"missing field {key!r}")
    sense = str(doc.get("sense", "min")).lower()
    sense = {"min": "min", "minimize": "min", "max": "max", "maximize": "max"}.get(sense)
    if sense is None:
        raise InstanceError(f"sense must be min or max, got {doc.get('sense')!r}")

    try:
        A = [[parse_scalar(v) for v in row] for row in doc["A"]]
        b = [parse_scalar(v) for v in doc["b"]]
        c = [parse_scalar(v) for v in doc["c"]]
    except (ValueError, TypeError) as exc:
        raise InstanceError(str(exc)) from exc

    m = len(A)
    if m == 0:
        raise InstanceError("A must have at least one row")
    width = len(A[0])
    if width == 0 or any(len(row) != width for row in A):
        raise InstanceError("A must be rectangular with at least one column")
    if len(b) != m:
        raise InstanceError(f"b has {len(b)} entries for {m} rows")
    if len(c) != width:
        raise InstanceError(f"c has {len(c)} entries for {width} columns")
    for i, row in enumerate(A, start=1):
        for j, v in enumerate(row, start=1):
            _check_unit(v, f"A[{i}][{j}]")
    for i, v in enumerate(b, start=1):
        _check_unit(v, f"b[{i}]")

    A, b = squarify(A, b)
    order = len(A)
    c = list(c) + [ZERO] * (order - len(c))
    return Instance(
        n=order,
        A=tuple(tuple(row) for row in A),
        b=tuple(b),
        c=tuple(c),
        sense=sense,
    )


def load_instance(source) -> Instance:
    """Load an instance from a dict, a JSON string, or a file path."""
    if isinstance(source, dict):
        return instance_from_doc(source)
    text = str(source)
    if not text.lstrip().startswith("{"):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InstanceError(f"cannot read instance file: {exc}") from exc
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from exc
    return instance_from_doc(doc)


def instance_to_doc(inst: Instance) -> dict:
    """Serialize with decimal strings so a reparse is exact."""
    return {
        "A": [[decimal_str(v) for v in row] for row in inst.A],
        "b": [decimal_str(v) for v in inst.b],
        "c": [decimal_str(v) for v in inst.c],
        "sense": inst.sense,
    }


def _validated_x(inst: Instance, x) -> Vec:
    vec = as_vector(x)
    if len(vec) != inst.n:
        raise InstanceError(f"x has {len(vec)} entries for order {inst.n}")
    for j, v in enumerate(vec, start=1):
        _check_unit(v, f"x[{j}]")
    return vec


def compose_row(inst: Instance, i: int, x) -> Fraction:
    """Row value max_j min{a_ij, x_i, x_j}."""
    if not 1 <= i <= inst.n:
        raise InstanceError(f"row index {i} outside 1..{inst.n}")
    vec = _validated_x(inst, x)
    xi = vec[i - 1]
    row = inst.A[i - 1]
    return max(min(row[j], xi, vec[j]) for j in range(inst.n))


def check_membership(inst: Instance, x) -> MembershipReport:
    """Exact feasibility test of x against every row.

    Witness/violation columns are the first ones in natural order, so the
    report is deterministic.
    """
    vec = _validated_x(inst, x)
    rows = []
    feasible = True
    for i in inst.rows:
        xi = vec[i - 1]
        arow = inst.A[i - 1]
        target = inst.b[i - 1]
        achieved = ZERO
        witness = None
        violation = None
        for j in inst.rows:
            term = min(arow[j - 1], xi, vec[j - 1])
            if term > achieved:
                achieved = term
            if violation is None and term > target:
                violation = j
            if witness is None and term == target:
                witness = j
        if violation is not None:
            witness = None
        satisfied = achieved == target
        feasible = feasible and satisfied
        rows.append(RowStatus(i, achieved, target, witness, violation))
    return MembershipReport(feasible=feasible, rows=tuple(rows))
