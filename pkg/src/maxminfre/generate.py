"""Seeded random instances and graphs for experiments and cross-checking.

All draws use one ``random.Random(seed)`` stream, so identical parameters
reproduce byte-identical documents.  Coefficients live on a two-decimal grid.
"""

from __future__ import annotations

import random

KINDS = ("random-fre", "random-binary-fre", "random-graph")


def _grid01(rng: random.Random) -> str:
    return f"{rng.randrange(101) / 100:.2f}"


def _cost(rng: random.Random) -> str:
    return f"{rng.randrange(-1000, 1001) / 100:.2f}"


def random_fre_doc(
    n: int, density: float, seed: int, sense: str = "min", b_cap: float = 1.0
) -> dict:
    """Entries zeroed with probability 1 - density; targets drawn up to
    ``b_cap`` (smaller caps make feasible instances much more likely)."""
    _validate(n, density)
    rng = random.Random(seed)
    top = round(b_cap * 100)
    A = [
        [_grid01(rng) if rng.random() < density else "0.00" for _ in range(n)]
        for _ in range(n)
    ]
    b = [f"{rng.randrange(top + 1) / 100:.2f}" for _ in range(n)]
    c = [_cost(rng) for _ in range(n)]
    return {"A": A, "b": b, "c": c, "sense": sense}


def random_binary_fre_doc(n: int, density: float, seed: int, sense: str = "min") -> dict:
    """0/1 coefficients with zero targets: the binary-optimum regime."""
    _validate(n, density)
    rng = random.Random(seed)
    A = [["1" if rng.random() < density else "0" for _ in range(n)] for _ in range(n)]
    b = ["0"] * n
    c = [_cost(rng) for _ in range(n)]
    return {"A": A, "b": b, "c": c, "sense": sense}


def random_graph_edges(n: int, density: float, seed: int) -> list[tuple[int, int]]:
    _validate(n, density)
    rng = random.Random(seed)
    return [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < density
    ]


def _validate(n: int, density: float) -> None:
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
