#!/usr/bin/env python3
"""Random-instance agreement sweep: solve each seeded instance both with and
without reduction rules and cross-check status and objective against the
exhaustive grid oracle.  Prints a summary and fails loudly on any mismatch."""

import argparse
import time

from maxminfre import load_instance, solve
from maxminfre.exact import decimal_str
from maxminfre.generate import random_fre_doc
from maxminfre.oracle import grid_optimum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--nmin", type=int, default=2)
    parser.add_argument("--nmax", type=int, default=4)
    parser.add_argument("--density", type=float, default=0.8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    started = time.perf_counter()
    feasible = 0
    causes: dict[str, int] = {}
    for k in range(args.count):
        n = args.nmin + k % (args.nmax - args.nmin + 1)
        sense = ("min", "max")[k % 2]
        inst = load_instance(
            random_fre_doc(n, args.density, seed=args.seed + k, sense=sense)
        )
        sol = solve(inst)
        bare = solve(inst, use_rules=False)
        grid = grid_optimum(inst)
        assert (sol.status == "optimal") == grid.feasible, f"status mismatch at seed {args.seed + k}"
        assert sol.status == bare.status
        if sol.optimal:
            feasible += 1
            assert sol.candidate.objective == grid.objective, f"objective mismatch at seed {args.seed + k}"
            assert sol.candidate == bare.candidate
            if k < 3:
                print(
                    f"seed {args.seed + k}: n={n} {sense} "
                    f"objective {decimal_str(sol.candidate.objective)}"
                )
        else:
            causes[sol.cause.cause] = causes.get(sol.cause.cause, 0) + 1
    elapsed = time.perf_counter() - started
    print(
        f"{args.count} instances in {elapsed:.1f} s: {feasible} feasible, "
        f"{args.count - feasible} infeasible {causes}"
    )
    print("solver == grid oracle == rule-free solver on every instance")


if __name__ == "__main__":
    main()
