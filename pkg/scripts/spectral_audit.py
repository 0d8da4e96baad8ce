#!/usr/bin/env python3
"""Exhaustive page-turn audit over a window of small spectral grids.

Enumerates every first-quadrant page-2 grid supported inside a square
window, with bounded cell dimensions and a bounded number of nonzero cells,
and checks on each one that every feasible differential plan moves the
antidiagonal totals down, with equality only for the zero plan.

Usage: python scripts/spectral_audit.py [--window 3] [--max-cells 6] [--max-dim 3]
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import combinations, product

from modulicoh.spectral import (
    SpectralGrid,
    enumerate_feasible_plans,
    total_dimensions,
    turn_page,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--window", type=int, default=3, help="side of the (p, q) window")
    parser.add_argument("--max-cells", type=int, default=6)
    parser.add_argument("--max-dim", type=int, default=3)
    args = parser.parse_args()

    cells = [(p, q) for p in range(args.window) for q in range(args.window)]
    dims = tuple(range(1, args.max_dim + 1))
    grids = 0
    plans = 0
    bad = 0
    start = time.perf_counter()
    for size in range(0, min(args.max_cells, len(cells)) + 1):
        for support in combinations(cells, size):
            for values in product(dims, repeat=size):
                grid = SpectralGrid(2, dict(zip(support, values)))
                grids += 1
                before = total_dimensions(grid)
                for plan in enumerate_feasible_plans(grid):
                    plans += 1
                    after = total_dimensions(turn_page(grid, plan))
                    padded = after + [0] * (len(before) - len(after))
                    monotone = all(x <= y for x, y in zip(padded, before))
                    tight = (padded == before) == plan.is_zero()
                    if not (monotone and tight):
                        bad += 1
                        print(f"violation: {grid!r} with ranks {dict(plan.ranks)}")
    elapsed = time.perf_counter() - start
    print(f"{grids} grids, {plans} plan applications, {bad} violations in {elapsed:.2f}s")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
