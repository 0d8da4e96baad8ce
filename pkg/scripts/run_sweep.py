#!/usr/bin/env python3
"""Sweep the instance verifier over an (n, d) grid and print the ledger.

Every instance is verified with all internal cross-checks enabled; the
script prints one row per instance and a final violation count.  Exit code
is nonzero when any instance fails its checks or shows an unexpected
vanishing pattern.

Usage: python scripts/run_sweep.py [--n-max N] [--d-max D]
"""

from __future__ import annotations

import argparse
import sys

from modulicoh.verifier import CrossCheckError, ModuliInstance, verify_instance


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--d-max", type=int, default=10)
    args = parser.parse_args()

    header = f"{'n':>3} {'d':>3} {'disc':>10} {'t1':>10} {'t2':>12} {'pullback':>12} {'nonzero':>8}"
    print(header)
    print("-" * len(header))
    violations = 0
    for n in range(1, args.n_max + 1):
        for d in range(2, args.d_max + 1):
            inst = ModuliInstance(n, d)
            try:
                report = verify_instance(inst)
            except CrossCheckError as exc:
                violations += 1
                print(f"{n:>3} {d:>3} CROSS-CHECK FAILURE: {exc}")
                continue
            expected_nonzero = not (d == 2 and n % 2 == 1)
            if report.nonvanishing != expected_nonzero:
                violations += 1
            print(
                f"{n:>3} {d:>3} {report.discriminant_degree:>10} "
                f"{report.t1_multiplicity:>10} {report.t2_coefficient:>12} "
                f"{report.pullback_coefficient:>12} "
                f"{'yes' if report.nonvanishing else 'NO':>8}"
            )
    print(f"\n{violations} violations")
    return 0 if violations == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
