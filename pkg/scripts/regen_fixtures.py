#!/usr/bin/env python3
"""Regenerate the checked-in fixture JSON files.

Writes every named fixture polynomial under fixtures/ at the repository
root (or a directory given with --out).  Output is canonical, so rerunning
on an unchanged library is a no-op byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from modulicoh.fixtures import write_fixtures

REPO_ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=REPO_ROOT / "fixtures")
    args = parser.parse_args()
    for path in write_fixtures(args.out):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
