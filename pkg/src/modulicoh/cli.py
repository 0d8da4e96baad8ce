"""Command-line front end.

Subcommands map one-to-one onto library operations:

  verify    full certificate for one (n, d) instance, table or JSON
  factor    exact division of two polynomial JSON files
  gl        Poincaré-Serre polynomial of GL_n
  chern     truncated Chern series and its top coefficient for (n, d)
  disc      discriminant degree for (n, d)
  ss-check  degeneration test: grid file against a Betti-number file
  sweep     run the verifier over a whole (n, d) grid, count violations
  fixtures  write the named fixture polynomials as JSON files

Exit codes: 0 success, 1 computation reports failure (inexact division,
failed check, violations), 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bigraded import DivisionFailure, dumps_bigraded, exact_divide, format_bigraded, loads_bigraded
from .cohomology import gl_poincare_serre
from .fixtures import write_fixtures
from .spectral import check_degeneration, loads_grid
from .verifier import (
    CrossCheckError,
    ModuliInstance,
    chern_degree,
    chern_top_coefficient,
    discriminant_degree,
    gauss_chern_total,
    verify_instance,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _degree_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"expected an integer >= 2, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modulicoh",
        description="Exact certificates for hypersurface moduli cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="certificate for one (n, d) instance")
    p_verify.add_argument("n", type=_positive_int)
    p_verify.add_argument("d", type=_degree_int)
    fmt = p_verify.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--table", action="store_true", help="plain-text table (default)")

    p_factor = sub.add_parser("factor", help="exact polynomial division of two JSON files")
    p_factor.add_argument("total_file", type=Path)
    p_factor.add_argument("divisor_file", type=Path)

    p_gl = sub.add_parser("gl", help="Poincaré-Serre polynomial of GL_n")
    p_gl.add_argument("n", type=_nonneg_int)
    p_gl.add_argument("--json", action="store_true")

    p_chern = sub.add_parser("chern", help="Gauss-map Chern series for (n, d)")
    p_chern.add_argument("n", type=_positive_int)
    p_chern.add_argument("d", type=_degree_int)

    p_disc = sub.add_parser("disc", help="discriminant degree for (n, d)")
    p_disc.add_argument("n", type=_positive_int)
    p_disc.add_argument("d", type=_degree_int)

    p_ss = sub.add_parser("ss-check", help="grid degeneration against Betti numbers")
    p_ss.add_argument("e2_file", type=Path)
    p_ss.add_argument("betti_file", type=Path)

    p_sweep = sub.add_parser("sweep", help="verify every instance on an (n, d) grid")
    p_sweep.add_argument("n_max", type=_positive_int)
    p_sweep.add_argument("d_max", type=_degree_int)

    p_fixtures = sub.add_parser("fixtures", help="write fixture polynomials as JSON")
    p_fixtures.add_argument("--out", type=Path, default=Path("fixtures"))

    return parser


def _load_polynomial(path: Path):
    try:
        return loads_bigraded(path.read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot read polynomial from {path}: {exc}", file=sys.stderr)
        return None


def _cmd_verify(args) -> int:
    inst = ModuliInstance(args.n, args.d)
    try:
        report = verify_instance(inst)
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 1
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(report.render_table())
    return 0


def _cmd_factor(args) -> int:
    total = _load_polynomial(args.total_file)
    divisor = _load_polynomial(args.divisor_file)
    if total is None or divisor is None:
        return 2
    result = exact_divide(total, divisor)
    if isinstance(result, DivisionFailure):
        print(f"inexact division: first obstructing term {result}")
        return 1
    sys.stdout.write(dumps_bigraded(result))
    return 0


def _cmd_gl(args) -> int:
    poly = gl_poincare_serre(args.n)
    if args.json:
        sys.stdout.write(dumps_bigraded(poly))
    else:
        print(format_bigraded(poly))
    return 0


def _cmd_chern(args) -> int:
    inst = ModuliInstance(args.n, args.d)
    try:
        series = gauss_chern_total(inst)
        top = chern_top_coefficient(inst)
        degree = chern_degree(inst)
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 1
    print(f"c = {series}")
    print(f"top_coefficient: {top}")
    print(f"degree: {degree}")
    return 0


def _cmd_disc(args) -> int:
    print(discriminant_degree(ModuliInstance(args.n, args.d)))
    return 0


def _cmd_ss_check(args) -> int:
    try:
        grid = loads_grid(args.e2_file.read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot read grid from {args.e2_file}: {exc}", file=sys.stderr)
        return 2
    try:
        betti = json.loads(args.betti_file.read_text(encoding="utf-8"))
        if not isinstance(betti, list):
            raise ValueError("Betti file must hold a JSON array of nonnegative integers")
        degenerates = check_degeneration(grid, betti)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot read Betti numbers from {args.betti_file}: {exc}", file=sys.stderr)
        return 2
    print(f"degeneration: {'true' if degenerates else 'false'}")
    return 0 if degenerates else 1


def _cmd_sweep(args) -> int:
    violations = 0
    for n in range(1, args.n_max + 1):
        for d in range(2, args.d_max + 1):
            inst = ModuliInstance(n, d)
            try:
                report = verify_instance(inst)
            except CrossCheckError as exc:
                violations += 1
                print(f"violation at (n={n}, d={d}): {exc}", file=sys.stderr)
                continue
            expected = not (d == 2 and n % 2 == 1)
            if report.nonvanishing != expected:
                violations += 1
                print(
                    f"violation at (n={n}, d={d}): nonvanishing={report.nonvanishing}, "
                    f"expected {expected}",
                    file=sys.stderr,
                )
    print(f"{violations} violations")
    return 0 if violations == 0 else 1


def _cmd_fixtures(args) -> int:
    written = write_fixtures(args.out)
    for path in written:
        print(path)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "factor": _cmd_factor,
        "gl": _cmd_gl,
        "chern": _cmd_chern,
        "disc": _cmd_disc,
        "ss-check": _cmd_ss_check,
        "sweep": _cmd_sweep,
        "fixtures": _cmd_fixtures,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
