"""Named Poincaré-Serre polynomial fixtures, written as canonical JSON files.

The moduli-space entries record external inputs: ps_u_n_d is the known
answer for the open locus over (n, d).  For (2,3), (3,3), (4,3), (2,5) the
orbit map makes it a GL torsor over a point, so the polynomial is the one
for GL_{n+1}; for (2,4) the quotient carries one extra class of degree 6
and weight 12, so the polynomial picks up the factor 1 + t^6 u^12.

Every fixture regenerates bit-identically from library operations; a test
pins the checked-in files against regeneration.
"""

from __future__ import annotations

from pathlib import Path

from .bigraded import BigradedPolynomial, dumps_bigraded, loads_bigraded
from .cohomology import gl_poincare_serre

GL_FIXTURE_MAX = 8

POINT_MODULI_INSTANCES = ((2, 3), (3, 3), (4, 3), (2, 5))


def ps_point() -> BigradedPolynomial:
    return BigradedPolynomial.one()


def ps_m24() -> BigradedPolynomial:
    """Moduli of quartic plane curves: one class in degree 6, weight 12."""
    return BigradedPolynomial({(0, 0): 1, (6, 12): 1})


def fixture_polynomials() -> dict[str, BigradedPolynomial]:
    """All fixtures keyed by file stem, in a stable order."""
    out: dict[str, BigradedPolynomial] = {}
    for k in range(1, GL_FIXTURE_MAX + 1):
        out[f"ps_gl_{k}"] = gl_poincare_serre(k)
    out["ps_point"] = ps_point()
    out["ps_m24"] = ps_m24()
    for n, d in POINT_MODULI_INSTANCES:
        out[f"ps_u_{n}_{d}"] = gl_poincare_serre(n + 1)
    out["ps_u_2_4"] = gl_poincare_serre(3) * ps_m24()
    return out


def write_fixtures(directory: Path | str) -> list[Path]:
    """Write every fixture as <stem>.json under the directory; return the paths."""
    base = Path(directory)
    base.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for stem, poly in fixture_polynomials().items():
        path = base / f"{stem}.json"
        path.write_text(dumps_bigraded(poly), encoding="utf-8")
        written.append(path)
    return written


def read_fixture(path: Path | str) -> BigradedPolynomial:
    return loads_bigraded(Path(path).read_text(encoding="utf-8"))
