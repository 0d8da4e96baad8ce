"""Numerical certificates for hypersurface moduli instances.

For a degree-d hypersurface in P^n this module computes the discriminant
degree, the multiplicities of the two boundary strata T_1 and T_2, the top
Chern coefficient of the Gauss-map quotient bundle, and the pullback
coefficient whose nonvanishing drives the main argument.  Every quantity
with more than one available derivation is computed along each route and
compared exactly; any disagreement raises CrossCheckError rather than
returning a value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rationals import format_rational
from .series import TruncatedSeries


class CrossCheckError(Exception):
    """Two independent derivations of the same quantity disagreed."""


@dataclass(frozen=True)
class ModuliInstance:
    """Hypersurfaces of degree d in P^n; d = 2 is allowed but flagged."""

    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 2:
            raise ValueError(f"d must be an integer >= 2, got {self.d!r}")

    @property
    def satisfies_degree_hypothesis(self) -> bool:
        """The main construction assumes d >= 3; smaller d is boundary data."""
        return self.d >= 3


def discriminant_degree(inst: ModuliInstance) -> int:
    """Degree of the discriminant of degree-d forms in n+1 variables."""
    return (inst.n + 1) * (inst.d - 1) ** inst.n


def milnor_brieskorn(exponents: Iterable[int]) -> int:
    """Milnor number of x_1^{a_1} + ... + x_k^{a_k}: the product of (a_i - 1)."""
    out = 1
    for a in exponents:
        if not isinstance(a, int) or isinstance(a, bool) or a < 2:
            raise ValueError(f"exponents must be integers >= 2, got {a!r}")
        out *= a - 1
    return out


def iota_multiplier(inst: ModuliInstance) -> int:
    """Intersection multiplicity picked up along the slice inclusion: d - 1."""
    return inst.d - 1


def codim_sigma_ell(inst: ModuliInstance, ell: int) -> int:
    """Codimension of the ℓ-th singularity stratum, defined for 1 <= ℓ <= n+1."""
    if not isinstance(ell, int) or isinstance(ell, bool) or not 1 <= ell <= inst.n + 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= {inst.n + 1}, got {ell!r}")
    return ell


def gauss_chern_total(inst: ModuliInstance) -> TruncatedSeries:
    """Total Chern class of the Gauss-map quotient bundle on the hypersurface.

    The hypersurface has dimension n-1, so the class lives in Q[h]/(h^n):
    (1 + (d-1)h)^(-1) * (1 - h)^(-1).
    """
    n, d = inst.n, inst.d
    a = TruncatedSeries.from_coeffs([1, d - 1][:n], n)
    b = TruncatedSeries.from_coeffs([1, -1][:n], n)
    return a.inverse() * b.inverse()


def whitney_chern_total(inst: ModuliInstance) -> TruncatedSeries:
    """Same class via the Whitney formula on the defining exact sequences.

    The ambient bundle has total class (1 + (d-1)h)^(-n-1).  The subbundle
    sits in a sequence whose quotient is Q_X ⊕ O(d-1)^n with
    c(Q_X) = (1 - h)^(-1), so c(F) = (1 + (d-1)h)^(-n) * (1 - h).  Dividing
    gives an independent route to gauss_chern_total.
    """
    n, d = inst.n, inst.d
    one_plus = TruncatedSeries.from_coeffs([1, d - 1][:n], n)
    one_minus = TruncatedSeries.from_coeffs([1, -1][:n], n)
    c_ambient = one_plus ** (-(n + 1))
    c_sub = (one_plus**-n) * one_minus
    return c_ambient * c_sub.inverse()


def chern_top_routes(inst: ModuliInstance) -> tuple[Fraction, Fraction, Fraction]:
    """Top Chern coefficient along three independent routes.

    Returns (series coefficient of h^{n-1}, geometric sum of (1-d)^i,
    closed form (1 - (1-d)^n)/d).  Callers compare them.
    """
    n, d = inst.n, inst.d
    series_route = gauss_chern_total(inst).coefficient(n - 1)
    sum_route = Fraction(sum((1 - d) ** i for i in range(n)))
    closed_route = Fraction(1 - (1 - d) ** n, d)
    return series_route, sum_route, closed_route


def chern_top_coefficient(inst: ModuliInstance) -> Fraction:
    """Coefficient of h^{n-1} in gauss_chern_total; always an integer."""
    series_route, sum_route, closed_route = chern_top_routes(inst)
    if not (series_route == sum_route == closed_route):
        raise CrossCheckError(
            f"top Chern coefficient disagrees at (n={inst.n}, d={inst.d}): "
            f"series={series_route}, sum={sum_route}, closed={closed_route}"
        )
    if series_route.denominator != 1:
        raise CrossCheckError(
            f"top Chern coefficient is not an integer at (n={inst.n}, d={inst.d}): {series_route}"
        )
    return series_route


def chern_degree(inst: ModuliInstance) -> int:
    """Degree of the top Chern class: d times its h^{n-1} coefficient."""
    value = inst.d * chern_top_coefficient(inst)
    closed = 1 - (1 - inst.d) ** inst.n
    if value != closed:
        raise CrossCheckError(
            f"chern degree disagrees at (n={inst.n}, d={inst.d}): {value} vs {closed}"
        )
    return closed


def t1_multiplicity(inst: ModuliInstance) -> int:
    """Multiplicity of the first boundary stratum: d(d-1)^n."""
    return inst.d * (inst.d - 1) ** inst.n


def t2_coefficient(inst: ModuliInstance) -> int:
    """Coefficient of the second stratum: (-1)^n (1 - (1-d)^n), cross-checked."""
    n, d = inst.n, inst.d
    closed = (-1) ** n * (1 - (1 - d) ** n)
    via_degree = (-1) ** n * chern_degree(inst)
    if closed != via_degree:
        raise CrossCheckError(
            f"T_2 coefficient disagrees at (n={n}, d={d}): {closed} vs {via_degree}"
        )
    return closed


def pullback_coefficient(inst: ModuliInstance) -> int:
    """Coefficient of the pulled-back discriminant class on the fiber.

    Computed as t1 + t2 and independently as (d-1)^{n+1} + (-1)^n; the two
    must agree exactly.
    """
    n, d = inst.n, inst.d
    summed = t1_multiplicity(inst) + t2_coefficient(inst)
    closed = (d - 1) ** (n + 1) + (-1) ** n
    if summed != closed:
        raise CrossCheckError(
            f"pullback coefficient disagrees at (n={n}, d={d}): {summed} vs {closed}"
        )
    return closed


@dataclass(frozen=True)
class VerifierReport:
    """All certified quantities for one (n, d) instance."""

    instance: ModuliInstance
    discriminant_degree: int
    t1_multiplicity: int
    t2_coefficient: int
    pullback_coefficient: int
    chern_top_coefficient: Fraction
    chern_degree: int
    nonvanishing: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.instance.n,
            "d": self.instance.d,
            "satisfies_degree_hypothesis": self.instance.satisfies_degree_hypothesis,
            "discriminant_degree": self.discriminant_degree,
            "t1_multiplicity": self.t1_multiplicity,
            "t2_coefficient": self.t2_coefficient,
            "pullback_coefficient": self.pullback_coefficient,
            "chern_top_coefficient": format_rational(self.chern_top_coefficient),
            "chern_degree": self.chern_degree,
            "nonvanishing": self.nonvanishing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def render_table(self) -> str:
        inst = self.instance
        hypothesis = "satisfied" if inst.satisfies_degree_hypothesis else "not satisfied (d < 3)"
        lines = [
            f"instance: n={inst.n}, d={inst.d}",
            f"degree_hypothesis: {hypothesis}",
            f"discriminant_degree: {self.discriminant_degree}",
            f"t1_multiplicity: {self.t1_multiplicity}",
            f"t2_coefficient: {self.t2_coefficient}",
            f"pullback_coefficient: {self.pullback_coefficient}",
            f"chern_top_coefficient: {format_rational(self.chern_top_coefficient)}",
            f"chern_degree: {self.chern_degree}",
            f"nonvanishing: {'true' if self.nonvanishing else 'false'}",
        ]
        return "\n".join(lines)


def verify_instance(inst: ModuliInstance) -> VerifierReport:
    """Assemble the full certificate; every cross-check must pass.

    nonvanishing records whether the pullback coefficient is nonzero.  For
    d >= 3 it is always true; the only zero on record is d = 2 with n odd,
    which is why d = 2 instances are flagged rather than rejected.
    """
    if gauss_chern_total(inst) != whitney_chern_total(inst):
        raise CrossCheckError(
            f"Whitney route disagrees with direct expansion at (n={inst.n}, d={inst.d})"
        )
    pullback = pullback_coefficient(inst)
    report = VerifierReport(
        instance=inst,
        discriminant_degree=discriminant_degree(inst),
        t1_multiplicity=t1_multiplicity(inst),
        t2_coefficient=t2_coefficient(inst),
        pullback_coefficient=pullback,
        chern_top_coefficient=chern_top_coefficient(inst),
        chern_degree=chern_degree(inst),
        nonvanishing=pullback != 0,
    )
    if inst.satisfies_degree_hypothesis and not report.nonvanishing:
        raise CrossCheckError(
            f"pullback coefficient vanished at (n={inst.n}, d={inst.d}) despite d >= 3"
        )
    return report
