"""Exact-arithmetic toolkit for hypersurface moduli cohomology.

Truncated power series over Q, bigraded Poincaré-Serre polynomials with an
exact-division routine, exterior-algebra models for GL_n cohomology, a
numerical certificate verifier for hypersurface instances, and a
first-quadrant spectral-sequence dimension engine.
"""

from .bigraded import (
    BigradedPolynomial,
    DivisionFailure,
    bigraded_exact_divide,
    bigraded_mul,
    dumps_bigraded,
    exact_divide,
    format_bigraded,
    is_poincare_serre,
    loads_bigraded,
)
from .cohomology import (
    GLCohomology,
    ProjectiveSpaceCohomology,
    SphereModel,
    gl_poincare,
    gl_poincare_serre,
    inversion_involution,
    sphere_fibration_check,
    transposition_involution,
)
from .exterior import ExteriorAlgebraDescriptor, ExteriorElement, exterior_basis, wedge
from .fixtures import fixture_polynomials, read_fixture, write_fixtures
from .rationals import as_fraction, format_rational, parse_rational
from .series import TruncatedSeries
from .spectral import (
    DifferentialPlan,
    SpectralGrid,
    build_e2,
    check_degeneration,
    dumps_grid,
    enumerate_feasible_plans,
    loads_grid,
    total_dimensions,
    turn_page,
)
from .verifier import (
    CrossCheckError,
    ModuliInstance,
    VerifierReport,
    chern_degree,
    chern_top_coefficient,
    chern_top_routes,
    codim_sigma_ell,
    discriminant_degree,
    gauss_chern_total,
    iota_multiplier,
    milnor_brieskorn,
    pullback_coefficient,
    t1_multiplicity,
    t2_coefficient,
    verify_instance,
    whitney_chern_total,
)

__version__ = "0.1.0"

__all__ = [
    "BigradedPolynomial",
    "CrossCheckError",
    "DifferentialPlan",
    "DivisionFailure",
    "ExteriorAlgebraDescriptor",
    "ExteriorElement",
    "GLCohomology",
    "ModuliInstance",
    "ProjectiveSpaceCohomology",
    "SphereModel",
    "SpectralGrid",
    "TruncatedSeries",
    "VerifierReport",
    "as_fraction",
    "bigraded_exact_divide",
    "bigraded_mul",
    "build_e2",
    "check_degeneration",
    "chern_degree",
    "chern_top_coefficient",
    "chern_top_routes",
    "codim_sigma_ell",
    "discriminant_degree",
    "dumps_bigraded",
    "dumps_grid",
    "enumerate_feasible_plans",
    "exact_divide",
    "exterior_basis",
    "fixture_polynomials",
    "format_bigraded",
    "format_rational",
    "gauss_chern_total",
    "gl_poincare",
    "gl_poincare_serre",
    "inversion_involution",
    "iota_multiplier",
    "is_poincare_serre",
    "loads_bigraded",
    "loads_grid",
    "milnor_brieskorn",
    "parse_rational",
    "pullback_coefficient",
    "read_fixture",
    "sphere_fibration_check",
    "t1_multiplicity",
    "t2_coefficient",
    "total_dimensions",
    "transposition_involution",
    "turn_page",
    "verify_instance",
    "wedge",
    "whitney_chern_total",
    "write_fixtures",
]
