"""Cohomological models: GL_n over C, projective space, and odd spheres.

H*(GL_n(C); Q) is the exterior algebra on generators eta_1, ..., eta_n with
deg eta_ℓ = 2ℓ-1 and Hodge weight 2ℓ.  Its Poincaré-Serre polynomial is the
product of (1 + t^{2ℓ-1} u^{2ℓ}).  The sphere model carries the two-term
polynomial 1 + t^{2n-1} u^{2n}; multiplying it against the GL_{n-1} polynomial
must reproduce the GL_n polynomial (the fibration consistency check).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraded import BigradedPolynomial
from .exterior import ExteriorAlgebraDescriptor, ExteriorElement
from .series import TruncatedSeries


def gl_generator_degrees(n: int) -> tuple[int, ...]:
    return tuple(2 * ell - 1 for ell in range(1, n + 1))


def is_gl_descriptor(algebra: ExteriorAlgebraDescriptor) -> bool:
    return algebra.generator_degrees == gl_generator_degrees(algebra.n)


@dataclass(frozen=True)
class GLCohomology:
    """H*(GL_n(C); Q) with its generator degrees and weights."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def algebra(self) -> ExteriorAlgebraDescriptor:
        return ExteriorAlgebraDescriptor(gl_generator_degrees(self.n))

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(2 * ell for ell in range(1, self.n + 1))

    def generator(self, ell: int) -> ExteriorElement:
        """The class eta_ℓ, degree 2ℓ-1, weight 2ℓ."""
        return ExteriorElement.generator(self.algebra, ell)

    @property
    def total_dimension(self) -> int:
        return 2**self.n

    @property
    def top_degree(self) -> int:
        return self.n**2

    def poincare(self) -> BigradedPolynomial:
        return gl_poincare(self.n)

    def poincare_serre(self) -> BigradedPolynomial:
        return gl_poincare_serre(self.n)


@dataclass(frozen=True)
class ProjectiveSpaceCohomology:
    """H*(P^n(C); Q) = Q[h]/(h^{n+1}), h the hyperplane class in degree 2."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")

    @property
    def truncation_order(self) -> int:
        return self.n + 1

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.truncation_order)

    def hyperplane(self) -> TruncatedSeries:
        return TruncatedSeries.monomial(1, self.truncation_order)


@dataclass(frozen=True)
class SphereModel:
    """A (2n-1)-sphere whose top class has weight 2n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def dimension(self) -> int:
        return 2 * self.n - 1

    @property
    def poincare_serre(self) -> BigradedPolynomial:
        return BigradedPolynomial({(0, 0): 1, (2 * self.n - 1, 2 * self.n): 1})


def gl_poincare(n: int) -> BigradedPolynomial:
    """Poincaré polynomial of GL_n(C): product of (1 + t^{2ℓ-1}), u-free.

    n = 0 returns 1 (the trivial group), so towers can start at the bottom.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    out = BigradedPolynomial.one()
    for ell in range(1, n + 1):
        out = out * BigradedPolynomial({(0, 0): 1, (2 * ell - 1, 0): 1})
    return out


def gl_poincare_serre(n: int) -> BigradedPolynomial:
    """Poincaré-Serre polynomial of GL_n(C): product of (1 + t^{2ℓ-1} u^{2ℓ})."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    out = BigradedPolynomial.one()
    for ell in range(1, n + 1):
        out = out * BigradedPolynomial({(0, 0): 1, (2 * ell - 1, 2 * ell): 1})
    return out


def sphere_fibration_check(n: int) -> bool:
    """Does the sphere times GL_{n-1} polynomial equal the GL_n polynomial?"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    product = SphereModel(n).poincare_serre * gl_poincare_serre(n - 1)
    return product == gl_poincare_serre(n)


def _require_gl_algebra(x: ExteriorElement) -> None:
    if not is_gl_descriptor(x.algebra):
        raise ValueError(
            f"element does not live in a GL cohomology algebra; degrees {x.algebra.generator_degrees}"
        )


def transposition_involution(x: ExteriorElement) -> ExteriorElement:
    """Sign action of transpose-inverse: eta_ℓ picks up (-1)^{ℓ-1}."""
    _require_gl_algebra(x)
    return x.map_terms(lambda subset: (-1) ** sum(ell - 1 for ell in subset))


def inversion_involution(x: ExteriorElement) -> ExteriorElement:
    """Sign action of group inversion: (-1)^k on each degree-k monomial."""
    _require_gl_algebra(x)
    return x.map_terms(lambda subset: (-1) ** x.algebra.monomial_degree(subset))
