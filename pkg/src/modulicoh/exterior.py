"""Exterior algebras on odd-degree generators, with exact coefficients.

An algebra is described by the degrees of its generators z_1, ..., z_n
(1-based indices).  All degrees must be odd, which forces z ∧ z = 0 and
makes every monomial anticommutation sign a pure permutation parity.
Elements are sparse: a map from sorted index subsets to nonzero Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from .rationals import as_fraction

Subset = tuple[int, ...]


@dataclass(frozen=True)
class ExteriorAlgebraDescriptor:
    """Degrees of the generators; index ℓ (1-based) has degree generator_degrees[ℓ-1]."""

    generator_degrees: tuple[int, ...]

    def __post_init__(self):
        for deg in self.generator_degrees:
            if not isinstance(deg, int) or isinstance(deg, bool) or deg <= 0:
                raise ValueError(f"generator degrees must be positive integers, got {deg!r}")
            if deg % 2 == 0:
                raise ValueError(f"generator degree must be odd, got {deg}")

    @property
    def n(self) -> int:
        return len(self.generator_degrees)

    def degree_of(self, index: int) -> int:
        if not 1 <= index <= self.n:
            raise ValueError(f"generator index {index} out of range 1..{self.n}")
        return self.generator_degrees[index - 1]

    def monomial_degree(self, subset: Subset) -> int:
        return sum(self.degree_of(i) for i in subset)


def _validate_subset(algebra: ExteriorAlgebraDescriptor, subset: Subset) -> Subset:
    key = tuple(subset)
    if list(key) != sorted(set(key)):
        raise ValueError(f"subset key must be strictly increasing, got {key}")
    for i in key:
        algebra.degree_of(i)
    return key


def _merge_sign(left: Subset, right: Subset) -> int:
    # Parity of the permutation sorting left + right (both already sorted):
    # count pairs (i, j) with i in left, j in right, i > j.
    inversions = 0
    for i in left:
        for j in right:
            if i > j:
                inversions += 1
    return -1 if inversions % 2 else 1


class ExteriorElement:
    """Q-linear combination of wedge monomials z_{i1} ∧ ... ∧ z_{ik}."""

    __slots__ = ("_algebra", "_terms")

    def __init__(
        self,
        algebra: ExteriorAlgebraDescriptor,
        terms: Mapping[Subset, Fraction | int | str] | None = None,
    ):
        clean: dict[Subset, Fraction] = {}
        for subset, raw in (terms or {}).items():
            key = _validate_subset(algebra, subset)
            c = as_fraction(raw)
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "_algebra", algebra)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExteriorElement is immutable")

    @property
    def algebra(self) -> ExteriorAlgebraDescriptor:
        return self._algebra

    @property
    def terms(self) -> Mapping[Subset, Fraction]:
        return MappingProxyType(self._terms)

    @classmethod
    def zero(cls, algebra: ExteriorAlgebraDescriptor) -> "ExteriorElement":
        return cls(algebra, {})

    @classmethod
    def scalar(cls, algebra: ExteriorAlgebraDescriptor, value: Fraction | int | str) -> "ExteriorElement":
        return cls(algebra, {(): value})

    @classmethod
    def generator(cls, algebra: ExteriorAlgebraDescriptor, index: int) -> "ExteriorElement":
        algebra.degree_of(index)
        return cls(algebra, {(index,): 1})

    def coefficient(self, subset: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(subset), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self._algebra == other._algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._algebra, frozenset(self._terms.items())))

    def _check_same_algebra(self, other: "ExteriorElement") -> None:
        if self._algebra != other._algebra:
            raise ValueError("elements live in different exterior algebras")

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        self._check_same_algebra(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return ExteriorElement(self._algebra, out)

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        self._check_same_algebra(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return ExteriorElement(self._algebra, out)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement(self._algebra, {k: -c for k, c in self._terms.items()})

    def scale(self, value: Fraction | int | str) -> "ExteriorElement":
        c = as_fraction(value)
        return ExteriorElement(self._algebra, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExteriorElement):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_homogeneous(self) -> bool:
        degrees = {self._algebra.monomial_degree(k) for k in self._terms}
        return len(degrees) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous element; zero element counts as degree 0."""
        degrees = {self._algebra.monomial_degree(k) for k in self._terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous, degrees {sorted(degrees)}")
        return degrees.pop()

    def map_terms(self, sign_of_subset) -> "ExteriorElement":
        """Rescale each monomial by a subset-dependent rational factor."""
        return ExteriorElement(
            self._algebra,
            {k: as_fraction(sign_of_subset(k)) * c for k, c in self._terms.items()},
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key in sorted(self._terms, key=lambda s: (self._algebra.monomial_degree(s), s)):
            c = self._terms[key]
            body = "∧".join(f"z{i}" for i in key) if key else str(abs(c))
            if key and abs(c) != 1:
                body = f"{abs(c)}·{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ExteriorElement<{self}>"


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    """Bilinear wedge product; overlapping monomials vanish, sign by merge parity."""
    a._check_same_algebra(b)
    out: dict[Subset, Fraction] = {}
    for left, c1 in a.terms.items():
        left_set = set(left)
        for right, c2 in b.terms.items():
            if left_set & set(right):
                continue
            key = tuple(sorted(left + right))
            contrib = _merge_sign(left, right) * c1 * c2
            out[key] = out.get(key, Fraction(0)) + contrib
    return ExteriorElement(a.algebra, out)


def exterior_basis(algebra: ExteriorAlgebraDescriptor) -> list[tuple[Subset, int]]:
    """All 2^n monomials as (subset, degree), sorted by (degree, subset)."""
    indices = range(1, algebra.n + 1)
    basis = [
        (subset, algebra.monomial_degree(subset))
        for k in range(algebra.n + 1)
        for subset in combinations(indices, k)
    ]
    basis.sort(key=lambda pair: (pair[1], pair[0]))
    return basis
