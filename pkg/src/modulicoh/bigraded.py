"""Bigraded polynomials with exact rational coefficients.

These are finite Q-linear combinations of monomials t^a * u^b, used to
record dimension counts (exponent of t = cohomological degree) refined by
weight (exponent of u).  A Tate twist of weight 2m appears as u^(2m).

Exact division is the workhorse: ``exact_divide(total, divisor)`` either
finds the unique polynomial quotient or returns a ``DivisionFailure``
carrying the first term of the remainder that cannot be matched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .rationals import as_fraction, format_rational, parse_rational

Key = tuple[int, int]


def _ut(key: Key) -> Key:
    """The same exponent pair read in (u, t) order."""
    return (key[1], key[0])


class BigradedPolynomial:
    """Immutable finite map from (t_exponent, u_exponent) to a nonzero Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Fraction | int | str] | None = None):
        clean: dict[Key, Fraction] = {}
        for key, raw in (terms or {}).items():
            t, u = key
            if not (isinstance(t, int) and isinstance(u, int)) or t < 0 or u < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {key!r}")
            c = as_fraction(raw)
            if c != 0:
                clean[(t, u)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BigradedPolynomial is immutable")

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return MappingProxyType(self._terms)

    @classmethod
    def zero(cls) -> "BigradedPolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "BigradedPolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, t: int, u: int, coefficient: Fraction | int | str = 1) -> "BigradedPolynomial":
        return cls({(t, u): coefficient})

    def coefficient(self, t: int, u: int) -> Fraction:
        return self._terms.get((t, u), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigradedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BigradedPolynomial") -> "BigradedPolynomial":
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BigradedPolynomial(out)

    def __sub__(self, other: "BigradedPolynomial") -> "BigradedPolynomial":
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return BigradedPolynomial(out)

    def __neg__(self) -> "BigradedPolynomial":
        return BigradedPolynomial({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, BigradedPolynomial):
            out: dict[Key, Fraction] = {}
            for (t1, u1), c1 in self._terms.items():
                for (t2, u2), c2 in other._terms.items():
                    key = (t1 + t2, u1 + u2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return BigradedPolynomial(out)
        c = as_fraction(other)
        return BigradedPolynomial({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def specialize_u(self, value: Fraction | int | str = 1) -> "BigradedPolynomial":
        """Substitute a rational value for u, collapsing weights."""
        v = as_fraction(value)
        out: dict[Key, Fraction] = {}
        for (t, u), c in self._terms.items():
            key = (t, 0)
            out[key] = out.get(key, Fraction(0)) + c * v**u
        return BigradedPolynomial(out)

    def evaluate(self, t_value: Fraction | int | str, u_value: Fraction | int | str) -> Fraction:
        tv, uv = as_fraction(t_value), as_fraction(u_value)
        return sum((c * tv**t * uv**u for (t, u), c in self._terms.items()), Fraction(0))

    def t_coefficients(self) -> list[Fraction]:
        """Coefficient list indexed by t-exponent; defined only when u-free."""
        if any(u != 0 for (_, u) in self._terms):
            raise ValueError("polynomial has u-terms; specialize u first")
        if not self._terms:
            return []
        top = max(t for (t, _) in self._terms)
        return [self.coefficient(t, 0) for t in range(top + 1)]

    def max_t_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(t for (t, _) in self._terms)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"t": t, "u": u, "c": format_rational(self._terms[(t, u)])}
                for (t, u) in sorted(self._terms)
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BigradedPolynomial":
        if set(data) != {"terms"}:
            raise ValueError(f"polynomial JSON must have exactly 'terms', got {sorted(data)}")
        out: dict[Key, Fraction] = {}
        for entry in data["terms"]:
            if set(entry) != {"t", "u", "c"}:
                raise ValueError(f"term must have exactly 't', 'u', 'c', got {sorted(entry)}")
            t, u = entry["t"], entry["u"]
            if not (isinstance(t, int) and isinstance(u, int)):
                raise ValueError(f"exponents must be integers, got t={t!r}, u={u!r}")
            key = (t, u)
            if key in out:
                raise ValueError(f"duplicate term at t={t}, u={u}")
            out[key] = parse_rational(entry["c"])
        return cls(out)

    def __str__(self) -> str:
        return format_bigraded(self)

    def __repr__(self) -> str:
        return f"BigradedPolynomial<{format_bigraded(self)}>"


def bigraded_mul(p: BigradedPolynomial, q: BigradedPolynomial) -> BigradedPolynomial:
    return p * q


def is_poincare_serre(p: BigradedPolynomial) -> bool:
    """True when every coefficient is a nonnegative integer (dimension data)."""
    return all(c.denominator == 1 and c >= 0 for c in p.terms.values())


@dataclass(frozen=True)
class DivisionFailure:
    """First remainder term that cannot be matched by any polynomial quotient."""

    term: Key
    coefficient: Fraction

    def __str__(self) -> str:
        return _format_term(self.term, self.coefficient, force_coefficient=False)


def exact_divide(
    total: BigradedPolynomial, divisor: BigradedPolynomial
) -> BigradedPolynomial | DivisionFailure:
    """Divide ``total`` by ``divisor`` exactly, or report the obstruction.

    Works from the bottom: repeatedly eliminate the lexicographically least
    remaining term of the remainder (t before u) against the least term of
    the divisor.  For an exact quotient q the leading term of q * divisor
    equals the leading term of ``total`` in *any* monomial order, which pins
    the largest admissible quotient monomial and its coefficient in both the
    (t, u)- and (u, t)-lexicographic orders.  The forced elimination fails
    exactly when one of those pins is violated, and the two bounds confine
    the quotient support to a finite box, so the loop always terminates.
    """
    if not divisor:
        raise ValueError("division by the zero polynomial")
    if not total:
        return BigradedPolynomial.zero()

    div_terms = divisor.terms
    d_min = min(div_terms)
    d_min_c = div_terms[d_min]

    lead_tu_total = max(total.terms)
    lead_tu_div = max(div_terms)
    lead_ut_total = max(total.terms, key=_ut)
    lead_ut_div = max(div_terms, key=_ut)
    bound_tu = (lead_tu_total[0] - lead_tu_div[0], lead_tu_total[1] - lead_tu_div[1])
    bound_ut = (lead_ut_total[0] - lead_ut_div[0], lead_ut_total[1] - lead_ut_div[1])
    ratio_tu = total.terms[lead_tu_total] / div_terms[lead_tu_div]
    ratio_ut = total.terms[lead_ut_total] / div_terms[lead_ut_div]

    remainder = dict(total.terms)
    quotient: dict[Key, Fraction] = {}
    while remainder:
        r_key = min(remainder)
        r_c = remainder[r_key]
        q_key = (r_key[0] - d_min[0], r_key[1] - d_min[1])
        q_c = r_c / d_min_c
        if q_key[0] < 0 or q_key[1] < 0:
            return DivisionFailure(r_key, r_c)
        if q_key > bound_tu or _ut(q_key) > _ut(bound_ut):
            return DivisionFailure(r_key, r_c)
        if q_key == bound_tu and q_c != ratio_tu:
            return DivisionFailure(r_key, r_c)
        if _ut(q_key) == _ut(bound_ut) and q_c != ratio_ut:
            return DivisionFailure(r_key, r_c)
        quotient[q_key] = q_c
        for (dt, du), dc in div_terms.items():
            key = (q_key[0] + dt, q_key[1] + du)
            new = remainder.get(key, Fraction(0)) - q_c * dc
            if new:
                remainder[key] = new
            else:
                remainder.pop(key, None)
    return BigradedPolynomial(quotient)


def bigraded_exact_divide(
    total: BigradedPolynomial, divisor: BigradedPolynomial
) -> BigradedPolynomial | DivisionFailure:
    return exact_divide(total, divisor)


def _format_term(key: Key, coefficient: Fraction, force_coefficient: bool) -> str:
    t, u = key
    factors: list[str] = []
    if t:
        factors.append("t" if t == 1 else f"t^{t}")
    if u:
        factors.append("u" if u == 1 else f"u^{u}")
    if not factors:
        return format_rational(coefficient)
    if coefficient == 1 and not force_coefficient:
        return "·".join(factors)
    if coefficient == -1 and not force_coefficient:
        return "-" + "·".join(factors)
    return "·".join([format_rational(coefficient), *factors])


def format_bigraded(p: BigradedPolynomial) -> str:
    """Human-readable form in ascending (t, u)-lex order with explicit dots."""
    if not p:
        return "0"
    parts: list[str] = []
    for key in sorted(p.terms):
        c = p.terms[key]
        body = _format_term(key, abs(c), force_coefficient=False)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def dumps_bigraded(p: BigradedPolynomial) -> str:
    """Canonical JSON text used for files and CLI output (stable byte-for-byte)."""
    return json.dumps(p.to_json_dict(), indent=2) + "\n"


def loads_bigraded(text: str) -> BigradedPolynomial:
    return BigradedPolynomial.from_json_dict(json.loads(text))
