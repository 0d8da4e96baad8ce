"""Truncated power series over Q: the ring Q[h]/(h^m).

A series carries its truncation order m and exactly m coefficients.  Series
of different orders never interoperate implicitly; use ``truncate`` to move
to a lower order first.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import as_fraction, format_rational, parse_rational


def _require_same_order(a: "TruncatedSeries", b: "TruncatedSeries") -> None:
    if a.order != b.order:
        raise ValueError(f"truncation order mismatch: {a.order} != {b.order}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of Q[h]/(h^m); ``coeffs[i]`` is the coefficient of h^i."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"truncation order must be a positive integer, got {self.order!r}")
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(f"need exactly {self.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction | int | str], order: int) -> "TruncatedSeries":
        """Series with the given low-order coefficients, zero-padded up to ``order``."""
        cs = [as_fraction(c) for c in coeffs]
        if len(cs) > order:
            raise ValueError(f"{len(cs)} coefficients exceed truncation order {order}")
        cs += [Fraction(0)] * (order - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coefficient: Fraction | int | str = 1) -> "TruncatedSeries":
        """The series c*h^k, which is zero when k >= order."""
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        if k >= order:
            return cls.zero(order)
        cs = [Fraction(0)] * order
        cs[k] = as_fraction(coefficient)
        return cls(order, tuple(cs))

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient index {k} outside [0, {self.order})")
        return self.coeffs[k]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _require_same_order(self, other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _require_same_order(self, other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def scale(self, c: Fraction | int | str) -> "TruncatedSeries":
        c = as_fraction(c)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            _require_same_order(self, other)
            m = self.order
            out = [Fraction(0)] * m
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(m - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return TruncatedSeries(m, tuple(out))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse in Q[h]/(h^m); requires a unit constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("non-unit: constant term is zero")
        m = self.order
        out = [Fraction(0)] * m
        out[0] = Fraction(1) / a0
        for k in range(1, m):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i] != 0:
                    acc += self.coeffs[i] * out[k - i]
            out[k] = -acc / a0
        return TruncatedSeries(m, tuple(out))

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int):
            raise TypeError("series exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, new_order: int) -> "TruncatedSeries":
        """Project onto Q[h]/(h^new_order); only lowering the order is defined."""
        if not 1 <= new_order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {new_order}")
        return TruncatedSeries(new_order, self.coeffs[:new_order])

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        if set(data) != {"order", "coeffs"}:
            raise ValueError(f"series JSON must have exactly 'order' and 'coeffs', got {sorted(data)}")
        order = data["order"]
        if not isinstance(order, int):
            raise ValueError(f"series order must be an integer, got {order!r}")
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        return cls(order, tuple(coeffs))

    def __str__(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            elif mag == 1:
                body = "h" if k == 1 else f"h^{k}"
            else:
                body = f"{format_rational(mag)}·h" + ("" if k == 1 else f"^{k}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        poly = " ".join(parts) if parts else "0"
        return f"{poly} (mod h^{self.order})"
