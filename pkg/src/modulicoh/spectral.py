"""First-quadrant spectral-sequence dimension bookkeeping over Q.

Pages are tables of nonnegative integers dim E_r^{p,q}; differentials are
tracked by rank only.  The page-turn rule is pure linear algebra: a rank-k
differential removes k dimensions from its source and k from its target.
That is enough to decide every degeneration question that only involves
dimension counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

Cell = tuple[int, int]


def _validate_cell(cell: Cell) -> Cell:
    p, q = cell
    if not isinstance(p, int) or isinstance(p, bool) or p < 0:
        raise ValueError(f"p must be a nonnegative integer, got {p!r}")
    if not isinstance(q, int) or isinstance(q, bool) or q < 0:
        raise ValueError(f"q must be a nonnegative integer, got {q!r}")
    return (p, q)


def _validate_page(page: int) -> int:
    if not isinstance(page, int) or isinstance(page, bool) or page < 2:
        raise ValueError(f"page must be an integer >= 2, got {page!r}")
    return page


class SpectralGrid:
    """One page of a first-quadrant spectral sequence; zero cells are dropped."""

    __slots__ = ("_page", "_dims")

    def __init__(self, page: int, dims: Mapping[Cell, int] | None = None):
        clean: dict[Cell, int] = {}
        for cell, dim in (dims or {}).items():
            key = _validate_cell(cell)
            if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
                raise ValueError(f"dimension at {key} must be a nonnegative integer, got {dim!r}")
            if dim:
                clean[key] = dim
        object.__setattr__(self, "_page", _validate_page(page))
        object.__setattr__(self, "_dims", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SpectralGrid is immutable")

    @property
    def page(self) -> int:
        return self._page

    @property
    def dims(self) -> Mapping[Cell, int]:
        return MappingProxyType(self._dims)

    def dim(self, p: int, q: int) -> int:
        return self._dims.get((p, q), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectralGrid):
            return NotImplemented
        return self._page == other._page and self._dims == other._dims

    def __hash__(self) -> int:
        return hash((self._page, frozenset(self._dims.items())))

    def __repr__(self) -> str:
        cells = ", ".join(f"({p},{q}):{d}" for (p, q), d in sorted(self._dims.items()))
        return f"SpectralGrid<page {self._page}; {cells or 'empty'}>"

    def to_json_dict(self) -> dict:
        return {
            "page": self._page,
            "cells": [
                {"p": p, "q": q, "dim": self._dims[(p, q)]} for (p, q) in sorted(self._dims)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SpectralGrid":
        if set(data) != {"page", "cells"}:
            raise ValueError(f"grid JSON must have exactly 'page' and 'cells', got {sorted(data)}")
        dims: dict[Cell, int] = {}
        for entry in data["cells"]:
            if set(entry) != {"p", "q", "dim"}:
                raise ValueError(f"cell must have exactly 'p', 'q', 'dim', got {sorted(entry)}")
            key = (entry["p"], entry["q"])
            if key in dims:
                raise ValueError(f"duplicate cell at {key}")
            dims[key] = entry["dim"]
        return cls(data["page"], dims)


@dataclass(frozen=True)
class DifferentialPlan:
    """Ranks of the page-r differentials d_r: (p,q) -> (p+r, q-r+1)."""

    page: int
    ranks: Mapping[Cell, int]

    def __post_init__(self):
        _validate_page(self.page)
        clean: dict[Cell, int] = {}
        for cell, rank in self.ranks.items():
            key = _validate_cell(cell)
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
                raise ValueError(f"rank at {key} must be a nonnegative integer, got {rank!r}")
            if rank and key[1] - self.page + 1 < 0:
                raise ValueError(
                    f"differential from {key} on page {self.page} leaves the first quadrant"
                )
            if rank:
                clean[key] = rank
        object.__setattr__(self, "ranks", MappingProxyType(clean))

    def rank(self, p: int, q: int) -> int:
        return self.ranks.get((p, q), 0)

    def is_zero(self) -> bool:
        return not self.ranks


def build_e2(base_betti: Iterable[int], fiber_betti: Iterable[int]) -> SpectralGrid:
    """Product page: dims(p, q) = base_betti[p] * fiber_betti[q]."""
    base = _validate_betti(base_betti, "base_betti")
    fiber = _validate_betti(fiber_betti, "fiber_betti")
    dims = {
        (p, q): bp * fq
        for p, bp in enumerate(base)
        for q, fq in enumerate(fiber)
        if bp * fq
    }
    return SpectralGrid(2, dims)


def _validate_betti(values: Iterable[int | Fraction], what: str) -> list[int]:
    out: list[int] = []
    for b in values:
        if isinstance(b, Fraction) and b.denominator == 1:
            b = int(b)
        if not isinstance(b, int) or isinstance(b, bool) or b < 0:
            raise ValueError(f"{what} entries must be nonnegative integers, got {b!r}")
        out.append(b)
    return out


def turn_page(grid: SpectralGrid, plan: DifferentialPlan) -> SpectralGrid:
    """Apply one page of differentials: new dim = old - rank out - rank in.

    The plan must match the grid's page, stay within source and target
    dimensions, and leave every cell nonnegative; violations name the cell.
    """
    r = grid.page
    if plan.page != r:
        raise ValueError(f"plan is for page {plan.page}, grid is on page {r}")
    for (p, q), k in plan.ranks.items():
        src = grid.dim(p, q)
        tgt = grid.dim(p + r, q - r + 1)
        if k > src:
            raise ValueError(f"rank {k} at cell ({p}, {q}) exceeds source dimension {src}")
        if k > tgt:
            raise ValueError(
                f"rank {k} at cell ({p}, {q}) exceeds target dimension {tgt} at ({p + r}, {q - r + 1})"
            )
    new_dims: dict[Cell, int] = {}
    for (p, q), dim in grid.dims.items():
        out_rank = plan.rank(p, q)
        in_rank = plan.rank(p - r, q + r - 1) if p - r >= 0 else 0
        new = dim - out_rank - in_rank
        if new < 0:
            raise ValueError(
                f"cell ({p}, {q}) would get dimension {new}: {dim} - {out_rank} out - {in_rank} in"
            )
        new_dims[(p, q)] = new
    return SpectralGrid(r + 1, new_dims)


def total_dimensions(grid: SpectralGrid) -> list[int]:
    """Antidiagonal sums b_k = sum of dims over p + q = k."""
    if not grid.dims:
        return []
    top = max(p + q for (p, q) in grid.dims)
    out = [0] * (top + 1)
    for (p, q), dim in grid.dims.items():
        out[p + q] += dim
    return out


def check_degeneration(e2: SpectralGrid, total_betti: Iterable[int]) -> bool:
    """True iff the page's antidiagonal sums already match the target Betti numbers."""
    want = _validate_betti(total_betti, "total_betti")
    have = total_dimensions(e2)
    width = max(len(want), len(have))
    return have + [0] * (width - len(have)) == want + [0] * (width - len(want))


def enumerate_feasible_plans(grid: SpectralGrid) -> Iterator[DifferentialPlan]:
    """All differential plans turn_page accepts on this grid, zero plan included.

    A cell can carry a differential only when both its source and its target
    have positive dimension; candidate ranks run up to the smaller of the
    two, and combinations that would drive some cell negative are skipped.
    """
    r = grid.page
    sources: list[tuple[Cell, int]] = []
    for (p, q), dim in sorted(grid.dims.items()):
        if q - r + 1 < 0:
            continue
        tgt = grid.dim(p + r, q - r + 1)
        cap = min(dim, tgt)
        if cap > 0:
            sources.append(((p, q), cap))
    for ranks in product(*(range(cap + 1) for _, cap in sources)):
        assignment = {cell: k for (cell, _), k in zip(sources, ranks) if k}
        feasible = True
        for (p, q), dim in grid.dims.items():
            out_rank = assignment.get((p, q), 0)
            in_rank = assignment.get((p - r, q + r - 1), 0) if p - r >= 0 else 0
            if dim - out_rank - in_rank < 0:
                feasible = False
                break
        if feasible:
            yield DifferentialPlan(r, assignment)


def dumps_grid(grid: SpectralGrid) -> str:
    return json.dumps(grid.to_json_dict(), indent=2) + "\n"


def loads_grid(text: str) -> SpectralGrid:
    return SpectralGrid.from_json_dict(json.loads(text))
