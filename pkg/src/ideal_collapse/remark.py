"""Shear a polynomial until it is monic in its last variable, then look for
zeros on the line X_1 = ... = X_{n-1} = 0 of the new coordinates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import config
from .errors import ConstantInput, InfiniteField, NoMonicizerFound, SearchSpaceTooLarge
from .fields import FieldElement
from .polys import LinearTransform, MultiPoly


@dataclass(frozen=True)
class MonicizationResult:
    original: MultiPoly
    transform: LinearTransform
    transformed: MultiPoly
    scaling: FieldElement
    monic_degree: int

    def to_original_coords(self, point) -> tuple:
        return self.transform.apply(point)

    def to_new_coords(self, point) -> tuple:
        return self.transform.inverse().apply(point)


def _shear_candidates(f: MultiPoly, d: int):
    F, m = f.field, f.nvars - 1
    if F.is_finite:
        if F.size**m > config.max_points():
            raise SearchSpaceTooLarge(f"{F.size ** m} shear candidates exceed cap")
        yield from itertools.product(list(F.elements()), repeat=m)
        return
    # over Q: {0..d}^m in graded order; a nonzero form of degree d cannot
    # vanish on that whole grid
    grid = sorted(itertools.product(range(d + 1), repeat=m), key=lambda c: (sum(c), c))
    for c in grid:
        yield tuple(F.from_int(x) for x in c)


def shear(field, nvars: int, c) -> LinearTransform:
    """X_i -> X_i + c_i X_n for i < n, X_n fixed."""
    n = nvars
    rows = []
    for j in range(n):
        row = [int(i == j) for i in range(n)]
        if j < n - 1:
            row[n - 1] = c[j]
        rows.append(row)
    return LinearTransform.make(field, rows)


def monicize(f: MultiPoly) -> MonicizationResult:
    if f.is_constant():
        raise ConstantInput("cannot monicize a constant polynomial")
    F, n = f.field, f.nvars
    d = f.degree()
    top = f.homogeneous_part(d)
    for c in _shear_candidates(f, d):
        lead = top.eval_raw(tuple(c) + (F.one,))
        if F.is_zero(lead):
            continue
        t = shear(F, n, c)
        scale = F.inv(lead)
        transformed = f.substitute_linear(t).scale(scale)
        assert transformed.coefficient((0,) * (n - 1) + (d,)) == F.one
        return MonicizationResult(f, t, transformed, FieldElement(F, scale), d)
    raise NoMonicizerFound(
        f"top-degree part of f vanishes on all of {F}^{n - 1} x {{1}}; field too small"
    )


def specialize_and_solve(m: MonicizationResult) -> list[tuple]:
    """Zeros (0, ..., 0, c) of the monic form, mapped back to original coordinates."""
    F = m.transformed.field
    if not F.is_finite:
        raise InfiniteField("specialization roots are searched exhaustively; need a finite field")
    n = m.transformed.nvars
    spec = m.transformed.specialize({j: 0 for j in range(n - 1)})
    uni = spec.to_univariate(n - 1)
    points = []
    for root in uni.roots_raw():
        pt = m.transform.apply_raw((F.zero,) * (n - 1) + (root,))
        assert m.original.vanishes_at(pt)
        points.append(pt)
    return points
