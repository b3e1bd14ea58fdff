"""Brute-force zero-locus oracle.

Over finite fields every point of k^n is visited, so answers are exact.
Over Q only sampled points can be checked, and verdicts say so.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from . import config
from .errors import ArityMismatch, FieldMismatch, InfiniteField, SearchSpaceTooLarge
from .fields import Field, Rationals
from .polys import MultiPoly

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 1000
SAMPLE_HEIGHT = 100


@dataclass(frozen=True)
class IdealSystem:
    """Generators f_1, ..., f_r of an ideal in k[X_1, ..., X_n]."""

    field: Field
    var_names: tuple[str, ...]
    generators: tuple[MultiPoly, ...] = ()
    generator_names: tuple[str, ...] = dc_field(default=())

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError(f"duplicate variable names in {self.var_names}")
        names = tuple(self.generator_names) or tuple(
            f"f{i + 1}" for i in range(len(self.generators))
        )
        if len(names) != len(self.generators):
            raise ValueError("one name per generator required")
        object.__setattr__(self, "generator_names", names)
        for g in self.generators:
            if g.field != self.field:
                raise FieldMismatch(f"generator over {g.field}, system over {self.field}")
            if g.nvars != self.nvars:
                raise ArityMismatch(f"generator in {g.nvars} variables, system has {self.nvars}")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def generator(self, name: str) -> MultiPoly:
        try:
            return self.generators[self.generator_names.index(name)]
        except ValueError:
            raise KeyError(name) from None


class Emptiness(enum.Enum):
    EMPTY = "Empty"
    NONEMPTY = "NonEmpty"
    UNKNOWN_SAMPLED = "UnknownSampled"


class Verdict(enum.Enum):
    EQUIVALENT = "Equivalent"
    COUNTEREXAMPLE = "CounterexamplePoint"
    UNKNOWN_SAMPLED = "UnknownSampled"


@dataclass
class ZeroLocusReport:
    mode: str  # "Exhaustive" or "Sampled"
    points: list[tuple]
    status: Emptiness
    field_size: int | None = None
    searched: int = 0
    seed: int | None = None

    def to_json(self, field: Field) -> dict:
        out = {
            "mode": self.mode,
            "status": self.status.value,
            "searched": self.searched,
            "points": [[field.format(c) for c in pt] for pt in self.points],
        }
        if self.field_size is not None:
            out["field_size"] = self.field_size
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@dataclass
class EquivalenceResult:
    verdict: Verdict
    point: tuple | None = None
    points_checked: int = 0
    seed: int | None = None

    def __bool__(self):
        return self.verdict is not Verdict.COUNTEREXAMPLE


def _check_space(field: Field, nvars: int, max_points: int | None) -> int:
    if not field.is_finite:
        raise InfiniteField(f"cannot enumerate {field}^{nvars}")
    cap = config.max_points() if max_points is None else max_points
    total = field.size**nvars
    if total > cap:
        raise SearchSpaceTooLarge(f"{field}^{nvars} has {total} points, cap is {cap}")
    return total


def iter_points(field: Field, nvars: int):
    """Every point of k^n, first coordinate varying slowest."""
    return itertools.product(list(field.elements()), repeat=nvars)


def _common_zero(polys: Sequence[MultiPoly], pt) -> bool:
    return all(p.vanishes_at(pt) for p in polys)


def enumerate_zero_locus(
    polys: Sequence[MultiPoly], k: Field, nvars: int, max_points: int | None = None
) -> ZeroLocusReport:
    for p in polys:
        if p.field != k:
            raise FieldMismatch(f"{p.field} vs {k}")
        if p.nvars != nvars:
            raise ArityMismatch(f"{p.nvars} vs {nvars} variables")
    total = _check_space(k, nvars, max_points)
    # cheapest polynomials first so that most points are rejected early
    order = sorted(polys, key=lambda p: len(p.terms))
    points = [pt for pt in iter_points(k, nvars) if _common_zero(order, pt)]
    return ZeroLocusReport(
        mode="Exhaustive",
        points=points,
        status=Emptiness.NONEMPTY if points else Emptiness.EMPTY,
        field_size=k.size,
        searched=total,
    )


def sample_points(nvars: int, seed: int = DEFAULT_SEED, count: int = DEFAULT_SAMPLES,
                  height: int = SAMPLE_HEIGHT) -> list[tuple[Fraction, ...]]:
    """Origin, standard basis vectors, then ``count`` seeded random rationals."""
    pts = [tuple(Fraction(0) for _ in range(nvars))]
    for j in range(nvars):
        pts.append(tuple(Fraction(int(i == j)) for i in range(nvars)))
    rng = random.Random(seed)
    for _ in range(count):
        pts.append(tuple(
            Fraction(rng.randint(-height, height), rng.randint(1, height))
            for _ in range(nvars)
        ))
    return pts


def verify_equivalence(
    system: IdealSystem,
    collapsed: MultiPoly,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    max_points: int | None = None,
) -> EquivalenceResult:
    """Compare Z(collapsed) with the common zeros of the generators pointwise."""
    if collapsed.field != system.field:
        raise FieldMismatch(f"{collapsed.field} vs {system.field}")
    if collapsed.nvars != system.nvars:
        raise ArityMismatch(f"{collapsed.nvars} vs {system.nvars} variables")
    gens = system.generators
    k = system.field
    if k.is_finite:
        _check_space(k, system.nvars, max_points)
        pts, sampled = iter_points(k, system.nvars), False
    elif isinstance(k, Rationals):
        pts, sampled = sample_points(system.nvars, seed, samples), True
    else:
        raise InfiniteField(f"no sampling scheme for {k}")
    checked = 0
    for pt in pts:
        checked += 1
        if collapsed.vanishes_at(pt) != _common_zero(gens, pt):
            return EquivalenceResult(Verdict.COUNTEREXAMPLE, pt, checked, seed if sampled else None)
    if sampled:
        return EquivalenceResult(Verdict.UNKNOWN_SAMPLED, None, checked, seed)
    return EquivalenceResult(Verdict.EQUIVALENT, None, checked)


def is_empty(system: IdealSystem, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES,
             max_points: int | None = None) -> Emptiness:
    k = system.field
    gens = system.generators
    if k.is_finite:
        _check_space(k, system.nvars, max_points)
        for pt in iter_points(k, system.nvars):
            if _common_zero(gens, pt):
                return Emptiness.NONEMPTY
        return Emptiness.EMPTY
    # over Q: the origin covers constant-term-free systems; then sample
    for pt in sample_points(system.nvars, seed, samples):
        if _common_zero(gens, pt):
            return Emptiness.NONEMPTY
    return Emptiness.UNKNOWN_SAMPLED
