"""Root-free witness polynomials l(T): monic, non-constant, no roots in k."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from . import config
from .errors import (
    FieldMismatch,
    InvalidDegreeBound,
    InvalidWitness,
    NoWitnessFound,
    SearchSpaceTooLarge,
)
from .fields import Field, Rationals
from .polys import UniPoly


class Certificate(enum.Enum):
    EXHAUSTIVE_CHECK = "ExhaustiveCheck"
    RATIONAL_ROOT_TEST = "RationalRootTest"
    USER_ASSERTION = "UserAssertion"


def _method_for(field: Field) -> Certificate:
    return Certificate.RATIONAL_ROOT_TEST if isinstance(field, Rationals) else Certificate.EXHAUSTIVE_CHECK


@dataclass(frozen=True)
class WitnessPoly:
    poly: UniPoly
    certificate: Certificate

    def __post_init__(self):
        if not self.poly.is_monic() or self.poly.degree < 1:
            raise InvalidWitness(f"{self.poly} is not monic and non-constant")

    @property
    def field(self) -> Field:
        return self.poly.field

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coefficients(self) -> tuple:
        """Raw (a_0=1, a_1, ..., a_n) for l(T) = T^n + a_1 T^{n-1} + ... + a_n."""
        return tuple(reversed(self.poly.coeffs))

    @classmethod
    def from_user(cls, poly: UniPoly, verify: bool = True) -> "WitnessPoly":
        """Wrap a caller-supplied polynomial, re-checking it when the field allows."""
        w = cls(poly, Certificate.USER_ASSERTION)
        if verify and poly.roots_raw():
            raise InvalidWitness(f"{poly} has a root in {poly.field}")
        return w

    def __str__(self):
        return self.poly.format("T")


def certify_rootfree(w: WitnessPoly, k: Field) -> bool:
    """Recompute the root set instead of trusting the stored certificate."""
    if w.field != k:
        raise FieldMismatch(f"witness over {w.field}, expected {k}")
    return not w.poly.roots_raw()


def find_rootfree(k: Field, max_degree: int = 4) -> WitnessPoly:
    """First root-free monic polynomial of degree 2, 3, ... in enumeration order.

    Over Q the answer is fixed to T^2 + 1.
    """
    if max_degree < 2:
        raise InvalidDegreeBound(f"max_degree must be at least 2, got {max_degree}")
    if isinstance(k, Rationals):
        poly = UniPoly.monic(k, [0, 1])
        assert not poly.roots_raw()
        return WitnessPoly(poly, Certificate.RATIONAL_ROOT_TEST)
    if k.size > config.max_points():
        raise SearchSpaceTooLarge(f"exhaustive root checks over {k.size} elements exceed cap")
    elems = list(k.elements())
    for degree in range(2, max_degree + 1):
        for tail in itertools.product(elems, repeat=degree):
            poly = UniPoly.monic(k, tail)
            if not poly.roots_raw():
                return WitnessPoly(poly, _method_for(k))
    raise NoWitnessFound(f"no root-free polynomial of degree <= {max_degree} over {k}")
