"""Fold a list of generators into one polynomial with the same zero locus.

Given a root-free monic l(T) = T^n + a_1 T^{n-1} + ... + a_n, the pair
combination

    P(f1, f2) = sum_{k=0}^{n} a_k f1^{n-k} f2^k        (a_0 = 1)

vanishes at a point exactly when f1 and f2 both do: if f2(a) != 0 then
P(a) = f2(a)^n l(f1(a)/f2(a)) != 0, and if f2(a) = 0 then P(a) = f1(a)^n.
P lies in the ideal (f1, f2) via the cofactors

    A = sum_{k=0}^{n-1} a_k f1^{n-1-k} f2^k,    B = a_n f2^{n-1}.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from . import config
from .errors import ArityMismatch, CertificateError, DegreeOverflow, FieldMismatch
from .locus import IdealSystem
from .polys import MultiPoly
from .witness import WitnessPoly


class DegreeGrowthWarning(UserWarning):
    pass


@dataclass(frozen=True)
class CombineCertificate:
    f1: MultiPoly
    f2: MultiPoly
    result: MultiPoly
    cofactor_a: MultiPoly
    cofactor_b: MultiPoly
    witness: WitnessPoly

    def verify(self) -> bool:
        return verify_certificate(self, self.f1, self.f2)


@dataclass
class ChainResult:
    collapsed: MultiPoly
    steps: list[CombineCertificate]
    generator_order: tuple[int, ...]
    warnings: list[str] = dc_field(default_factory=list)


def _check_operands(w: WitnessPoly, f1: MultiPoly, f2: MultiPoly):
    if not (f1.field == f2.field == w.field):
        raise FieldMismatch(f"{f1.field}, {f2.field}, witness over {w.field}")
    if f1.nvars != f2.nvars:
        raise ArityMismatch(f"{f1.nvars} vs {f2.nvars} variables")


def combine_pair(w: WitnessPoly, f1: MultiPoly, f2: MultiPoly,
                 verify: bool | None = None) -> CombineCertificate:
    _check_operands(w, f1, f2)
    n = w.degree
    predicted = degree_bound(n, f1, f2)
    if predicted > config.MAX_DEGREE:
        raise DegreeOverflow(f"combined degree {predicted} exceeds {config.MAX_DEGREE}")
    a = w.coefficients
    F, nv = f1.field, f1.nvars

    pow1 = [MultiPoly.constant(F, nv, 1)]
    pow2 = [MultiPoly.constant(F, nv, 1)]
    for _ in range(n):
        pow1.append(pow1[-1] * f1)
        pow2.append(pow2[-1] * f2)

    result = MultiPoly.zero(F, nv)
    for k in range(n + 1):
        if not F.is_zero(a[k]):
            result = result + (pow1[n - k] * pow2[k]).scale(a[k])
    cof_a = MultiPoly.zero(F, nv)
    for k in range(n):
        if not F.is_zero(a[k]):
            cof_a = cof_a + (pow1[n - 1 - k] * pow2[k]).scale(a[k])
    cof_b = pow2[n - 1].scale(a[n])

    cert = CombineCertificate(f1, f2, result, cof_a, cof_b, w)
    if config.PARANOID if verify is None else verify:
        if not verify_certificate(cert, f1, f2):
            raise CertificateError("A*f1 + B*f2 != P(f1, f2)")
    return cert


def verify_certificate(c: CombineCertificate, f1: MultiPoly, f2: MultiPoly) -> bool:
    """Check A*f1 + B*f2 == result by exact expansion."""
    if not (f1.field == f2.field == c.result.field):
        raise FieldMismatch("certificate and operands over different fields")
    if not (f1.nvars == f2.nvars == c.result.nvars):
        raise ArityMismatch("certificate and operands in different variable counts")
    return c.cofactor_a * f1 + c.cofactor_b * f2 == c.result


def degree_bound(witness_degree: int, f1: MultiPoly, f2: MultiPoly) -> int:
    """Upper bound on deg P(f1, f2); zero operands count as degree 0 here."""
    return witness_degree * max(f1.degree(), f2.degree(), 0)


def predicted_degrees(witness_degree: int, degrees: list[int]) -> list[int]:
    """Upper bounds on each chain step's degree."""
    if len(degrees) < 2:
        return []
    acc = witness_degree * max(degrees[0], degrees[1])
    out = [acc]
    for d in degrees[2:]:
        acc = witness_degree * max(d, acc)
        out.append(acc)
    return out


def collapse_chain(w: WitnessPoly, system: IdealSystem,
                   verify: bool | None = None) -> ChainResult:
    """p_1 = P(f_1, f_2), p_i = P(f_{i+1}, p_{i-1}); the last p is returned."""
    if system.field != w.field:
        raise FieldMismatch(f"system over {system.field}, witness over {w.field}")
    gens = list(system.generators)
    order = tuple(range(len(gens)))
    if not gens:
        return ChainResult(MultiPoly.zero(system.field, system.nvars), [], order)
    if len(gens) == 1:
        return ChainResult(gens[0], [], order)

    notes = []
    bounds = predicted_degrees(w.degree, [g.degree() for g in gens])
    if bounds[-1] > config.MAX_DEGREE:
        raise DegreeOverflow(f"chain degree may reach {bounds[-1]}, cap is {config.MAX_DEGREE}")
    if bounds[-1] > config.WARN_DEGREE:
        msg = f"collapsed degree may reach {bounds[-1]}"
        notes.append(msg)
        warnings.warn(msg, DegreeGrowthWarning, stacklevel=2)

    steps = [combine_pair(w, gens[0], gens[1], verify)]
    for g in gens[2:]:
        steps.append(combine_pair(w, g, steps[-1].result, verify))
    return ChainResult(steps[-1].result, steps, order, notes)
