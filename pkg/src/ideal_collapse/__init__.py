"""Collapse a polynomial ideal over a non-algebraically-closed field to a
single polynomial with the same zero locus, and check the result by brute
force."""

from .collapse import ChainResult, CombineCertificate, collapse_chain, combine_pair, verify_certificate
from .fields import (
    QQ,
    ExtensionField,
    Field,
    FieldElement,
    PrimeField,
    Rationals,
    field_arith,
    field_enumerate,
    make_field,
)
from .locus import (
    Emptiness,
    IdealSystem,
    Verdict,
    ZeroLocusReport,
    enumerate_zero_locus,
    is_empty,
    verify_equivalence,
)
from .parsing import parse_poly, parse_system, print_canonical, print_system
from .polys import LinearTransform, MultiPoly, UniPoly, poly_substitute_linear
from .remark import MonicizationResult, monicize, specialize_and_solve
from .witness import Certificate, WitnessPoly, certify_rootfree, find_rootfree

__version__ = "0.1.0"
