"""Sparse multivariate and dense univariate polynomials over a :class:`Field`.

A :class:`MultiPoly` maps exponent tuples to nonzero raw field values; the
zero polynomial has no terms. Values are immutable by convention: every
operation returns a new polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import config
from .errors import (
    ArityMismatch,
    DegreeOverflow,
    FieldMismatch,
    InfiniteField,
    SearchSpaceTooLarge,
    SingularTransform,
)
from .fields import ExtensionField, Field, FieldElement, PrimeField, Rationals

Exponent = tuple[int, ...]


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


def _coerce_point(field: Field, point, nvars: int) -> tuple:
    if len(point) != nvars:
        raise ArityMismatch(f"point has {len(point)} coordinates, expected {nvars}")
    return tuple(field.coerce(c) for c in point)


class MultiPoly:
    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ArityMismatch(f"bad exponent vector {exp} for {nvars} variables")
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[exp] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, nvars, terms) -> "MultiPoly":
        # terms already canonical: raw values, no zeros
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "MultiPoly":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, c) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: Field, nvars: int, j: int) -> "MultiPoly":
        if not 0 <= j < nvars:
            raise ArityMismatch(f"variable index {j} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[j] = 1
        return cls._raw(field, nvars, {tuple(exp): field.one})

    # -- structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, j: int) -> int:
        if not 0 <= j < self.nvars:
            raise ArityMismatch(f"variable index {j} out of range")
        return max((e[j] for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exp: Exponent):
        return self.terms.get(tuple(exp), self.field.zero)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(
            self.field, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}
        )

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        return None

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return MultiPoly.constant(self.field, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if F.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._raw(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly._raw(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "MultiPoly":
        F = self.field
        c = F.coerce(c)
        if F.is_zero(c):
            return MultiPoly.zero(F, self.nvars)
        return MultiPoly._raw(F, self.nvars, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.field, self.nvars)
        if self.degree() + other.degree() > config.MAX_DEGREE:
            raise DegreeOverflow(
                f"product degree {self.degree() + other.degree()} exceeds {config.MAX_DEGREE}"
            )
        F = self.field
        out: dict = {}
        get = out.get
        if isinstance(F, ExtensionField):
            add, mul, zero = F.add, F.mul, F.zero
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = add(get(e, zero), mul(ca, cb))
            out = {e: c for e, c in out.items() if c != zero}
        else:
            # ints (reduced once at the end) or Fractions
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = get(e, 0) + ca * cb
            if isinstance(F, PrimeField):
                p = F.p
                out = {e: c % p for e, c in out.items() if c % p}
            else:
                out = {e: c for e, c in out.items() if c}
        return MultiPoly._raw(F, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        if e == 0:
            return MultiPoly.constant(self.field, self.nvars, 1)
        if not self.terms:
            return self
        if self.degree() * e > config.MAX_DEGREE:
            raise DegreeOverflow(f"power degree {self.degree() * e} exceeds {config.MAX_DEGREE}")
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and substitution ------------------------------------------
    def eval_raw(self, point: Sequence):
        """Evaluate at a point of raw (already canonical) field values."""
        F = self.field
        if not self.terms:
            return F.zero
        n = self.nvars
        maxdeg = [0] * n
        for e in self.terms:
            for j in range(n):
                if e[j] > maxdeg[j]:
                    maxdeg[j] = e[j]
        if isinstance(F, ExtensionField):
            pw = []
            for j in range(n):
                row = [F.one]
                for _ in range(maxdeg[j]):
                    row.append(F.mul(row[-1], point[j]))
                pw.append(row)
            total = F.zero
            for e, c in self.terms.items():
                t = c
                for j in range(n):
                    if e[j]:
                        t = F.mul(t, pw[j][e[j]])
                total = F.add(total, t)
            return total
        prime = isinstance(F, PrimeField)
        pw = []
        for j in range(n):
            row = [1]
            x = point[j]
            for _ in range(maxdeg[j]):
                row.append(row[-1] * x % F.p if prime else row[-1] * x)
            pw.append(row)
        total = 0
        for e, c in self.terms.items():
            t = c
            for j in range(n):
                if e[j]:
                    t = t * pw[j][e[j]]
            total += t
        if prime:
            return total % F.p
        return Fraction(total)

    def eval(self, point) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(_coerce_point(self.field, point, self.nvars)))

    def vanishes_at(self, point) -> bool:
        return self.field.is_zero(self.eval_raw(point))

    def substitute_linear(self, transform: "LinearTransform") -> "MultiPoly":
        """Return f(M x + b): each X_j replaced by the j-th affine form."""
        if transform.field != self.field:
            raise FieldMismatch(f"{self.field} vs {transform.field}")
        if transform.n != self.nvars:
            raise ArityMismatch(f"transform on {transform.n} variables, poly has {self.nvars}")
        if not transform.is_invertible():
            raise SingularTransform("linear part is not invertible")
        F, n = self.field, self.nvars
        forms = []
        for j in range(n):
            form = MultiPoly.constant(F, n, transform.offset[j])
            for i in range(n):
                form = form + MultiPoly.variable(F, n, i).scale(transform.matrix[j][i])
            forms.append(form)
        powers = [[MultiPoly.constant(F, n, 1)] for _ in range(n)]

        def power(j, e):
            row = powers[j]
            while len(row) <= e:
                row.append(row[-1] * forms[j])
            return row[e]

        result = MultiPoly.zero(F, n)
        for e, c in self.terms.items():
            term = MultiPoly.constant(F, n, c)
            for j in range(n):
                if e[j]:
                    term = term * power(j, e[j])
            result = result + term
        return result

    def specialize(self, fixed: dict[int, object]) -> "MultiPoly":
        """Substitute constants for some variables (keeping arity)."""
        F = self.field
        vals = {j: F.coerce(v) for j, v in fixed.items()}
        out = MultiPoly.zero(F, self.nvars)
        for e, c in self.terms.items():
            t = c
            new_e = list(e)
            for j, v in vals.items():
                if e[j]:
                    t = F.mul(t, F.pow(v, e[j]))
                    new_e[j] = 0
            out = out + MultiPoly._raw(F, self.nvars, {} if F.is_zero(t) else {tuple(new_e): t})
        return out

    def to_univariate(self, j: int) -> "UniPoly":
        """View a polynomial involving only X_j as a UniPoly."""
        F = self.field
        coeffs = [F.zero] * (self.degree_in(j) + 1)
        for e, c in self.terms.items():
            if any(e[i] for i in range(self.nvars) if i != j):
                raise ValueError("polynomial involves other variables")
            coeffs[e[j]] = c
        return UniPoly(F, coeffs)

    # -- printing -------------------------------------------------------------
    def format(self, var_names: Sequence[str]) -> str:
        return format_poly(self, var_names)

    def __str__(self):
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return format_poly(self, names)

    def __repr__(self):
        return f"MultiPoly({self.field}, {self.nvars}, {str(self)!r})"


def _format_coeff(F: Field, c) -> tuple[bool, str]:
    """Return (negative, text of |c|) for printing."""
    if isinstance(F, Rationals):
        return c < 0, str(abs(c))
    if isinstance(F, ExtensionField):
        if F.in_prime_subfield(c):
            return False, str(c[0])
        return False, f"[{F.format(c)}]"
    return False, str(c)


def format_poly(f: MultiPoly, var_names: Sequence[str]) -> str:
    """Canonical text: graded-lex terms, unit coefficients and ^1 elided."""
    if len(var_names) != f.nvars:
        raise ArityMismatch(f"{len(var_names)} names for {f.nvars} variables")
    if not f.terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        neg, ctext = _format_coeff(f.field, c)
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(var_names, e) if k
        )
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


@dataclass(frozen=True)
class LinearTransform:
    """Point map a -> M a + b; as a substitution, X_j -> sum_i M[j][i] X_i + b_j."""

    field: Field
    matrix: tuple[tuple, ...]
    offset: tuple

    @classmethod
    def make(cls, field: Field, matrix, offset=None) -> "LinearTransform":
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise ArityMismatch("transform matrix must be square")
        m = tuple(tuple(field.coerce(x) for x in row) for row in matrix)
        b = tuple(field.coerce(x) for x in (offset if offset is not None else [0] * n))
        if len(b) != n:
            raise ArityMismatch("offset length must match matrix size")
        return cls(field, m, b)

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearTransform":
        return cls.make(field, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.matrix)

    def _inverse_matrix(self):
        F, n = self.field, self.n
        aug = [list(row) + [F.from_int(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.matrix)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not F.is_zero(aug[r][col])), None)
            if pivot is None:
                return None
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = F.inv(aug[col][col])
            aug[col] = [F.mul(inv, x) for x in aug[col]]
            for r in range(n):
                if r != col and not F.is_zero(aug[r][col]):
                    factor = aug[r][col]
                    aug[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(aug[r], aug[col])]
        return tuple(tuple(row[n:]) for row in aug)

    def is_invertible(self) -> bool:
        return self._inverse_matrix() is not None

    def inverse(self) -> "LinearTransform":
        minv = self._inverse_matrix()
        if minv is None:
            raise SingularTransform("linear part is not invertible")
        F = self.field
        # a = M^{-1} (y - b)
        off = tuple(
            F.neg(_dot(F, row, self.offset)) for row in minv
        )
        return LinearTransform(F, minv, off)

    def apply_raw(self, point: Sequence) -> tuple:
        F = self.field
        return tuple(F.add(_dot(F, row, point), b) for row, b in zip(self.matrix, self.offset))

    def apply(self, point) -> tuple:
        return self.apply_raw(_coerce_point(self.field, point, self.n))


def _dot(F: Field, row, vec):
    acc = F.zero
    for x, y in zip(row, vec):
        acc = F.add(acc, F.mul(x, y))
    return acc


def poly_substitute_linear(f: MultiPoly, matrix, offset=None) -> MultiPoly:
    t = matrix if isinstance(matrix, LinearTransform) else LinearTransform.make(f.field, matrix, offset)
    return f.substitute_linear(t)


class UniPoly:
    """Dense univariate polynomial, coefficients constant-first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable):
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def monic(cls, field: Field, tail: Sequence) -> "UniPoly":
        """T^n + a_1 T^{n-1} + ... + a_n from ``tail = (a_1, ..., a_n)``."""
        return cls(field, list(reversed([field.coerce(a) for a in tail])) + [field.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def eval_raw(self, t):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, t), c)
        return acc

    def eval(self, t) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(self.field.coerce(t)))

    def roots_raw(self) -> list:
        F = self.field
        if not self.coeffs:
            raise ValueError("the zero polynomial vanishes everywhere")
        if isinstance(F, Rationals):
            return _rational_roots(self.coeffs)
        if not F.is_finite:
            raise InfiniteField(f"cannot search roots over {F}")
        if F.size > config.max_points():
            raise SearchSpaceTooLarge(f"root search over {F.size} elements exceeds cap")
        return [t for t in F.elements() if F.is_zero(self.eval_raw(t))]

    def roots(self) -> list[FieldElement]:
        return [FieldElement(self.field, r) for r in self.roots_raw()]

    def to_multi(self, nvars: int = 1, j: int = 0) -> MultiPoly:
        terms = {}
        for i, c in enumerate(self.coeffs):
            e = [0] * nvars
            e[j] = i
            terms[tuple(e)] = c
        return MultiPoly(self.field, nvars, terms)

    def format(self, var: str = "T") -> str:
        return format_poly(self.to_multi(), [var])

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self.field}, {self.format()!r})"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    roots = set()
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    ints = ints[shift:]
    if len(ints) > 1:
        for r in _divisors(ints[0]):
            for s in _divisors(ints[-1]):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    acc = Fraction(0)
                    for c in reversed(ints):
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)


def uni_roots(l: UniPoly) -> list[FieldElement]:
    return l.roots()


def uni_eval(l: UniPoly, t) -> FieldElement:
    return l.eval(t)
