"""Exact coefficient fields: prime fields F_p, extensions F_{p^k}, and Q.

Field objects are immutable descriptors that also carry the arithmetic.
Elements are stored as plain canonical Python values so that polynomial
code can run tight loops without wrapper overhead:

    PrimeField      int in [0, p)
    ExtensionField  tuple (c_0, ..., c_{k-1}) of ints in [0, p), constant first
    Rationals       fractions.Fraction (always reduced, denominator > 0)

:class:`FieldElement` wraps a value together with its field for callers that
want operator syntax and field-mismatch checking.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    NoModulusFound,
    ReducibleModulus,
    SearchSpaceTooLarge,
)

MAX_CHARACTERISTIC = 2**31
MAX_EXTENSION_ORDER = 4096


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Field:
    """Common interface; concrete fields override the arithmetic."""

    is_finite = False
    size: int | None = None

    # -- arithmetic on raw values -------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        """Turn ``x`` (FieldElement, int, or a raw value) into a raw value."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return self.from_int(x)
        return self._coerce_other(x)

    def _coerce_other(self, x):
        raise FieldMismatch(f"cannot interpret {x!r} as an element of {self}")

    def elements(self) -> Iterator:
        raise InfiniteField(f"{self} is infinite")

    def random(self, rng):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def in_prime_subfield(self, a) -> bool:
        return True

    def __call__(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    is_finite = True

    def __post_init__(self):
        if self.p >= MAX_CHARACTERISTIC:
            raise SearchSpaceTooLarge(f"characteristic {self.p} exceeds 2^31")
        if not is_prime(self.p):
            raise CompositeCharacteristic(f"{self.p} is not prime")

    @property
    def size(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def __str__(self):
        return f"F{self.p}"


# dense F_p[T] helpers on constant-first int lists, used for moduli

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    m = _trim([x % p for x in m])
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        q = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - q * c) % p
        _trim(a)
    return a


def _has_root(c: list[int], p: int) -> bool:
    for t in range(p):
        acc = 0
        for coeff in reversed(c):
            acc = (acc * t + coeff) % p
        if acc == 0:
            return True
    return False


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    """Monic polys of ``degree``; (a_1, ..., a_n) in lexicographic order."""
    for tail in itertools.product(range(p), repeat=degree):
        # tail = (a_1, ..., a_n) for T^n + a_1 T^{n-1} + ... + a_n
        yield list(reversed(tail)) + [1]


def is_irreducible_mod_p(modulus: list[int], p: int) -> bool:
    k = len(modulus) - 1
    if k <= 0:
        return False
    if k <= 3:
        return not _has_root(modulus, p)
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_rem(list(modulus), g, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _monic_polys(p, k):
        if is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise NoModulusFound(f"no irreducible polynomial of degree {k} over F{p}")


@dataclass(frozen=True)
class ExtensionField(Field):
    """F_p[t]/(modulus). ``modulus`` is constant-first and monic of degree k."""

    p: int
    k: int
    modulus: tuple[int, ...] | None = dc_field(default=None)

    is_finite = True

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("extension degree must be at least 2")
        PrimeField(self.p)
        if self.p**self.k > MAX_EXTENSION_ORDER:
            raise SearchSpaceTooLarge(
                f"F{self.p}^{self.k} has more than {MAX_EXTENSION_ORDER} elements"
            )
        if self.modulus is None:
            object.__setattr__(self, "modulus", find_irreducible(self.p, self.k))
            return
        mod = tuple(c % self.p for c in self.modulus)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {self.k}")
        if not is_irreducible_mod_p(list(mod), self.p):
            raise ReducibleModulus(f"{self._fmt_poly(mod, 'T')} is reducible over F{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def characteristic(self) -> int:
        return self.p

    @cached_property
    def zero(self):
        return (0,) * self.k

    @cached_property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def _coerce_other(self, x):
        if isinstance(x, (tuple, list)) and len(x) == self.k and all(
            isinstance(c, int) for c in x
        ):
            return tuple(c % self.p for c in x)
        return super()._coerce_other(x)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul_schoolbook(self, a, b):
        """Multiply and reduce modulo the modulus; no lookup tables."""
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        rem = _poly_rem(prod, list(self.modulus), self.p)
        return tuple(rem + [0] * (self.k - len(rem)))

    @cached_property
    def _tables(self):
        # log/exp tables over a primitive element; the group of units is cyclic
        order = self.size - 1
        for g in itertools.islice(self.elements(), 2, None):
            exp = [self.one]
            x = g
            while x != self.one:
                exp.append(x)
                x = self.mul_schoolbook(x, g)
            if len(exp) == order:
                log = {v: i for i, v in enumerate(exp)}
                return exp, log
        raise AssertionError("multiplicative group is not cyclic")  # unreachable

    def mul(self, a, b):
        if a == self.zero or b == self.zero:
            return self.zero
        exp, log = self._tables
        return exp[(log[a] + log[b]) % len(exp)]

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero(f"inverse of 0 in {self}")
        exp, log = self._tables
        return exp[-log[a] % len(exp)]

    def element_from_index(self, idx: int):
        digits = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            digits.append(r)
        return tuple(digits)

    def index(self, a) -> int:
        return sum(c * self.p**i for i, c in enumerate(a))

    def elements(self):
        # index order: prime subfield first, then lexicographic in (c_{k-1}, ..., c_0)
        return (self.element_from_index(i) for i in range(self.size))

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def in_prime_subfield(self, a) -> bool:
        return not any(a[1:])

    @staticmethod
    def _fmt_poly(coeffs, var) -> str:
        parts = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def format(self, a) -> str:
        """Render as a polynomial in the generator ``t``."""
        return self._fmt_poly(a, "t")

    def __str__(self):
        return f"F{self.p}^{self.k}"


@dataclass(frozen=True)
class Rationals(Field):
    def from_int(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def _coerce_other(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, str):
            return Fraction(x)
        return super()._coerce_other(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return a / b

    def random(self, rng, height: int = 100):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def __str__(self):
        return "Q"


QQ = Rationals()


@dataclass(frozen=True)
class FieldElement:
    """A value bundled with its field; supports the usual operators."""

    field: Field
    value: object

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def _wrap(self, v):
        return FieldElement(self.field, v)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.field.div(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self):
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.format(self.value)


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Functional form of element arithmetic; ``op`` in add/sub/mul/div/neg/inv."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if isinstance(b, FieldElement) and b.field != a.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    return ops[op](b)


def field_enumerate(k: Field) -> list[FieldElement]:
    return [FieldElement(k, v) for v in k.elements()]


_FIELD_RE = re.compile(r"^\s*(?:(Q)|F(\d+)(?:\^(\d+))?)\s*$")


def make_field(spec) -> Field:
    """Build a field from ``"Q"``, ``"F5"``, ``"F2^2"``, or pass a Field through."""
    if isinstance(spec, Field):
        return spec
    m = _FIELD_RE.match(spec)
    if not m:
        raise ValueError(f"bad field specification {spec!r}; use Q, F<p> or F<p>^<k>")
    if m.group(1):
        return QQ
    p = int(m.group(2))
    k = int(m.group(3) or 1)
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k)
