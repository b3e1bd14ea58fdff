import itertools
import random
from math import gcd
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ideal_collapse import QQ, ExtensionField, FieldElement, PrimeField, field_arith, field_enumerate, make_field
from ideal_collapse.errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    ReducibleModulus,
    SearchSpaceTooLarge,
)
from ideal_collapse.fields import is_irreducible_mod_p

SMALL_FIELDS = ["F2", "F3", "F5", "F7", "F2^2", "F2^3", "F3^2"]


def test_make_field_prime():
    F = make_field("F5")
    assert F == PrimeField(5)
    assert F.size == 5


def test_make_field_composite():
    with pytest.raises(CompositeCharacteristic):
        make_field("F6")
    with pytest.raises(CompositeCharacteristic):
        PrimeField(1)


def test_make_field_f4_modulus():
    # only monic quadratic over F_2 without roots: T^2 + T + 1
    F = make_field("F2^2")
    assert F.modulus == (1, 1, 1)
    assert F.size == 4


def test_auto_modulus_is_first_irreducible():
    for p, k in [(2, 3), (3, 2), (5, 2), (2, 4), (3, 3)]:
        F = ExtensionField(p, k)
        # brute force: the first monic poly in (a_1..a_k) order without a nontrivial factor
        for tail in itertools.product(range(p), repeat=k):
            cand = list(reversed(tail)) + [1]
            if _irreducible_by_products(cand, p):
                break
        assert list(F.modulus) == cand


def _irreducible_by_products(c, p):
    """Reducible iff it equals a product of two monic polys of lower positive degree."""
    k = len(c) - 1
    for d in range(1, k // 2 + 1):
        for a in itertools.product(range(p), repeat=d):
            for b in itertools.product(range(p), repeat=k - d):
                pa, pb = list(a) + [1], list(b) + [1]
                prod = [0] * (k + 1)
                for i, x in enumerate(pa):
                    for j, y in enumerate(pb):
                        prod[i + j] = (prod[i + j] + x * y) % p
                if prod == c:
                    return False
    return True


def test_supplied_modulus_checked():
    assert ExtensionField(3, 2, (1, 0, 1)).modulus == (1, 0, 1)
    with pytest.raises(ReducibleModulus):
        ExtensionField(5, 2, (1, 0, 1))  # T^2 + 1 = (T - 2)(T - 3) over F_5
    with pytest.raises(ReducibleModulus):
        ExtensionField(2, 4, (1, 0, 1, 0, 1))  # (T^2 + T + 1)^2, no roots but reducible
    assert is_irreducible_mod_p([1, 1, 0, 0, 1], 2)


def test_caps():
    with pytest.raises(SearchSpaceTooLarge):
        ExtensionField(2, 13)
    with pytest.raises(SearchSpaceTooLarge):
        PrimeField(2**31 + 11)


def test_prime_arith_examples():
    F = make_field("F5")
    assert field_arith(F(3), F(4), "mul") == F(2)
    assert field_arith(F(2), None, "inv") == F(3)
    assert F(2) / F(3) == F(4)


def test_rational_arith():
    assert field_arith(QQ(Fraction(1, 2)), QQ(Fraction(1, 3)), "add") == QQ(Fraction(5, 6))


def test_division_by_zero():
    for spec in ["F5", "F2^2", "Q"]:
        F = make_field(spec)
        with pytest.raises(DivisionByZero):
            F(0).inv()
        with pytest.raises(ZeroDivisionError):
            F(1) / F(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field("F5")(1) + make_field("F3")(1)
    with pytest.raises(FieldMismatch):
        field_arith(make_field("F5")(1), make_field("F7")(1), "mul")


def test_enumerate():
    assert [e.value for e in field_enumerate(make_field("F3"))] == [0, 1, 2]
    elems = field_enumerate(make_field("F2^2"))
    assert len(elems) == 4 and len(set(elems)) == 4
    with pytest.raises(InfiniteField):
        field_enumerate(QQ)


def test_extension_enumeration_order():
    F = make_field("F3^2")
    vals = list(F.elements())
    assert vals[:3] == [(0, 0), (1, 0), (2, 0)]
    assert vals[3] == (0, 1)


@pytest.mark.parametrize("spec", ["F2^2", "F2^3", "F3^2", "F2^6"])
def test_table_mul_matches_schoolbook(spec):
    F = make_field(spec)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == F.mul_schoolbook(a, b)


@pytest.mark.parametrize("spec", [s for s in SMALL_FIELDS if make_field(s).size <= 9])
def test_field_axioms_exhaustive(spec):
    F = make_field(spec)
    E = list(F.elements())
    zero, one = F.zero, F.one
    for a in E:
        assert F.add(a, zero) == a and F.mul(a, one) == a
        assert F.add(a, F.neg(a)) == zero
        if a != zero:
            assert F.mul(a, F.inv(a)) == one
            assert F.inv(F.inv(a)) == a
        for b in E:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in E:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("spec", ["Q", "F7", "F3^2", "F2^3", "F5^3", "F65521"])
def test_field_axioms_random(spec):
    F = make_field(spec)
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = F.random(rng), F.random(rng), F.random(rng)
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one
            assert F.inv(F.inv(a)) == a


@given(st.fractions(max_denominator=10**6), st.fractions(max_denominator=10**6))
def test_fraction_canonical(a, b):
    for v in (QQ.add(a, b), QQ.mul(a, b), QQ.sub(a, b)):
        assert v.denominator > 0
        assert gcd(abs(v.numerator), v.denominator) == 1


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2)])
def test_prime_embedding_is_homomorphism(p, k):
    Fp, Fq = PrimeField(p), ExtensionField(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(100):
        a, b = rng.randrange(p), rng.randrange(p)
        assert Fq.from_int(Fp.add(a, b)) == Fq.add(Fq.from_int(a), Fq.from_int(b))
        assert Fq.from_int(Fp.mul(a, b)) == Fq.mul(Fq.from_int(a), Fq.from_int(b))


def test_element_wrapper_operators():
    F = make_field("F7")
    x = F(3)
    assert isinstance(x, FieldElement)
    assert (x + 5).value == 1 and (2 - x).value == 6 and (x ** 3).value == 6
    assert str(make_field("F2^2")((0, 1))) == "t"
