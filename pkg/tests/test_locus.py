import itertools
import random
from fractions import Fraction

import pytest

from corpus import corpus
from ideal_collapse import (
    QQ,
    Emptiness,
    IdealSystem,
    MultiPoly,
    Verdict,
    collapse_chain,
    enumerate_zero_locus,
    find_rootfree,
    is_empty,
    make_field,
    parse_poly,
    verify_equivalence,
)
from ideal_collapse.errors import ArityMismatch, FieldMismatch, InfiniteField, SearchSpaceTooLarge
from ideal_collapse.locus import iter_points, sample_points


def P(text, field, names=("x", "y")):
    return parse_poly(text, field, names)


def S(field, *gens, names=("x", "y")):
    return IdealSystem(field, names, tuple(P(g, field, names) for g in gens))


def test_sum_of_squares_f3():
    F3 = make_field("F3")
    r = enumerate_zero_locus([P("x^2 + y^2", F3)], F3, 2)
    assert r.points == [(0, 0)] and r.status is Emptiness.NONEMPTY
    assert r.searched == 9 and r.mode == "Exhaustive"


def test_sum_of_squares_f5():
    F5 = make_field("F5")
    expected = [(a, b) for a in range(5) for b in range(5) if (a * a + b * b) % 5 == 0]
    r = enumerate_zero_locus([P("x^2 + y^2", F5)], F5, 2)
    assert len(expected) == 9
    assert r.points == expected


def test_unit_ideal_empty():
    for spec in ["F2", "F3", "F2^2"]:
        F = make_field(spec)
        r = enumerate_zero_locus([MultiPoly.constant(F, 2, 1)], F, 2)
        assert r.points == [] and r.status is Emptiness.EMPTY


def test_enumerate_errors(monkeypatch):
    with pytest.raises(InfiniteField):
        enumerate_zero_locus([P("x", QQ)], QQ, 2)
    F7 = make_field("F7")
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_zero_locus([P("x", F7)], F7, 2, max_points=48)
    monkeypatch.setenv("IDEAL_COLLAPSE_MAX_POINTS", "10")
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_zero_locus([P("x", F7)], F7, 2)
    with pytest.raises(ArityMismatch):
        enumerate_zero_locus([P("x", F7)], F7, 3)
    with pytest.raises(FieldMismatch):
        enumerate_zero_locus([P("x", F7)], make_field("F5"), 2)


def test_verify_equivalence_examples():
    F3 = make_field("F3")
    sys1 = S(F3, "x + y", "x - y")
    assert verify_equivalence(sys1, P("2*x^2 + 2*y^2", F3)).verdict is Verdict.EQUIVALENT
    res = verify_equivalence(S(F3, "x"), P("y", F3))
    assert res.verdict is Verdict.COUNTEREXAMPLE and res.point == (0, 1)
    q = S(QQ, "x^2 + 1", names=("x",))
    res = verify_equivalence(q, P("x^2 + 1", QQ, ("x",)))
    assert res.verdict is Verdict.UNKNOWN_SAMPLED and res.point is None
    assert res.points_checked == 1 + 1 + 1000


def test_verify_equivalence_q_counterexample():
    res = verify_equivalence(S(QQ, "x", "y"), P("x", QQ))
    assert res.verdict is Verdict.COUNTEREXAMPLE
    assert res.point == (Fraction(0), Fraction(1))


def test_is_empty_examples():
    F3 = make_field("F3")
    assert is_empty(S(F3, "x^2 + y^2 + 1")) is Emptiness.NONEMPTY
    assert P("x^2 + y^2 + 1", F3).eval((1, 1)).value == 0
    for spec in ["F2", "F5", "F2^2"]:
        F = make_field(spec)
        assert is_empty(S(F, "x", "x + 1")) is Emptiness.EMPTY
    assert is_empty(S(QQ, "x - y")) is Emptiness.NONEMPTY
    assert is_empty(S(QQ, "x^2 + 1", names=("x",))) is Emptiness.UNKNOWN_SAMPLED


def test_sampling_deterministic():
    assert sample_points(3, seed=5) == sample_points(3, seed=5)
    assert sample_points(3, seed=5) != sample_points(3, seed=6)
    pts = sample_points(2)
    assert pts[:3] == [(0, 0), (1, 0), (0, 1)]
    assert all(abs(c.numerator) <= 100 and c.denominator <= 100 for pt in pts for c in pt)


@pytest.mark.parametrize("spec", ["F2", "F3", "F5", "F2^2"])
def test_oracle_sound_and_complete(spec):
    F = make_field(spec)
    for system in corpus(F, 60, 31):
        gens = system.generators
        r = enumerate_zero_locus(list(gens), F, system.nvars)
        listed = set(r.points)
        for a in iter_points(F, system.nvars):
            common = all(g.vanishes_at(a) for g in gens)
            assert common == (a in listed)
        assert (r.status is Emptiness.EMPTY) == (not r.points)


@pytest.mark.parametrize("spec", ["F2", "F3", "F2^2", "F7"])
def test_chain_equivalent_on_corpus(spec):
    F = make_field(spec)
    w = find_rootfree(F)
    for system in corpus(F, 60, 2024):
        chain = collapse_chain(w, system)
        assert verify_equivalence(system, chain.collapsed).verdict is Verdict.EQUIVALENT
