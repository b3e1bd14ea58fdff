"""Exit criteria. Each test records one PASS/FAIL line, shown in the
"acceptance criteria" section of the pytest summary."""

import random
import time
from fractions import Fraction

import pytest

from corpus import VAR_NAMES, corpus, random_nonconstant, random_poly
from ideal_collapse import (
    QQ,
    Certificate,
    IdealSystem,
    UniPoly,
    WitnessPoly,
    certify_rootfree,
    collapse_chain,
    combine_pair,
    enumerate_zero_locus,
    find_rootfree,
    make_field,
    monicize,
    parse_poly,
    parse_system,
    print_canonical,
    specialize_and_solve,
    verify_certificate,
)
from ideal_collapse.collapse import degree_bound
from ideal_collapse.errors import NoMonicizerFound, PolySyntaxError
from ideal_collapse.fields import is_prime
from ideal_collapse.locus import iter_points, sample_points
from test_parsing import SYNTAX_FIXTURES

MASTER_FIELDS = ["F2", "F3", "F5", "F2^2"]
MASTER_SEED = 20240101


@pytest.fixture(scope="module")
def master_run():
    """Collapse the 4 x 200 corpus once; criteria 1, 2 and 5 inspect the result."""
    start = time.perf_counter()
    runs = []
    for spec in MASTER_FIELDS:
        F = make_field(spec)
        w = find_rootfree(F)
        for system in corpus(F, 200, MASTER_SEED, max_vars=3, max_gens=4, max_degree=2):
            runs.append((F, system, collapse_chain(w, system)))
    return runs, time.perf_counter() - start


def test_c1_master_theorem(master_run, criterion):
    runs, build_time = master_run
    start = time.perf_counter()
    mismatches, points = 0, 0
    for F, system, chain in runs:
        for a in iter_points(F, system.nvars):
            points += 1
            lhs = chain.collapsed.vanishes_at(a)
            rhs = all(g.vanishes_at(a) for g in system.generators)
            mismatches += lhs != rhs
    elapsed = build_time + time.perf_counter() - start
    ok = mismatches == 0 and len(runs) == 800 and elapsed < 60
    assert criterion(
        "C1 master theorem", ok,
        f"{len(runs)} systems, {points} points, {mismatches} mismatches, {elapsed:.1f}s (< 60s)",
    )


def test_c2_certificates(master_run, criterion):
    runs, _ = master_run
    steps = [s for _, _, chain in runs for s in chain.steps]
    failures = sum(not verify_certificate(s, s.f1, s.f2) for s in steps)
    assert steps
    assert criterion("C2 certificates", failures == 0, f"{len(steps)} certificates, {failures} failures")


def test_c3_witnesses(criterion):
    specs = [f"F{p}" for p in range(2, 50) if is_prime(p)]
    specs += [f"F{p}^{k}" for p in (2, 3, 5, 7) for k in range(2, 6) if p**k <= 49]
    bad = []
    for spec in specs:
        F = make_field(spec)
        w = find_rootfree(F)
        roots = [t for t in F.elements() if F.is_zero(w.poly.eval_raw(t))]
        if w.degree != 2 or not w.poly.is_monic() or roots or find_rootfree(F) != w:
            bad.append(spec)
    wq = find_rootfree(QQ)
    q_ok = str(wq) == "T^2 + 1" and certify_rootfree(wq, QQ) and find_rootfree(QQ) == wq
    ok = not bad and q_ok
    assert criterion("C3 witnesses", ok, f"{len(specs)} finite fields (p^k <= 49) + Q; bad: {bad or 'none'}")


def test_c4_worked_examples(criterion):
    x, y = parse_poly("x", QQ, ["x", "y"]), parse_poly("y", QQ, ["x", "y"])
    pin1 = combine_pair(find_rootfree(QQ), x, y).result == parse_poly("x^2 + y^2", QQ, ["x", "y"])

    F3 = make_field("F3")
    sys3 = parse_system("field F3\nvars x y\nf1 = x + y\nf2 = x - y\n")
    chain = collapse_chain(WitnessPoly.from_user(UniPoly.monic(F3, [0, 1])), sys3)
    pin2 = chain.collapsed == parse_poly("2*x^2 + 2*y^2", F3, ["x", "y"])
    pin2 = pin2 and enumerate_zero_locus([chain.collapsed], F3, 2).points == [(0, 0)]

    F5 = make_field("F5")
    t2p1 = WitnessPoly(UniPoly.monic(F5, [0, 1]), Certificate.USER_ASSERTION)
    pin3 = (
        [r.value for r in t2p1.poly.roots()] == [2, 3]
        and not certify_rootfree(t2p1, F5)
        and str(find_rootfree(F5)) == "T^2 + 2"
    )
    ok = pin1 and pin2 and pin3
    assert criterion("C4 worked examples", ok, f"combine={pin1} chain F3={pin2} witness F5={pin3}")


def test_c5_degree_bound(master_run, criterion):
    runs, _ = master_run
    steps = [s for _, _, chain in runs for s in chain.steps]
    violations = sum(
        s.result.degree() > degree_bound(s.witness.degree, s.f1, s.f2) for s in steps
    )
    assert criterion("C5 degree bound", violations == 0, f"{len(steps)} combines, {violations} violations")


def test_c6_remark(criterion):
    start = time.perf_counter()
    checked, bad_points, bad_bijections = 0, 0, 0
    for spec in ["F3", "F5"]:
        F = make_field(spec)
        rng = random.Random(f"remark-{spec}")
        done = 0
        while done < 100:
            n = rng.randint(1, 3)
            f = random_nonconstant(rng, F, n, max_degree=3)
            try:
                m = monicize(f)
            except NoMonicizerFound:
                continue
            done += 1
            bad_points += sum(not f.vanishes_at(pt) for pt in specialize_and_solve(m))
            inv = m.transform.inverse()
            zf = [a for a in iter_points(F, n) if f.vanishes_at(a)]
            zt = {a for a in iter_points(F, n) if m.transformed.vanishes_at(a)}
            image = [inv.apply_raw(a) for a in zf]
            bad_bijections += len(set(image)) != len(zf) or set(image) != zt
        checked += done
    elapsed = time.perf_counter() - start
    ok = bad_points == 0 and bad_bijections == 0 and elapsed < 30
    assert criterion(
        "C6 remark", ok,
        f"{checked} polynomials, {bad_points} bad points, {bad_bijections} bad bijections, {elapsed:.1f}s (< 30s)",
    )


def test_c7_rational_sampling(criterion):
    rng = random.Random(777)

    def small(r):
        return Fraction(r.randint(-10, 10), r.randint(1, 10))

    systems = [_random_q_system(rng, small) for _ in range(50)]
    w = find_rootfree(QQ)
    counterexamples, points = 0, 0
    for system in systems:
        collapsed = collapse_chain(w, system).collapsed
        for a in sample_points(system.nvars, seed=0xC0FFEE, count=1000):
            points += 1
            lhs = collapsed.vanishes_at(a)
            rhs = all(g.vanishes_at(a) for g in system.generators)
            counterexamples += lhs != rhs
    assert criterion(
        "C7 Q sampling", counterexamples == 0,
        f"50 systems, {points} points, {counterexamples} counterexamples",
    )


def _random_q_system(rng, coeff):
    nvars = rng.randint(1, 3)
    gens = [random_poly(rng, QQ, nvars, 2, coeff=coeff) for _ in range(rng.randint(1, 3))]
    return IdealSystem(QQ, VAR_NAMES[:nvars], gens)


def test_c8_parser(criterion):
    families = {
        "prime": ["F2", "F3", "F5", "F7", "F101"],
        "extension": ["F2^2", "F2^3", "F3^2", "F5^2"],
        "rational": ["Q"],
    }
    names = ["x", "y", "z"]
    failures = 0
    for family, specs in families.items():
        rng = random.Random(f"c8-{family}")
        for _ in range(500):
            F = make_field(rng.choice(specs))
            n = rng.randint(1, 3)
            f = random_poly(rng, F, n, max_degree=4, max_terms=6)
            failures += parse_poly(print_canonical(f, names[:n]), F, names[:n]) != f
    unpositioned = 0
    fixtures = [(t, ln, col) for t, ln, col in SYNTAX_FIXTURES if ln is not None]
    for text, line, col in fixtures:
        try:
            parse_system(text)
            unpositioned += 1
        except PolySyntaxError as err:
            unpositioned += (err.line, err.column) != (line, col)
    ok = failures == 0 and unpositioned == 0
    assert criterion(
        "C8 parser", ok,
        f"1500 round trips, {failures} failures; {len(fixtures)} syntax fixtures, {unpositioned} mispositioned",
    )
