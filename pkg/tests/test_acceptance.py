"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py -v` to see the per-criterion
lines.  Two known discrepancies are asserted faithfully and documented next to
the failing assertions: the transcribed reference lists for families 19 and 28
each omit one monomial that no admissible coordinate change can remove, and
the d >= 3*a5 sublist of the index-1 catalog has four members, not three.
"""

import random
import time
from fractions import Fraction

import pytest

from wfano.catalog import (
    EXCEPTIONAL_EIGHT,
    SearchBounds,
    classify,
    projection_exceptional,
)
from wfano.irrational import decide
from wfano.singular import QuotientSingularity, reid_tai_terminal
from wfano.symalg import (
    GradedPolynomial,
    Substitution,
    builtin_plan,
    cubic_normal_form,
    normalized_member,
    reference_support,
    sample_family_member,
    substitute,
)
from wfano.symmetry import (
    certify_trivial_automorphisms,
    has_diagonal_involution,
    involution_template_support,
    pgl2_set_stabilizer,
    p1_point,
    signs_from_witness,
)
from wfano.wspace import format_monomial, parse_monomial, weight_system

SYMMETRY_FAMILIES = (19, 28, 39, 49, 59, 66, 84)


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="session")
def default_catalog():
    t0 = time.time()
    records = classify(SearchBounds())
    elapsed = time.time() - t0
    return records, elapsed


def test_criterion_1_classification_counts(default_catalog):
    records, elapsed = default_catalog
    total = len(records)
    index_one = sum(1 for r in records if r.ws.index == 1)
    enlarged = classify(SearchBounds(max_weight=50, max_degree=150, index_range=(1, 15)))
    stable = len(enlarged) == total and sum(1 for r in enlarged if r.ws.index == 1) == index_one
    ok = index_one == 95 and total == 130 and elapsed < 300 and stable
    report(
        "1 (classification counts)",
        ok,
        f"I=1: {index_one}/95, total: {total}/130, search {elapsed:.1f}s, "
        f"enlarged bounds stable: {stable}",
    )
    assert index_one == 95
    assert total == 130
    assert elapsed < 300
    assert stable


def test_criterion_2_named_septuples(default_catalog):
    records, _ = default_catalog
    by_sept = {r.septuple: r for r in records}
    named = {
        1: (1, 1, 1, 1, 1, 4, 1),
        9: (1, 1, 2, 3, 3, 9, 1),
        17: (1, 1, 3, 4, 4, 12, 1),
        19: (1, 2, 3, 3, 4, 12, 1),
        27: (1, 2, 3, 5, 5, 15, 1),
        28: (1, 3, 3, 4, 5, 15, 1),
        39: (1, 3, 4, 5, 6, 18, 1),
        49: (1, 3, 5, 6, 7, 21, 1),
        59: (1, 3, 6, 7, 8, 24, 1),
        66: (1, 5, 6, 7, 9, 27, 1),
        84: (1, 7, 8, 9, 12, 36, 1),
    }
    missing = [n for n, sept in named.items() if sept not in by_sept]
    mislabeled = [
        n
        for n, sept in named.items()
        if sept in by_sept and by_sept[sept].paper_number != n
    ]
    ok = not missing and not mislabeled
    report("2 (named septuples)", ok, f"missing: {missing}, mislabeled: {mislabeled}")
    assert ok


def test_criterion_3_projection_trichotomy(default_catalog):
    records, _ = default_catalog
    index_one = [r for r in records if r.ws.index == 1]
    special = projection_exceptional(index_one)
    septs = sorted(r.septuple for r in special)
    all_normal_form = all(
        r.ws.degree == 3 * r.ws.weights[4] and r.ws.weights[3] == r.ws.weights[4]
        for r in special
    )
    ok = len(special) == 3 and all_normal_form
    report(
        "3 (projection trichotomy)",
        ok,
        f"found {len(special)} families with d >= 3*a5 outside the eight: {septs}; "
        f"all satisfy d = 3*a5 and a4 = a5: {all_normal_form}",
    )
    assert all_normal_form
    # Known discrepancy: (1,1,1,2,2,6,1) is a genuine catalog family with
    # d = 3*a5 and a4 = a5, so the list has four members, not the asserted
    # three.  The assertion is kept as stated; see the decisions ledger.
    assert len(special) == 3, (
        "expected exactly three normal-form projection families, found "
        f"{septs}: (1,1,1,2,2,6,1) also satisfies d = 3*a5 with a4 = a5"
    )


@pytest.mark.parametrize("family", SYMMETRY_FAMILIES)
def test_criterion_4_golden_monomial_tables(family):
    g, _ = normalized_member(family, seed=0)
    verbatim = reference_support(family, corrected=False)
    got = {format_monomial(m) for m in g.support}
    want = {format_monomial(m) for m in verbatim}
    ok = got == want
    extra = sorted(got - want)
    missing = sorted(want - got)
    report(
        f"4 (golden table, family {family})",
        ok,
        "exact match" if ok else f"support minus table: {extra}, table minus support: {missing}",
    )
    # Known discrepancies: for families 19 and 28 the transcribed lists omit
    # x^2*y*w^2 and x^3*z^4 respectively; parameter counting shows no
    # admissible coordinate change can remove them, so the reduced support of
    # a general member provably contains them.  Asserted as stated; see the
    # decisions ledger.
    assert got == want, f"family {family}: +{extra} -{missing}"


@pytest.mark.parametrize("family", SYMMETRY_FAMILIES)
def test_criterion_5_normalization_postconditions(family):
    plan = builtin_plan(family)
    g, _ = normalized_member(family, seed=0)
    bad_alive = [
        format_monomial(m) for m in plan.eliminated() if g.coefficient(m) != 0
    ]
    square_layer = [format_monomial(m) for m in g.terms if m[4] == 2 and family != 19]
    pivots = {
        19: ("w*y^4",),
        28: ("z*t^3", "y^4*z", "y*t^3", "w^3"),
        39: ("y*t^3", "z^3*w", "w^3"),
        49: ("y*t^3", "y^5*t", "x*z^4", "w^3"),
        59: ("y*t^3", "y^6*z", "w^3"),
        66: ("z*t^3", "y^4*t", "w^3"),
        84: ("y^4*z", "t^4", "w^3"),
    }[family]
    dead_pivots = [p for p in pivots if g.coefficient(parse_monomial(p)) == 0]
    ok = not bad_alive and not square_layer and not dead_pivots
    report(
        f"5 (postconditions, family {family})",
        ok,
        f"surviving eliminations: {bad_alive}, stray square layer: {square_layer}, "
        f"dead pivots: {dead_pivots}",
    )
    assert ok


def test_criterion_6_automorphism_certificates():
    failures = []
    for family in SYMMETRY_FAMILIES:
        cert = certify_trivial_automorphisms(family, seed=0)
        if not cert.trivial:
            failures.append(family)
        if family == 19 and (cert.stabilizer_order != 1 or len(cert.point_set) != 6):
            failures.append((family, "six-point stabilizer"))
        if family == 28 and (cert.stabilizer_order != 1 or len(cert.point_set) != 5):
            failures.append((family, "five-point stabilizer"))
    support, ws = involution_template_support()
    invol, witness = has_diagonal_involution(support, ws)
    signs = signs_from_witness(witness) if witness else None
    if not (invol and signs == (1, 1, 1, -1, -1)):
        failures.append("involution template")
    ok = not failures
    report("6 (automorphism certificates)", ok, f"failures: {failures or 'none'}")
    assert ok


def test_criterion_7_singularity_checks(default_catalog):
    records, _ = default_catalog
    bad = []
    for r in records:
        if r.basket.non_isolated:
            bad.append((r.septuple, "non-isolated"))
        for p in r.basket.points:
            if not reid_tai_terminal(p.singularity):
                bad.append((r.septuple, str(p)))
    normal_form_ok = True
    for family in (9, 17, 27):
        ws = sample_family_member(family, seed=0).ws
        nf = cubic_normal_form(sample_family_member(family, seed=0))
        g = nf.polynomial
        for tval, wval in ((0, 1), (1, 0), (1, 1)):
            val = sum(
                c * tval ** m[3] * wval ** m[4]
                for m, c in g.terms.items()
                if m[0] == m[1] == m[2] == 0
            )
            if val != 0:
                normal_form_ok = False
        rec = next(r for r in records if r.septuple[:6] == ws.septuple[:6])
        a = ws.weights
        expected = QuotientSingularity(
            a[4], tuple(sorted((1 % a[4], a[1] % a[4], a[2] % a[4])))
        )
        edge = [p for p in rec.basket.points if p.location == "edge tw"]
        if not (len(edge) == 1 and edge[0].count == 3 and edge[0].singularity.equivalent_to(expected)):
            normal_form_ok = False
    ok = not bad and normal_form_ok
    report(
        "7 (singularity checks)",
        ok,
        f"non-terminal basket entries: {bad or 'none'}; "
        f"three marked points of type 1/a5(1,a2,a3): {normal_form_ok}",
    )
    assert ok


def test_criterion_8_verdict_table(default_catalog):
    records, _ = default_catalog
    wrong = []
    for r in records:
        v = decide(r)
        if r.ws.index >= 2:
            if v.values != {1, 2}:
                wrong.append((r.septuple, sorted(v.values)))
        elif r.septuple in EXCEPTIONAL_EIGHT:
            if v.values != {3} or not v.general_only:
                wrong.append((r.septuple, sorted(v.values)))
        else:
            if v.values != {2}:
                wrong.append((r.septuple, sorted(v.values)))
    three = [r.septuple for r in records if decide(r).values == {3}]
    counts_ok = (
        len(three) == 8
        and sum(1 for r in records if r.ws.index == 1 and decide(r).values == {2}) == 87
        and sum(1 for r in records if r.ws.index >= 2) == 35
    )
    ok = not wrong and counts_ok
    report(
        "8 (verdict table)",
        ok,
        f"mismatches: {wrong or 'none'}; partition sizes 8/87/35: {counts_ok}",
    )
    assert ok


def test_criterion_9_property_suites():
    from wfano.exactmath import smith_normal_form
    from wfano.wspace import count_monomials, enumerate_monomials

    failures = []

    # substitution invertibility and grade preservation, 1000 cases
    rng = random.Random(101)
    ws = weight_system(1, 2, 3, 3, 4, 12)
    mons = enumerate_monomials(ws, 12)
    for _ in range(1000):
        terms = {m: Fraction(rng.randint(1, 9)) for m in mons if rng.random() < 0.25}
        f = GradedPolynomial(ws, 12, terms)
        var = rng.randrange(5)
        tail_terms = {
            m: Fraction(rng.randint(-4, 4))
            for m in enumerate_monomials(ws, ws.weights[var])
            if m[var] == 0 and rng.random() < 0.5
        }
        s = Substitution(var, GradedPolynomial(ws, ws.weights[var], {k: v for k, v in tail_terms.items() if v}))
        g = substitute(f, s)
        if g.grade != 12 or substitute(g, s.inverse()).terms != f.terms:
            failures.append("substitution")
            break

    # Smith normal form divisor chains, 1000 cases
    rng = random.Random(102)
    for _ in range(1000):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        if not smith_normal_form(a).verify(a):
            failures.append("smith")
            break

    # Reid-Tai generator-change invariance, 1000 cases
    rng = random.Random(103)
    from math import gcd

    done = 0
    while done < 1000:
        r = rng.randint(2, 40)
        wts = tuple(rng.randint(1, r - 1) for _ in range(3))
        if any(gcd(w, r) != 1 for w in wts):
            continue
        c = rng.randint(1, r - 1)
        if gcd(c, r) != 1:
            continue
        q1 = QuotientSingularity(r, wts)
        q2 = QuotientSingularity(r, tuple((c * w) % r for w in wts))
        if reid_tai_terminal(q1) != reid_tai_terminal(q2):
            failures.append("reid-tai")
            break
        done += 1

    # stabilizer group axioms, 1000 random point sets
    rng = random.Random(104)
    done = 0
    while done < 1000:
        n = rng.randint(3, 4)
        vals = set()
        while len(vals) < n:
            vals.add(Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
        maps = pgl2_set_stabilizer([p1_point(v) for v in vals])
        mats = {m.matrix for m in maps}
        for m in maps:
            if m.inverse().matrix not in mats:
                failures.append("stabilizer-inverse")
            for other in maps:
                if m.compose(other).matrix not in mats:
                    failures.append("stabilizer-closure")
        done += 1

    # enumeration vs generating function, 1000 cases
    rng = random.Random(105)
    for _ in range(1000):
        weights = tuple(sorted(rng.randint(1, 9) for _ in range(5)))
        k = rng.randint(0, 25)
        ws_i = weight_system(*weights, max(sum(weights) - 1, 1))
        coeffs = [1] + [0] * k
        for a in weights:
            out = [0] * (k + 1)
            for i, c in enumerate(coeffs):
                if c:
                    j = i
                    while j <= k:
                        out[j] += c
                        j += a
            coeffs = out
        if count_monomials(ws_i, k) != coeffs[k]:
            failures.append("counting")
            break

    ok = not failures
    report("9 (property suites)", ok, f"failing suites: {sorted(set(failures)) or 'none'}")
    assert ok
