import random
from fractions import Fraction

import pytest

from wfano.exactmath import rational_roots, squarefree_and_root_count
from wfano.symalg import (
    GenericityError,
    GradedPolynomial,
    Substitution,
    builtin_plan,
    cubic_normal_form,
    default_genericity_checks,
    family_weight_system,
    format_polynomial,
    normalize,
    normalized_member,
    parse_polynomial,
    quasismooth_member,
    reference_support,
    sample_family_member,
    sample_general_member,
    slice_form,
    stratum_restriction,
    substitute,
)
from wfano.wspace import enumerate_monomials, format_monomial, parse_monomial, weight_system

SYMMETRY_FAMILIES = (19, 28, 39, 49, 59, 66, 84)


def random_polynomial(ws, grade, rng, density=0.5):
    terms = {}
    for m in enumerate_monomials(ws, grade):
        if rng.random() < density:
            c = rng.randint(-9, 9)
            if c:
                terms[m] = Fraction(c)
    return GradedPolynomial(ws, grade, terms)


def random_substitution(ws, rng):
    var = rng.randrange(5)
    tail_terms = {}
    for m in enumerate_monomials(ws, ws.weights[var]):
        if m[var] == 0 and rng.random() < 0.6:
            c = rng.randint(-4, 4)
            if c:
                tail_terms[m] = Fraction(c)
    return Substitution(var, GradedPolynomial(ws, ws.weights[var], tail_terms))


def test_substitution_validation():
    ws = weight_system(1, 2, 3, 3, 4, 12)
    with pytest.raises(ValueError):
        Substitution(4, GradedPolynomial(ws, 3, {parse_monomial("z"): Fraction(1)}))
    with pytest.raises(ValueError):
        # tail must not involve the target variable
        Substitution(3, GradedPolynomial(ws, 3, {parse_monomial("t"): Fraction(1)}))


def test_substitute_identity_and_grade():
    ws = weight_system(1, 2, 3, 3, 4, 12)
    rng = random.Random(2)
    f = random_polynomial(ws, 12, rng)
    ident = Substitution(4, GradedPolynomial(ws, 4, {}))
    assert substitute(f, ident).terms == f.terms


def test_substitute_invertible_randomized():
    # 1000 cases of grade preservation plus exact inversion
    rng = random.Random(6)
    ws = weight_system(1, 2, 3, 3, 4, 12)
    for _ in range(1000):
        f = random_polynomial(ws, 12, rng, density=0.3)
        s = random_substitution(ws, rng)
        g = substitute(f, s)
        assert g.grade == 12
        assert substitute(g, s.inverse()).terms == f.terms


def test_substitute_kills_square_layer():
    # w -> w - g/3 on w^3 + w^2*g clears the w^2 coefficient
    ws = weight_system(1, 1, 2, 3, 3, 9)
    tail = GradedPolynomial(ws, 3, {parse_monomial("t"): Fraction(-2, 3)})
    f = parse_polynomial("w^3 + 2*w^2*t", ws, 9)
    out = substitute(f, Substitution(4, tail))
    assert all(m[4] != 2 for m in out.terms)


def test_specific_elimination_family_39_style():
    # t^3*y + t^3*x^3 over (1,3,4,5,6): y -> y - x^3 removes t^3*x^3
    ws = weight_system(1, 3, 4, 5, 6, 18)
    f = parse_polynomial("t^3*y + t^3*x^3", ws, 18)
    sub = Substitution(1, GradedPolynomial(ws, 3, {parse_monomial("x^3"): Fraction(-1)}))
    out = substitute(f, sub)
    assert out.coefficient(parse_monomial("t^3*x^3")) == 0
    assert out.coefficient(parse_monomial("t^3*y")) == 1


def test_sampler_full_support_and_determinism():
    ws = weight_system(1, 1, 1, 1, 1, 4)
    f = sample_general_member(ws, seed=0)
    assert len(f.terms) == 70
    g = sample_general_member(ws, seed=0)
    assert f.terms == g.terms
    h = sample_general_member(ws, seed=1)
    assert h.terms != f.terms


def test_sampler_split_slices_family_19():
    f = sample_family_member(19, seed=0)
    assert len(f.terms) == 65  # full support
    quartic = slice_form(f, (2, 3))
    assert squarefree_and_root_count(quartic) == (True, 4)
    assert len(rational_roots(quartic)) == 4
    cubic = slice_form(f, (1, 4))  # the (y, w) slice, cubic in (w : y^2)
    assert len(rational_roots(cubic)) == 3


@pytest.mark.parametrize("family", SYMMETRY_FAMILIES)
def test_normalized_support_matches_reference(family):
    g, subs = normalized_member(family, seed=0)
    assert g.support == reference_support(family)
    assert subs  # audit trail present


@pytest.mark.parametrize("family", SYMMETRY_FAMILIES)
def test_plan_eliminations_and_pivots(family):
    plan = builtin_plan(family)
    g, _ = normalized_member(family, seed=0)
    for target in plan.eliminated():
        assert g.coefficient(target) == 0, format_monomial(target)
    # the named pivots stay alive
    pivots = {
        19: ("w*y^4", "z*t^3", "z^3*t"),
        28: ("z*t^3", "y*t^3", "y^4*z", "w^3"),
        39: ("y*t^3", "z^3*w", "w^3"),
        49: ("y*t^3", "y^5*t", "x*z^4", "w^3"),
        59: ("y*t^3", "y^6*z", "w^3"),
        66: ("z*t^3", "y^4*t", "w^3"),
        84: ("y^4*z", "t^4", "w^3"),
    }[family]
    for name in pivots:
        assert g.coefficient(parse_monomial(name)) != 0, name


def test_reference_tables_transcription_deltas():
    # the verbatim transcriptions differ from the reduced supports by exactly
    # one provably uneliminable monomial for families 19 and 28, nothing else
    for family in SYMMETRY_FAMILIES:
        verbatim = reference_support(family, corrected=False)
        corrected = reference_support(family)
        delta = corrected ^ verbatim
        if family == 19:
            assert delta == {parse_monomial("x^2*y*w^2")}
        elif family == 28:
            assert delta == {parse_monomial("x^3*z^4")}
        else:
            assert not delta


def test_normalize_idempotent():
    plan = builtin_plan(39)
    g, _ = normalized_member(39, seed=0)
    g2, subs = normalize(g, plan)
    assert g2.terms == g.terms
    assert all(s.is_identity for s in subs)


def test_normalize_rejects_wrong_weight_system():
    plan = builtin_plan(39)
    f = sample_family_member(49, seed=0)
    with pytest.raises(ValueError):
        normalize(f, plan)


def test_normalize_genericity_error_names_the_monomial():
    # a member without the w^3 pivot makes the depress pass fail
    ws = family_weight_system(39)
    f = sample_family_member(39, seed=0)
    terms = dict(f.terms)
    terms.pop(parse_monomial("w^3"))
    broken = GradedPolynomial(ws, 18, terms)
    with pytest.raises(GenericityError, match="w\\^3"):
        normalize(broken, builtin_plan(39))


def test_stratum_restriction_family_19():
    f = sample_family_member(19, seed=0)
    form = stratum_restriction(f, (2, 3))
    assert form.degree == 4
    assert squarefree_and_root_count(form)[1] == 4  # four distinct points
    single = stratum_restriction(f, (0,))
    assert len(single.terms) == 1  # x^12 survives
    big = stratum_restriction(f, (0, 1, 4))
    assert all(m[2] == 0 and m[3] == 0 for m in big.terms)


def test_stratum_restriction_family_28():
    f = sample_family_member(28, seed=0)
    form = stratum_restriction(f, (1, 2))
    assert form.degree == 5
    assert squarefree_and_root_count(form)[1] == 5  # five distinct points


def test_cubic_normal_form_rejects_non_split():
    # w^3 + t^3 has one rational and two complex roots: no rational transform
    ws = weight_system(1, 1, 2, 3, 3, 9)
    f = parse_polynomial("w^3 + t^3 + x^9", ws, 9)
    with pytest.raises(GenericityError, match="split"):
        cubic_normal_form(f)


def test_cubic_normal_form_rejects_repeated_root():
    ws = weight_system(1, 1, 2, 3, 3, 9)
    f = parse_polynomial("w^3 + x^9", ws, 9)
    with pytest.raises(GenericityError):
        cubic_normal_form(f)


def test_cubic_normal_form_split_cubic():
    # (w - t)(w - 2t)(w - 3t) moves to exactly w*t*(w - t)
    ws = weight_system(1, 1, 2, 3, 3, 9)
    f = parse_polynomial("w^3 - 6*w^2*t + 11*w*t^2 - 6*t^3 + x^9", ws, 9)
    nf = cubic_normal_form(f)
    slots = slice_form(nf.polynomial, (3, 4)).coefficients
    assert tuple(slots) == (Fraction(0), Fraction(-1), Fraction(1), Fraction(0))


@pytest.mark.parametrize("family", (9, 17, 27))
def test_cubic_normal_form_on_projection_families(family):
    from wfano.symalg import apply_pair_map

    f = sample_family_member(family, seed=0)
    nf = cubic_normal_form(f)
    g = nf.polynomial
    # the three marked points lie on the hypersurface
    for tval, wval in ((0, 1), (1, 0), (1, 1)):
        val = sum(
            c * tval ** m[3] * wval ** m[4]
            for m, c in g.terms.items()
            if m[0] == m[1] == m[2] == 0
        )
        assert val == 0
    # exact round trip through the inverse change
    m = nf.pair_matrix
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    minv = ((m[1][1] / det, -m[0][1] / det), (-m[1][0] / det, m[0][0] / det))
    back = apply_pair_map(g.scale(nf.scale), 3, 4, minv)
    assert back.terms == f.terms


def test_polynomial_text_round_trip():
    ws = weight_system(1, 2, 3, 3, 4, 12)
    rng = random.Random(8)
    for _ in range(50):
        f = random_polynomial(ws, 12, rng, density=0.2)
        assert parse_polynomial(format_polynomial(f), ws, 12).terms == f.terms
    f = parse_polynomial("-3/2*x^2*y*w^2 + w^3", ws, 12)
    assert f.coefficient(parse_monomial("x^2*y*w^2")) == Fraction(-3, 2)


def test_quasismooth_member_fermat():
    ws = weight_system(1, 1, 1, 1, 1, 4)
    terms = {}
    for i in range(5):
        m = [0] * 5
        m[i] = 4
        terms[tuple(m)] = Fraction(1)
    verdict = quasismooth_member(GradedPolynomial(ws, 4, terms))
    assert verdict.status == "quasismooth"


def test_quasismooth_member_cone_with_witness():
    ws = weight_system(1, 1, 1, 1, 1, 4)
    terms = {}
    for i in range(4):
        m = [0] * 5
        m[i] = 4
        terms[tuple(m)] = Fraction(1)
    verdict = quasismooth_member(GradedPolynomial(ws, 4, terms))
    assert verdict.status == "singular"
    assert verdict.witness == "[0:0:0:0:1]"


def test_quasismooth_member_sampled_quartic():
    ws = weight_system(1, 1, 1, 1, 1, 4)
    verdict = quasismooth_member(sample_general_member(ws, seed=0))
    assert verdict.status == "quasismooth"


def test_quasismooth_member_is_tristate():
    ws = weight_system(1, 1, 1, 1, 1, 4)
    verdict = quasismooth_member(sample_general_member(ws, seed=0))
    with pytest.raises(TypeError):
        bool(verdict)


@pytest.mark.slow
def test_quasismooth_member_family_19():
    verdict = quasismooth_member(sample_family_member(19, seed=0))
    assert verdict.status == "quasismooth"


def test_default_checks_cover_all_plan_families():
    for family in SYMMETRY_FAMILIES + (1, 9, 17, 27):
        checks = default_genericity_checks(family)
        for c in checks:
            assert c.describe()


def test_restriction_commutes_with_disjoint_substitution():
    # substitutions not touching the stratum variables leave the restriction
    # unchanged whenever their templates vanish on the stratum
    rng = random.Random(71)
    ws = weight_system(1, 2, 3, 3, 4, 12)
    for _ in range(200):
        f = random_polynomial(ws, 12, rng, density=0.3)
        # w -> w + c*x*z has a template meeting the (z,t) stratum; use x^2 on y
        tail = GradedPolynomial(ws, 2, {parse_monomial("x^2"): Fraction(rng.randint(1, 5))})
        s = Substitution(1, tail)
        before = stratum_restriction(f, (2, 3))
        after = stratum_restriction(substitute(f, s), (2, 3))
        assert before.coefficients == after.coefficients
