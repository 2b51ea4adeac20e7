from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aperylef import (
    DependentBasis,
    NotGorenstein,
    SparsePoly,
    ann_contains,
    apply_operator,
    catalecticant_rank,
    create_semigroup,
    dual_algebra_view,
    dual_socle_generator,
    generic_rank,
    hessian,
    hilbert_function,
    build_algebra,
    match_annihilator_scale,
    mixed_hessian,
    parse_polynomial,
    polynomial_determinant,
)

YZW = ("y", "z", "w")
F_16 = parse_polynomial("y^4*w + y^2*z^3", YZW)
CUBIC_5VAR = parse_polynomial("a^2*x + a*b*y + b^2*z")
QUARTIC_5VAR = parse_polynomial("a^2*x*z + a*b*y*z + 1/2*b^2*z^2")


def mono(vars_, exps):
    return SparsePoly.monomial(vars_, exps)


# -- dual socle generator -----------------------------------------------------

def test_dual_generator_16_18_21_27():
    table = create_semigroup([16, 18, 21, 27]).apery_table()
    assert str(dual_socle_generator(table)) == "y^4*w + y^2*z^3"


def test_dual_generator_8_10_11_12():
    # both maximal representations of 33 survive: 10+11+12 and 3*11
    table = create_semigroup([8, 10, 11, 12]).apery_table()
    F = dual_socle_generator(table)
    assert str(F) == "y*z*w + z^3"
    reps = {r.exponents[1:] for r in table.max_reps[-1]}
    assert F.terms.keys() == reps
    assert all(c == 1 for c in F.terms.values())


def test_dual_generator_15_21_35():
    table = create_semigroup([15, 21, 35]).apery_table()
    assert str(dual_socle_generator(table)) == "y^4*z^2"


def test_dual_generator_requires_order_symmetry():
    with pytest.raises(NotGorenstein):
        dual_socle_generator(create_semigroup([4, 5, 6, 7]).apery_table())


def test_dual_generator_coefficients_are_one(corpus):
    for S in corpus:
        table = S.apery_table()
        if not table.m_pure_verdict():
            continue
        F = dual_socle_generator(table)
        assert all(c == 1 for c in F.terms.values())


# -- operator application ------------------------------------------------------

def test_apply_single_differentiation():
    x = ("x",)
    assert apply_operator(mono(x, (1,)), mono(x, (2,))) == parse_polynomial("2*x", x)


def test_apply_fourth_derivative():
    op = mono(YZW, (4, 0, 0))
    assert apply_operator(op, F_16) == parse_polynomial("24*w", YZW)


def test_apply_identity_operator():
    one = SparsePoly.constant(YZW, 1)
    assert apply_operator(one, F_16) == F_16


def test_ann_contains():
    assert ann_contains(F_16, mono(YZW, (0, 1, 1)))  # z*w
    assert not ann_contains(F_16, SparsePoly.constant(YZW, 1))
    # literal binomial has derivative constants in the way
    binom = parse_polynomial("z^3 - y^2*w", YZW)
    assert not ann_contains(F_16, binom)
    scaled = match_annihilator_scale(F_16, binom)
    assert scaled is not None
    assert ann_contains(F_16, scaled)
    assert scaled == parse_polynomial("2*z^3 - y^2*w", YZW)


def test_match_annihilator_scale_rejects_non_relations():
    assert match_annihilator_scale(F_16, parse_polynomial("z^2 - y*w", YZW)) is None


@st.composite
def operators(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        exps = tuple(draw(st.integers(0, 2)) for _ in range(3))
        terms[exps] = terms.get(exps, Fraction(0)) + Fraction(draw(st.integers(-4, 4)))
    return SparsePoly(YZW, terms)


@given(operators(), operators())
@settings(max_examples=50, deadline=None)
def test_operator_application_is_multiplicative_and_linear(p, q):
    # operators compose multiplicatively: (pq)(X)F = p(X)(q(X)F)
    assert apply_operator(p * q, F_16) == apply_operator(p, apply_operator(q, F_16))
    assert apply_operator(p + q, F_16) == apply_operator(p, F_16) + apply_operator(q, F_16)


@given(st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=30, deadline=None)
def test_operator_partials_commute(i, j):
    ei = tuple(1 if k == i else 0 for k in range(3))
    ej = tuple(1 if k == j else 0 for k in range(3))
    lhs = apply_operator(mono(YZW, ei), apply_operator(mono(YZW, ej), F_16))
    rhs = apply_operator(mono(YZW, ej), apply_operator(mono(YZW, ei), F_16))
    assert lhs == rhs


# -- catalecticants ---------------------------------------------------------------

def test_catalecticant_rank_five_variables():
    assert catalecticant_rank(CUBIC_5VAR, 1) == 5
    assert catalecticant_rank(QUARTIC_5VAR, 2) == 10
    assert catalecticant_rank(CUBIC_5VAR, 0) == 1


def test_catalecticant_symmetry():
    for F in (F_16, CUBIC_5VAR, QUARTIC_5VAR):
        D = F.degree()
        for d in range(D + 1):
            assert catalecticant_rank(F, d) == catalecticant_rank(F, D - d)


def test_view_hilbert_vectors():
    assert dual_algebra_view(CUBIC_5VAR).hilbert == (1, 5, 5, 1)
    assert dual_algebra_view(QUARTIC_5VAR).hilbert == (1, 5, 10, 5, 1)
    assert dual_algebra_view(parse_polynomial("x^3")).hilbert == (1, 1, 1, 1)


def test_view_matches_apery_hilbert(corpus):
    checked = 0
    for S in corpus:
        table = S.apery_table()
        if not table.m_pure_verdict() or S.multiplicity < 3:
            continue
        F = dual_socle_generator(table)
        if F.degree() < 1:
            continue
        A = build_algebra(table)
        assert dual_algebra_view(F).hilbert == hilbert_function(A), S.generators
        checked += 1
        if checked >= 20:
            break
    assert checked >= 10


def test_view_rejects_bad_input():
    with pytest.raises(ValueError):
        dual_algebra_view(parse_polynomial("x^2 + y^3"))
    with pytest.raises(ValueError):
        dual_algebra_view(SparsePoly.zero(("x",)))


# -- hessians ----------------------------------------------------------------------

HESS1_DISPLAY_SUPPORT = [
    [{(2, 0, 1), (0, 3, 0)}, {(1, 2, 0)}, {(3, 0, 0)}],
    [{(1, 2, 0)}, {(2, 1, 0)}, set()],
    [{(3, 0, 0)}, set(), set()],
]

HESS2_DISPLAY_SUPPORT = [
    [{(0, 0, 1)}, set(), {(0, 1, 0)}, {(1, 0, 0)}],
    [set(), {(0, 1, 0)}, {(1, 0, 0)}, set()],
    [{(0, 1, 0)}, {(1, 0, 0)}, set(), set()],
    [{(1, 0, 0)}, set(), set(), set()],
]

BASIS1 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
BASIS2 = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]


def assert_support_pattern(matrix, pattern):
    for row, expected_row in zip(matrix.entries, pattern):
        for entry, expected in zip(row, expected_row):
            assert set(entry.terms) == expected
            assert all(c > 0 for c in entry.terms.values())


def test_hessian1_support_matches_display():
    H = hessian(F_16, 1, BASIS1)
    assert H.is_symmetric()
    assert_support_pattern(H, HESS1_DISPLAY_SUPPORT)
    # exact scalars
    assert H.entries[0][0] == parse_polynomial("12*y^2*w + 2*z^3", YZW)
    assert H.entries[0][1] == parse_polynomial("6*y*z^2", YZW)
    assert H.entries[0][2] == parse_polynomial("4*y^3", YZW)
    assert H.entries[1][1] == parse_polynomial("6*y^2*z", YZW)


def test_hessian2_support_matches_display():
    H = hessian(F_16, 2, BASIS2)
    assert H.is_symmetric()
    assert_support_pattern(H, HESS2_DISPLAY_SUPPORT)


def test_hessian_determinants():
    H1 = hessian(F_16, 1, BASIS1)
    assert polynomial_determinant(H1) == parse_polynomial("-96*y^8*z", YZW)
    H2 = hessian(F_16, 2, BASIS2)
    det2 = polynomial_determinant(H2)
    # a positive multiple of y^4 (oracle: anti-diagonal cofactor expansion)
    assert set(det2.terms) == {(4, 0, 0)}
    assert det2.terms[(4, 0, 0)] == Fraction(82944)


def test_hessian_of_cubic_counterexample_is_singular():
    view = dual_algebra_view(CUBIC_5VAR)
    H = hessian(CUBIC_5VAR, 1, view.bases[1])
    assert polynomial_determinant(H) == SparsePoly.zero(CUBIC_5VAR.vars)
    assert generic_rank(H) < H.nrows


def test_trivial_hessian():
    H = hessian(parse_polynomial("x^2"), 1, [(1,)])
    assert H.entries[0][0].constant_value() == 2


def test_hessian_rejects_dependent_basis():
    with pytest.raises(DependentBasis):
        hessian(F_16, 2, [(0, 0, 2), (0, 1, 1)])  # w^2 and z*w both annihilate F
    with pytest.raises(DependentBasis):
        hessian(F_16, 1, [(1, 0, 0), (1, 0, 0)])


def test_mixed_hessian_coincides_with_hessian_on_diagonal():
    square = hessian(F_16, 2, BASIS2)
    mixed = mixed_hessian(F_16, 2, 2, BASIS2, BASIS2)
    assert mixed.entries == square.entries


def test_mixed_hessian_even_case_shape():
    M = mixed_hessian(F_16, 2, 3)
    assert (M.nrows, M.ncols) == (4, 4)
    assert generic_rank(M) == 4


def test_mixed_hessian_full_differentiation():
    D = F_16.degree()
    M = mixed_hessian(F_16, 0, D)
    assert (M.nrows, M.ncols) == (1, 1)
    assert M.entries[0][0].is_constant()
    assert M.entries[0][0].constant_value() != 0


def test_hessian_symmetry_and_rank_on_corpus(corpus):
    checked = 0
    for S in corpus:
        table = S.apery_table()
        if not table.m_pure_verdict():
            continue
        F = dual_socle_generator(table)
        if F.degree() < 2:
            continue
        view = dual_algebra_view(F)
        H = hessian(F, 1, view.bases[1])
        assert H.is_symmetric()
        if H.nrows <= 8:
            det = polynomial_determinant(H)
            assert (not det) == (generic_rank(H) < H.nrows)
        checked += 1
        if checked >= 12:
            break
    assert checked >= 6


def test_hessian_det_zero_iff_rank_deficient():
    for F, d, basis in (
        (F_16, 1, BASIS1),
        (F_16, 2, BASIS2),
        (CUBIC_5VAR, 1, dual_algebra_view(CUBIC_5VAR).bases[1]),
        (parse_polynomial("x*y"), 1, [(1, 0), (0, 1)]),
    ):
        H = hessian(F, d, basis)
        det = polynomial_determinant(H)
        assert (not det) == (generic_rank(H) < H.nrows)
