from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aperylef import Matrix, SparsePoly, generic_rank, polynomial_determinant, rank_info
from aperylef.errors import NotSquare, SizeLimit
from aperylef.linalg import exact_div, fraction_nullspace, fraction_rank


def sym(name, variables=("a2", "a3")):
    return SparsePoly.variable(variables, name)


def matrix(entries):
    return Matrix(list(range(len(entries))), list(range(len(entries[0]))), entries)


def test_generic_rank_symbolic_examples():
    a2, a3 = sym("a2"), sym("a3")
    assert generic_rank(matrix([[a2, a3], [a3, a2]])) == 2
    zero = SparsePoly.zero(("a2", "a3"))
    assert generic_rank(matrix([[zero, zero], [zero, zero]])) == 0
    # rank-1 symbolic matrix
    assert generic_rank(matrix([[a2, a3], [a2, a3]])) == 1


def test_generic_rank_rational_entries():
    assert generic_rank(matrix([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])) == 1
    assert generic_rank(matrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])) == 3


def test_determinant_examples():
    m = matrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    assert polynomial_determinant(m) == Fraction(-1)
    a2, a3 = sym("a2"), sym("a3")
    d = polynomial_determinant(matrix([[a2, a3], [a3, a2]]))
    assert d == a2 * a2 - a3 * a3


def test_determinant_errors():
    with pytest.raises(NotSquare):
        polynomial_determinant(Matrix([0], [0, 1], [[1, 2]]))
    big = matrix([[Fraction(int(i == j)) for j in range(13)] for i in range(13)])
    with pytest.raises(SizeLimit):
        polynomial_determinant(big)


def test_exact_division():
    v = ("x", "y")
    f = SparsePoly(v, {(2, 0): Fraction(1), (0, 2): Fraction(-1)})
    g = SparsePoly(v, {(1, 0): Fraction(1), (0, 1): Fraction(1)})
    q = exact_div(f, g)
    assert q * g == f


def test_fraction_nullspace_reduced_form():
    rows = [[Fraction(0), Fraction(1), Fraction(0), Fraction(1)]]
    basis = fraction_nullspace(rows, 4)
    assert basis == [
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(-1), Fraction(0), Fraction(1)],
    ]


def test_probabilistic_fallback_flags_large_symbolic_matrices():
    n = 65
    variables = ("t",)
    t = SparsePoly.variable(variables, "t")
    zero = SparsePoly.zero(variables)
    entries = [[t if i == j else zero for j in range(n)] for i in range(n)]
    rank, probabilistic = rank_info(matrix(entries))
    assert probabilistic
    assert rank == n


def test_specialize():
    a2, a3 = sym("a2"), sym("a3")
    m = matrix([[a2, a3], [a3, a2]])
    s = m.specialize({"a2": 2, "a3": 2})
    assert fraction_rank(s.entries) == 1


@given(st.integers(1, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_bareiss_det_matches_cofactor_expansion(n, data):
    entries = [
        [Fraction(data.draw(st.integers(-6, 6))) for _ in range(n)] for _ in range(n)
    ]

    def cofactor_det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
        return total

    expected = cofactor_det(entries)
    got = polynomial_determinant(matrix(entries))
    assert got == expected
    # rank deficiency iff det vanishes for square matrices
    assert (fraction_rank(entries) < n) == (expected == 0)
