"""Exact linear algebra over rationals and polynomial entries.

Symbolic ranks and determinants use fraction-free (Bareiss) elimination:
every intermediate entry is a minor of the input matrix, so the division by
the previous pivot is exact and entries stay polynomial.  Rational matrices
take a plain Gaussian path.

The generic rank of a symbolic matrix is its rank over the field of rational
functions in the entry variables, which equals the maximum rank over all
specializations.  Matrices above SYMBOLIC_RANK_LIMIT fall back to repeated
random integer specialization; that result is a certified lower bound only
and is flagged as probabilistic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotSquare, SizeLimit
from .polynomial import SparsePoly

SYMBOLIC_RANK_LIMIT = 64
DETERMINANT_SIZE_LIMIT = 12
PROBE_DRAWS = 5
PROBE_RANGE = 10_000


def exact_div(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Divide f by g assuming exact divisibility (true inside Bareiss)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return SparsePoly(f.vars)
    if g.is_constant():
        c = g.constant_value()
        return SparsePoly(f.vars, {e: cc / c for e, cc in f.terms.items()})
    ge, gc = g.leading_term()
    quotient: dict[tuple[int, ...], Fraction] = {}
    rem = f
    while rem:
        re_, rc = rem.leading_term()
        qe = tuple(a - b for a, b in zip(re_, ge))
        if any(x < 0 for x in qe):
            raise ArithmeticError("inexact polynomial division")
        qc = rc / gc
        quotient[qe] = quotient.get(qe, Fraction(0)) + qc
        rem = rem - SparsePoly.monomial(f.vars, qe, qc) * g
    return SparsePoly(f.vars, quotient)


def _lift_rows(entries) -> tuple[tuple[str, ...], list[list[SparsePoly]] | None, list[list[Fraction]] | None]:
    """Split into a pure-Fraction grid or a unified SparsePoly grid.

    Variable order of the first polynomial entry is preserved so results
    compare equal against polynomials built over the caller's tuple.
    """
    names: list[str] = []
    symbolic = False
    for row in entries:
        for e in row:
            if isinstance(e, SparsePoly):
                if e.terms and not e.is_constant():
                    symbolic = True
                for v in e.vars:
                    if v not in names:
                        names.append(v)
    if not symbolic:
        rows = [
            [e.constant_value() if isinstance(e, SparsePoly) else Fraction(e) for e in row]
            for row in entries
        ]
        return (), None, rows
    variables = tuple(names)
    rows = []
    for row in entries:
        lifted = []
        for e in row:
            if isinstance(e, SparsePoly):
                lifted.append(e.with_vars(variables))
            else:
                lifted.append(SparsePoly.constant(variables, e))
        rows.append(lifted)
    return variables, rows, None


def fraction_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by ordinary Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                factor = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] -= factor * m[row][c]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def fraction_rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    if not m or not m[0]:
        return m, pivots
    nrows, ncols = len(m), len(m[0])
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m, pivots


def fraction_nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Nullspace basis in reduced echelon form w.r.t. the column order.

    Each vector has coefficient 1 at one free column and its support at that
    column plus earlier pivot columns, which makes output reproducible.
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rref, pivots = fraction_rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][free]
        basis.append(vec)
    return basis


def poly_rank(rows: list[list[SparsePoly]]) -> int:
    """Rank over the rational function field, by fraction-free elimination."""
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = None
    for k in range(min(nrows, ncols)):
        pr = pc = None
        for r in range(k, nrows):
            for c in range(k, ncols):
                if m[r][c]:
                    pr, pc = r, c
                    break
            if pr is not None:
                break
        if pr is None:
            break
        m[k], m[pr] = m[pr], m[k]
        if pc != k:
            for row in m:
                row[k], row[pc] = row[pc], row[k]
        pivot = m[k][k]
        for r in range(k + 1, nrows):
            for c in range(k + 1, ncols):
                e = pivot * m[r][c] - m[r][k] * m[k][c]
                if prev is not None:
                    e = exact_div(e, prev)
                m[r][c] = e
            m[r][k] = SparsePoly(pivot.vars)
        prev = pivot
        rank += 1
    return rank


def poly_det(rows: list[list[SparsePoly]]) -> SparsePoly:
    """Exact determinant by Bareiss elimination with row pivoting."""
    n = len(rows)
    m = [list(row) for row in rows]
    variables = m[0][0].vars
    sign = 1
    prev = None
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if m[r][k]), None)
        if pivot_row is None:
            return SparsePoly(variables)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                e = pivot * m[r][c] - m[r][k] * m[k][c]
                if prev is not None:
                    e = exact_div(e, prev)
                m[r][c] = e
        prev = pivot
    det = m[n - 1][n - 1]
    return det * sign if sign < 0 else det


@dataclass
class Matrix:
    """Labeled matrix with exact entries (Fraction or SparsePoly)."""

    row_labels: list
    col_labels: list
    entries: list

    @property
    def nrows(self) -> int:
        return len(self.row_labels)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def variables(self) -> tuple[str, ...]:
        names: set[str] = set()
        for row in self.entries:
            for e in row:
                if isinstance(e, SparsePoly) and e.terms and not e.is_constant():
                    names.update(e.vars)
        return tuple(sorted(names))

    def is_symbolic(self) -> bool:
        return bool(self.variables())

    def transpose(self) -> "Matrix":
        ent = [[self.entries[r][c] for r in range(self.nrows)] for c in range(self.ncols)]
        return Matrix(list(self.col_labels), list(self.row_labels), ent)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        for r in range(n):
            for c in range(r + 1, n):
                a, b = self.entries[r][c], self.entries[c][r]
                if isinstance(a, SparsePoly) or isinstance(b, SparsePoly):
                    if a != b:
                        return False
                elif Fraction(a) != Fraction(b):
                    return False
        return True

    def specialize(self, assignment) -> "Matrix":
        """Substitute values for every symbolic variable; entries become Fractions."""
        out = []
        for row in self.entries:
            new_row = []
            for e in row:
                if isinstance(e, SparsePoly):
                    new_row.append(e.evaluate({v: assignment[v] for v in e.vars}))
                else:
                    new_row.append(Fraction(e))
            out.append(new_row)
        return Matrix(list(self.row_labels), list(self.col_labels), out)

    def to_text(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        widths = [max(len(cells[r][c]) for r in range(self.nrows)) for c in range(self.ncols)] if self.nrows else []
        lines = []
        for row in cells:
            lines.append("[ " + "  ".join(s.rjust(w) for s, w in zip(row, widths)) + " ]")
        return "\n".join(lines)


def rank_info(matrix: Matrix, rng: random.Random | None = None) -> tuple[int, bool]:
    """(rank, probabilistic flag) for a labeled matrix.

    Rational matrices are eliminated exactly at any size.  Symbolic matrices
    up to SYMBOLIC_RANK_LIMIT get certified fraction-free elimination; larger
    ones are probed with PROBE_DRAWS random integer specializations and the
    result is flagged probabilistic (a lower bound on the generic rank).
    """
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0, False
    variables, poly_rows, frac_rows = _lift_rows(matrix.entries)
    if frac_rows is not None:
        return fraction_rank(frac_rows), False
    if max(matrix.nrows, matrix.ncols) <= SYMBOLIC_RANK_LIMIT:
        return poly_rank(poly_rows), False
    rng = rng or random.Random(0)
    best = 0
    for _ in range(PROBE_DRAWS):
        point = {v: Fraction(rng.randint(1, PROBE_RANGE)) for v in variables}
        best = max(best, fraction_rank(matrix.specialize(point).entries))
    return best, True


def generic_rank(matrix: Matrix, rng: random.Random | None = None) -> int:
    """Rank over the rational function field of the entries' variables."""
    rank, _ = rank_info(matrix, rng)
    return rank


def polynomial_determinant(matrix: Matrix):
    """Exact determinant; capped at DETERMINANT_SIZE_LIMIT for safety."""
    if not matrix.is_square:
        raise NotSquare(f"determinant of a {matrix.nrows}x{matrix.ncols} matrix")
    n = matrix.nrows
    if n == 0:
        return Fraction(1)
    if n > DETERMINANT_SIZE_LIMIT:
        raise SizeLimit(f"determinant size {n} exceeds cap {DETERMINANT_SIZE_LIMIT}")
    variables, poly_rows, frac_rows = _lift_rows(matrix.entries)
    if frac_rows is not None:
        lifted = [[SparsePoly.constant((), x) for x in row] for row in frac_rows]
        return poly_det(lifted).constant_value()
    return poly_det(poly_rows)
