"""Macaulay-style inverse systems: dual generators, catalecticants, Hessians.

A homogeneous polynomial F presents a graded Artinian Gorenstein algebra as
differential operators modulo the annihilator of F.  The degree-d component
has dimension equal to the catalecticant rank: the rank of all degree-d
monomial operators applied to F.  Hessian matrices pair two monomial bases
through F and their ranks decide the Lefschetz properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DependentBasis, NotGorenstein
from .linalg import Matrix, fraction_rank, generic_rank, polynomial_determinant
from .polynomial import SparsePoly, monomials_of_degree
from .semigroup import AperyTable
from .algebra import variable_names

__all__ = [
    "apply_operator",
    "ann_contains",
    "match_annihilator_scale",
    "dual_socle_generator",
    "catalecticant_rank",
    "DualAlgebraView",
    "dual_algebra_view",
    "hessian",
    "mixed_hessian",
    "generic_rank",
    "polynomial_determinant",
]


def apply_operator(p: SparsePoly, F: SparsePoly) -> SparsePoly:
    """Apply p as a constant-coefficient differential operator to F.

    A monomial operator with exponents a sends x^b to b!/(b-a)! x^(b-a) when
    b >= a componentwise and to zero otherwise; the map extends linearly with
    exact rational coefficients.
    """
    if len(p.vars) != len(F.vars):
        raise ValueError("operator and polynomial must have the same variable count")
    out: dict[tuple[int, ...], Fraction] = {}
    for a, ca in p.terms.items():
        for b, cb in F.terms.items():
            if any(bi < ai for ai, bi in zip(a, b)):
                continue
            coeff = ca * cb
            for ai, bi in zip(a, b):
                for k in range(bi - ai + 1, bi + 1):
                    coeff *= k
            e = tuple(bi - ai for ai, bi in zip(a, b))
            acc = out.get(e, Fraction(0)) + coeff
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
    return SparsePoly(F.vars, out)


def ann_contains(F: SparsePoly, p: SparsePoly) -> bool:
    """Literal annihilator test: does p(X) kill F exactly?"""
    return not apply_operator(p, F)


def match_annihilator_scale(F: SparsePoly, p: SparsePoly) -> Optional[SparsePoly]:
    """Rescale the tail of p against its leading term to land in the annihilator.

    Candidate relations coming from additive identities hold only up to the
    derivative constants, so the tail gets one scalar: returns lead + s*tail
    annihilating F, or None when no scalar works.
    """
    if not p:
        return p
    lead_exps, lead_coeff = p.leading_term()
    lead = SparsePoly.monomial(p.vars, lead_exps, lead_coeff)
    tail = p - lead
    lead_img = apply_operator(lead, F)
    tail_img = apply_operator(tail, F)
    if not tail_img:
        return p if not lead_img else None
    if not lead_img:
        return None
    # need lead_img + s*tail_img = 0 for a single scalar s
    ratio = None
    if set(lead_img.terms) != set(tail_img.terms):
        return None
    for e, c in lead_img.terms.items():
        r = -c / tail_img.terms[e]
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return lead + tail * ratio


def dual_socle_generator(table: AperyTable) -> SparsePoly:
    """Sum of the monomials of all maximal representations of the apery top.

    Requires the order-symmetric (Gorenstein) case; every coefficient is 1.
    """
    if not table.m_pure_verdict():
        raise NotGorenstein(
            "dual generator exists only for order-symmetric apery sets"
        )
    codim = len(table.semigroup.generators) - 1
    names = variable_names(codim)
    terms = {rep.exponents[1:]: Fraction(1) for rep in table.max_reps[-1]}
    return SparsePoly(names, terms)


class _RowSpace:
    """Incremental exact row space for greedy basis selection."""

    def __init__(self, width: int):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []
        self.width = width

    def try_add(self, row: Sequence[Fraction]) -> bool:
        vec = list(row)
        for r, p in zip(self.rows, self.pivots):
            if vec[p]:
                factor = vec[p] / r[p]
                vec = [a - factor * b for a, b in zip(vec, r)]
        pivot = next((i for i, x in enumerate(vec) if x), None)
        if pivot is None:
            return False
        self.rows.append(vec)
        self.pivots.append(pivot)
        return True


def _coeff_row(poly: SparsePoly, monos: Sequence[tuple[int, ...]], index: dict) -> list[Fraction]:
    row = [Fraction(0)] * len(monos)
    for e, c in poly.terms.items():
        row[index[e]] = c
    return row


def catalecticant_rank(F: SparsePoly, d: int) -> int:
    """Rank of all degree-d monomial operators applied to F.

    Equals the dimension of the degree-d component of the algebra presented
    by F.
    """
    D = F.degree()
    if d < 0 or d > D:
        return 0
    target = monomials_of_degree(F.vars, D - d)
    index = {m: i for i, m in enumerate(target)}
    rows = []
    for m in monomials_of_degree(F.vars, d):
        img = apply_operator(SparsePoly.monomial(F.vars, m), F)
        if img:
            rows.append(_coeff_row(img, target, index))
    return fraction_rank(rows)


@dataclass
class DualAlgebraView:
    """Graded data of the algebra presented by F, with chosen monomial bases.

    bases[d] lists exponent tuples of degree-d monomials, greedily selected
    in graded-lex descending order so that their images under F are linearly
    independent; the basis sizes are the catalecticant ranks and form a
    symmetric Hilbert vector.
    """

    F: SparsePoly
    variables: tuple[str, ...]
    bases: tuple[tuple[tuple[int, ...], ...], ...]
    hilbert: tuple[int, ...]
    socle_degree: int

    @property
    def top_degree(self) -> int:
        return self.socle_degree

    def is_gorenstein(self) -> bool:
        return True

    def gorenstein_info(self) -> dict:
        return {
            "hilbert_symmetric": True,
            "socle_dimension": 1,
            "is_gorenstein": True,
        }

    @property
    def codim(self) -> int:
        return self.hilbert[1] if len(self.hilbert) > 1 else 0

    def symbols(self) -> tuple[str, ...]:
        taken = set(self.variables)
        out = []
        for i, _ in enumerate(self.variables, start=1):
            name = f"a{i}"
            while name in taken:
                name = "_" + name
            out.append(name)
            taken.add(name)
        return tuple(out)

    def basis_polys(self, d: int) -> list[SparsePoly]:
        return [SparsePoly.monomial(self.variables, e) for e in self.bases[d]]

    def pairing_matrix(self, d: int, power: int) -> Matrix:
        """Symbolic matrix with the rank of multiplication by a generic form.

        The target degree d+power pairs perfectly with degree D-d-power, so
        the rank of the multiplication map equals the rank of the matrix
        (row m, col m') -> (m*m')(X)F with the x variables renamed to the
        generic coefficient symbols.  The overall factorial scalar is
        dropped; only ranks are read off this matrix.
        """
        D = self.socle_degree
        if power < 1 or d < 0 or d + power > D:
            raise ValueError("map outside the graded range")
        symbols = self.symbols()
        rows = self.bases[D - d - power]
        cols = self.bases[d]
        entries = []
        for r in rows:
            row = []
            for c in cols:
                m = SparsePoly.monomial(self.variables, tuple(a + b for a, b in zip(r, c)))
                row.append(apply_operator(m, F=self.F).rename(symbols))
            entries.append(row)
        return Matrix(list(rows), list(cols), entries)


def dual_algebra_view(F: SparsePoly, require_positive_degree: bool = False) -> DualAlgebraView:
    """Select per-degree monomial bases for the algebra presented by F."""
    if not F:
        raise ValueError("zero polynomial does not present an algebra")
    if not F.is_homogeneous():
        raise ValueError("the dual generator must be homogeneous")
    D = F.degree()
    if require_positive_degree and D < 1:
        raise ValueError("the dual generator must have degree at least 1")
    bases = []
    for d in range(D + 1):
        target = monomials_of_degree(F.vars, D - d)
        index = {m: i for i, m in enumerate(target)}
        space = _RowSpace(len(target))
        chosen = []
        for m in monomials_of_degree(F.vars, d):
            img = apply_operator(SparsePoly.monomial(F.vars, m), F)
            if img and space.try_add(_coeff_row(img, target, index)):
                chosen.append(m)
        bases.append(tuple(chosen))
    hilbert = tuple(len(b) for b in bases)
    assert hilbert == hilbert[::-1], "catalecticant ranks must be symmetric"
    return DualAlgebraView(
        F=F,
        variables=F.vars,
        bases=tuple(bases),
        hilbert=hilbert,
        socle_degree=D,
    )


def _validate_basis(F: SparsePoly, d: int, basis: Sequence) -> list[tuple[int, ...]]:
    exps = []
    for b in basis:
        if isinstance(b, SparsePoly):
            if len(b.terms) != 1 or next(iter(b.terms.values())) != 1:
                raise DependentBasis("basis entries must be plain monomials")
            e = next(iter(b.terms))
        else:
            e = tuple(int(x) for x in b)
        if sum(e) != d:
            raise DependentBasis(f"basis monomial {e} does not have degree {d}")
        exps.append(e)
    D = F.degree()
    target = monomials_of_degree(F.vars, D - d)
    index = {m: i for i, m in enumerate(target)}
    space = _RowSpace(len(target))
    for e in exps:
        img = apply_operator(SparsePoly.monomial(F.vars, e), F)
        if not img or not space.try_add(_coeff_row(img, target, index)):
            raise DependentBasis(
                "basis monomials are dependent in the algebra presented by F"
            )
    return exps


def hessian(F: SparsePoly, d: int, basis: Sequence) -> Matrix:
    """Symmetric matrix of second-layer derivatives over a degree-d basis."""
    exps = _validate_basis(F, d, basis)
    labels = [SparsePoly.monomial(F.vars, e) for e in exps]
    entries = []
    for ei in exps:
        row = []
        for ej in exps:
            m = SparsePoly.monomial(F.vars, tuple(a + b for a, b in zip(ei, ej)))
            row.append(apply_operator(m, F))
        entries.append(row)
    return Matrix(labels, list(labels), entries)


def mixed_hessian(
    F: SparsePoly,
    d: int,
    t: int,
    row_basis: Sequence | None = None,
    col_basis: Sequence | None = None,
    view: DualAlgebraView | None = None,
) -> Matrix:
    """Rectangular pairing of a degree-d basis against a degree-t basis."""
    if view is None:
        view = dual_algebra_view(F)
    if row_basis is None:
        row_basis = view.bases[d]
    if col_basis is None:
        col_basis = view.bases[t]
    rows = _validate_basis(F, d, row_basis)
    cols = _validate_basis(F, t, col_basis)
    entries = []
    for ei in rows:
        row = []
        for ej in cols:
            m = SparsePoly.monomial(F.vars, tuple(a + b for a, b in zip(ei, ej)))
            row.append(apply_operator(m, F))
        entries.append(row)
    return Matrix(
        [SparsePoly.monomial(F.vars, e) for e in rows],
        [SparsePoly.monomial(F.vars, e) for e in cols],
        entries,
    )
