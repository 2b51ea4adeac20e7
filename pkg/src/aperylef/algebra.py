"""Graded Artinian algebras with a combinatorial multiplication table.

Two constructions share one class.  An apery algebra has one basis label per
apery element, graded by order; the product of two labels is their sum when
that lands in the apery set with additive orders, else zero.  A box algebra
has exponent-tuple labels inside a bounded box, multiplication adds
exponents, optionally rewrites one pure power into a fixed mixed monomial,
and truncates anything leaving the box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import Callable, Optional, Sequence

from .errors import DegreeOutOfRange, NotApplicable, SizeLimit
from .linalg import Matrix, fraction_nullspace, fraction_rank
from .polynomial import SparsePoly, grlex_key, monomials_of_degree
from .semigroup import AperyTable, FrameData, NumericalSemigroup, compute_beta_gamma


def variable_names(codim: int) -> tuple[str, ...]:
    """y, z, w for codimension up to three, x2..xn beyond."""
    if codim <= 3:
        return ("y", "z", "w")[:codim]
    return tuple(f"x{i}" for i in range(2, codim + 2))


class GradedAlgebra:
    """Finite graded algebra whose basis products are single labels or zero."""

    def __init__(
        self,
        variables: tuple[str, ...],
        display_vars: tuple[str, ...],
        basis: list[list],
        var_labels: list,
        product_fn: Callable,
        display: dict,
        kind: str,
        meta: dict | None = None,
    ):
        # Trim empty top degrees so top_degree is the real socle degree.
        while basis and not basis[-1]:
            basis = basis[:-1]
        self.variables = tuple(variables)
        self.display_vars = tuple(display_vars)
        self.basis = tuple(tuple(b) for b in basis)
        self.var_labels = tuple(var_labels)
        self._product = product_fn
        self.display = display
        self.kind = kind
        self.meta = meta or {}
        self._degree = {}
        for d, labels in enumerate(self.basis):
            for lab in labels:
                self._degree[lab] = d

    # -- structure ----------------------------------------------------------

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.basis)

    @property
    def codim(self) -> int:
        return len(self.basis[1]) if len(self.basis) > 1 else 0

    def hilbert(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def degree_of(self, label) -> int:
        return self._degree[label]

    def product(self, a, b):
        """Product of two basis labels: a label of the sum degree, or None."""
        if a not in self._degree or b not in self._degree:
            raise KeyError("unknown basis label")
        return self._product(a, b)

    def symbols(self) -> tuple[str, ...]:
        """Symbolic coefficient names for a generic linear form, one per variable."""
        return tuple(f"a{i}" for i in range(2, len(self.variables) + 2))

    def label_text(self, label) -> str:
        exps = self.display.get(label)
        if exps is None:
            return str(label)
        mono = "*".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(self.display_vars, exps)
            if e
        )
        return mono or "1"

    def socle_labels(self) -> list:
        out = []
        for labels in self.basis:
            for lab in labels:
                if all(self._product(lab, v) is None for v in self.var_labels):
                    out.append(lab)
        return out

    def gorenstein_info(self) -> dict:
        """Hilbert symmetry and socle dimension, reported separately."""
        h = self.hilbert()
        symmetric = h == h[::-1]
        socle = self.socle_labels()
        return {
            "hilbert_symmetric": symmetric,
            "socle_dimension": len(socle),
            "is_gorenstein": symmetric and len(socle) == 1,
        }

    def is_gorenstein(self) -> bool:
        return self.gorenstein_info()["is_gorenstein"]

    def __repr__(self) -> str:
        return f"GradedAlgebra(kind={self.kind!r}, hilbert={self.hilbert()})"


def build_algebra(table: AperyTable) -> GradedAlgebra:
    """The graded algebra whose basis is the apery set graded by order."""
    order_of = table.order_of()
    top = max(table.orders)
    basis = [sorted(table.elements_of_order(d)) for d in range(top + 1)]
    degree1 = basis[1] if top >= 1 else []
    codim = len(degree1)
    names = variable_names(codim)
    display = {
        e: reps[0].exponents[1:]
        for e, reps in zip(table.elements, table.max_reps)
    }
    members = set(table.elements)

    def product_fn(a, b):
        s = a + b
        if s in members and order_of[s] == order_of[a] + order_of[b]:
            return s
        return None

    return GradedAlgebra(
        variables=names,
        display_vars=names,
        basis=basis,
        var_labels=degree1,
        product_fn=product_fn,
        display=display,
        kind="apery",
        meta={"table": table},
    )


def box_algebra(
    variables: tuple[str, ...],
    bounds: Sequence[int],
    rewrite: Optional[tuple[int, tuple[int, ...]]] = None,
    kind: str = "box",
    meta: dict | None = None,
) -> GradedAlgebra:
    """Monomial box algebra with an optional single pure-power rewrite.

    ``rewrite = (i, repl)`` sends the (bounds[i]+1)-th power of variable i to
    the monomial with exponents ``repl``; repl must avoid variable i, so each
    application strictly drops that exponent and rewriting terminates.
    """
    bounds = tuple(int(b) for b in bounds)
    if rewrite is not None:
        ri, repl = rewrite
        repl = tuple(int(x) for x in repl)
        if repl[ri]:
            raise ValueError("rewrite replacement must avoid its own variable")
        rewrite = (ri, repl)
    labels = sorted(iter_product(*(range(b + 1) for b in bounds)), key=grlex_key)
    top = sum(bounds)
    basis: list[list] = [[] for _ in range(top + 1)]
    for lab in labels:
        basis[sum(lab)].append(lab)
    var_labels = []
    for j in range(len(variables)):
        unit = tuple(1 if i == j else 0 for i in range(len(variables)))
        var_labels.append(unit)
    box = set(labels)

    def normalize(exps):
        if rewrite is not None:
            ri, repl = rewrite
            step = bounds[ri] + 1
            exps = list(exps)
            while exps[ri] > bounds[ri]:
                exps[ri] -= step
                for j, r in enumerate(repl):
                    exps[j] += r
            exps = tuple(exps)
        else:
            exps = tuple(exps)
        return exps if exps in box else None

    def product_fn(a, b):
        return normalize(tuple(x + y for x, y in zip(a, b)))

    return GradedAlgebra(
        variables=tuple(variables),
        display_vars=tuple(variables),
        basis=basis,
        var_labels=var_labels,
        product_fn=product_fn,
        display={lab: lab for lab in labels},
        kind=kind,
        meta=meta,
    )


def build_gamma_algebra(frame: FrameData) -> GradedAlgebra:
    """The box algebra on exponents up to gamma.

    In the complete intersection case this coincides with the apery algebra
    itself, so that is what is returned.  Otherwise the construction needs
    the codimension-3 shape: a single middle-variable double representation
    provides the rewrite monomial, and the two outer variables truncate.
    """
    table = frame.table
    if frame.is_ci():
        return build_algebra(table)
    gens = table.semigroup.generators
    if len(gens) != 4:
        raise NotApplicable("gamma algebra needs a complete intersection or codimension 3")
    if frame.gamma[1] >= frame.beta[1]:
        raise NotApplicable("codimension-3 structure requires gamma < beta in the middle")
    witness = frame.gamma_witness[2]
    mu2, mu4 = witness.exponents[1], witness.exponents[3]
    names = variable_names(3)
    alg = box_algebra(
        names,
        frame.gamma,
        rewrite=(1, (mu2, 0, mu4)),
        kind="gamma",
        meta={"frame": frame, "mu": (mu2, mu4)},
    )
    assert alg.dimension == frame.box_gamma_points()
    return alg


def hilbert_function(alg: GradedAlgebra) -> tuple[int, ...]:
    return alg.hilbert()


@dataclass(frozen=True)
class LinearForm:
    """Linear form in the degree-1 basis; rational or named-symbol coefficients."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("linear form needs at least one coefficient")
        if all(
            (not isinstance(c, str)) and Fraction(c) == 0 for c in self.coefficients
        ):
            raise ValueError("linear form must be nonzero")

    @classmethod
    def symbolic(cls, alg: GradedAlgebra) -> "LinearForm":
        return cls(alg.symbols())

    @classmethod
    def rational(cls, values: Sequence) -> "LinearForm":
        return cls(tuple(Fraction(v) for v in values))

    def symbol_names(self) -> tuple[str, ...]:
        seen = []
        for c in self.coefficients:
            if isinstance(c, str) and c not in seen:
                seen.append(c)
        return tuple(seen)


def multiplication_matrix(alg: GradedAlgebra, L: LinearForm, d: int, power: int = 1) -> Matrix:
    """Matrix of multiplication by L^power from degree d to degree d+power."""
    if power < 1:
        raise DegreeOutOfRange("power must be >= 1")
    if d < 0 or d + power > alg.top_degree:
        raise DegreeOutOfRange(
            f"map from degree {d} by power {power} leaves 0..{alg.top_degree}"
        )
    if len(L.coefficients) != len(alg.variables):
        raise ValueError("linear form arity does not match the algebra")
    symbols = L.symbol_names()
    coeff_polys = []
    for c in L.coefficients:
        if isinstance(c, str):
            coeff_polys.append(SparsePoly.variable(symbols, c))
        else:
            coeff_polys.append(SparsePoly.constant(symbols, c))
    rows = list(alg.basis[d + power])
    cols = list(alg.basis[d])
    row_index = {lab: i for i, lab in enumerate(rows)}
    entries = [[SparsePoly.zero(symbols) for _ in cols] for _ in rows]
    for j, col in enumerate(cols):
        vec = {col: SparsePoly.constant(symbols, 1)}
        for _ in range(power):
            nxt: dict = {}
            for lab, coeff in vec.items():
                for vlab, cpoly in zip(alg.var_labels, coeff_polys):
                    if not cpoly:
                        continue
                    target = alg.product(lab, vlab)
                    if target is None:
                        continue
                    nxt[target] = nxt.get(target, SparsePoly.zero(symbols)) + coeff * cpoly
            vec = {lab: c for lab, c in nxt.items() if c}
        for lab, coeff in vec.items():
            entries[row_index[lab]][j] = coeff
    return Matrix(rows, cols, entries)


@dataclass(frozen=True)
class MonomialSubspace:
    """Basis labels of a monomial ideal, grouped by degree."""

    labels_by_degree: tuple[tuple, ...]

    def all_labels(self) -> set:
        return {lab for labels in self.labels_by_degree for lab in labels}

    def dimension(self) -> int:
        return sum(len(labels) for labels in self.labels_by_degree)

    def hilbert(self) -> tuple[int, ...]:
        return tuple(len(labels) for labels in self.labels_by_degree)


def colon_by_power(alg: GradedAlgebra, var, c: int) -> tuple[MonomialSubspace, GradedAlgebra]:
    """Annihilator of the c-th power of a degree-1 variable, and the quotient.

    The annihilator is spanned by the basis labels killed by c successive
    multiplications; the quotient keeps the complementary labels with the
    induced table.
    """
    if c < 0:
        raise ValueError("colon power must be >= 0")
    if isinstance(var, str):
        vlabel = alg.var_labels[alg.variables.index(var)]
    elif isinstance(var, int) and var < len(alg.var_labels):
        vlabel = alg.var_labels[var]
    else:
        vlabel = var
        if vlabel not in alg.var_labels:
            raise ValueError(f"{var!r} is not a degree-1 variable of the algebra")

    def killed(label) -> bool:
        x = label
        for _ in range(c):
            x = alg.product(x, vlabel)
            if x is None:
                return True
        return False

    colon_by_deg = tuple(
        tuple(lab for lab in labels if killed(lab)) for labels in alg.basis
    )
    colon_set = {lab for labels in colon_by_deg for lab in labels}
    new_basis = [
        [lab for lab in labels if lab not in colon_set] for labels in alg.basis
    ]
    surviving = [lab for lab in alg.var_labels if lab not in colon_set]
    new_names = tuple(
        alg.variables[alg.var_labels.index(lab)] for lab in surviving
    )
    base_product = alg._product

    def product_fn(a, b):
        r = base_product(a, b)
        return None if r is None or r in colon_set else r

    quotient = GradedAlgebra(
        variables=new_names,
        display_vars=alg.display_vars,
        basis=new_basis,
        var_labels=surviving,
        product_fn=product_fn,
        display=alg.display,
        kind="quotient",
        meta={"parent": alg, "colon_variable": var, "colon_power": c},
    )
    return MonomialSubspace(colon_by_deg), quotient


def relation_text(p: SparsePoly) -> str:
    """Conventional display for a defining relation: pure power first.

    A binomial like a pure power minus a mixed monomial reads better with
    the pure power leading, so that term is pulled to the front; everything
    else keeps canonical graded-lex order.
    """
    pure = [
        (e, c) for e, c in p.terms.items()
        if sum(1 for x in e if x) == 1 and c > 0
    ]
    if len(pure) != 1 or len(p.terms) == 1:
        return str(p)
    (pe, pc) = pure[0]
    rest = SparsePoly(p.vars, {e: c for e, c in p.terms.items() if e != pe})
    head = str(SparsePoly.monomial(p.vars, pe, pc))
    tail = str(rest)
    if tail.startswith("-"):
        return f"{head} - {tail[1:]}"
    return f"{head} + {tail}"


@dataclass
class IdealDescription:
    """Generators of a defining ideal plus the structural data behind them."""

    generators: list[SparsePoly]
    degrees: list[int]
    variables: tuple[str, ...]
    data: dict = field(default_factory=dict)

    def generator_texts(self) -> list[str]:
        return [relation_text(g) for g in self.generators]


def ci_tilde_ideal(frame: FrameData) -> IdealDescription:
    """The candidate complete-intersection ideal from the gamma frame.

    One generator per variable: the (gamma_i+1)-th pure power, minus the
    double-representation monomial when gamma_i < beta_i.  This generates the
    whole defining ideal exactly in the complete intersection case.
    """
    gens = frame.semigroup.generators
    codim = len(gens) - 1
    names = variable_names(codim)
    polys = []
    degrees = []
    for j in range(codim):
        exps = [0] * codim
        exps[j] = frame.gamma[j] + 1
        p = SparsePoly.monomial(names, exps)
        if frame.rho[j]:
            witness = frame.gamma_witness[j + 1]
            p = p - SparsePoly.monomial(names, witness.exponents[1:])
        polys.append(p)
        degrees.append(frame.gamma[j] + 1)
    g1 = frame.semigroup.multiplicity
    return IdealDescription(
        generators=polys,
        degrees=degrees,
        variables=names,
        data={
            "beta": frame.beta,
            "gamma": frame.gamma,
            "rho": frame.rho,
            "is_ci": frame.is_ci(),
            "is_monomial_ci": frame.is_monomial_ci(),
            "box_gamma_points": frame.box_gamma_points(),
            "box_b_points": frame.box_b_points(),
            "box_gamma_elements": len(set(frame.box_gamma)),
            "multiplicity": g1,
        },
    )


def codim3_defining_ideal(S: NumericalSemigroup) -> IdealDescription:
    """Full defining ideal for 4-generated, order-symmetric, non-CI semigroups.

    Extends the tilde ideal by the two monomials z^h3*y^h2 and z^h3*w^h4,
    where the h exponents come from the double representation
    (gamma_3+1)*g_3 = mu_2*g_2 + mu_4*g_4 and from the gap C between the top
    box element and the top apery element.
    """
    gens = S.generators
    if len(gens) != 4:
        raise NotApplicable("codimension-3 structure requires 4 minimal generators")
    table = S.apery_table()
    if not table.m_pure_verdict():
        raise NotApplicable("requires an order-symmetric apery set")
    frame = compute_beta_gamma(S)
    if frame.is_ci():
        raise NotApplicable("complete intersection: the tilde ideal is already everything")
    tilde = ci_tilde_ideal(frame)
    g2, g3, g4 = gens[1], gens[2], gens[3]
    gamma2, gamma3, gamma4 = frame.gamma
    witness = frame.gamma_witness[2]
    mu2, mu4 = witness.exponents[1], witness.exponents[3]
    assert 1 <= mu2 <= gamma2 and 1 <= mu4 <= gamma4
    assert mu2 + mu4 == gamma3 + 1
    omega_d = gamma2 * g2 + gamma3 * g3 + gamma4 * g4
    omega_e = table.elements[-1]
    diff = omega_d - omega_e
    if diff <= 0 or diff % g3:
        raise NotApplicable("top box element does not sit over the apery top by g3 steps")
    C = diff // g3
    order_gap = sum(frame.gamma) - table.socle_degree
    assert C == order_gap and C <= gamma3
    h2 = gamma2 - mu2 + 1
    h3 = gamma3 - C + 1
    h4 = gamma4 - mu4 + 1
    assert h3 >= 1
    names = tilde.variables
    extra = [
        SparsePoly.monomial(names, (h2, h3, 0)),
        SparsePoly.monomial(names, (0, h3, h4)),
    ]
    data = dict(tilde.data)
    data.update(
        {
            "mu2": mu2,
            "mu4": mu4,
            "C": C,
            "h2": h2,
            "h3": h3,
            "h4": h4,
            "omega_d": omega_d,
            "omega_e": omega_e,
            "tilde_generators": tilde.generator_texts(),
        }
    )
    return IdealDescription(
        generators=tilde.generators + extra,
        degrees=tilde.degrees + [h2 + h3, h3 + h4],
        variables=names,
        data=data,
    )


BRUTE_FORCE_DIM_LIMIT = 200


def brute_force_relations(alg: GradedAlgebra, max_degree: int) -> IdealDescription:
    """Degreewise kernels of the monomial evaluation map onto the algebra.

    For every degree d <= max_degree, abstract monomials in the degree-1
    variables are multiplied out through the product table; the kernel of
    that evaluation, in reduced echelon form over the graded-lex descending
    monomial list, is returned as relation polynomials.
    """
    if alg.dimension > BRUTE_FORCE_DIM_LIMIT:
        raise SizeLimit(f"algebra dimension {alg.dimension} exceeds {BRUTE_FORCE_DIM_LIMIT}")
    names = alg.variables
    by_degree: dict[int, list[SparsePoly]] = {}
    gens: list[SparsePoly] = []
    degrees: list[int] = []
    for d in range(1, max_degree + 1):
        monos = monomials_of_degree(names, d)
        targets = alg.basis[d] if d <= alg.top_degree else ()
        row_index = {lab: i for i, lab in enumerate(targets)}
        columns = []
        for exps in monos:
            label = alg.basis[0][0]
            dead = False
            for vlab, e in zip(alg.var_labels, exps):
                for _ in range(e):
                    label = alg.product(label, vlab)
                    if label is None:
                        dead = True
                        break
                if dead:
                    break
            columns.append(None if dead else label)
        rows = [
            [Fraction(1 if columns[j] == lab else 0) for j in range(len(monos))]
            for lab in targets
        ]
        kernel = fraction_nullspace(rows, len(monos))
        polys = []
        for vec in kernel:
            poly = SparsePoly(names, {m: c for m, c in zip(monos, vec) if c})
            polys.append(poly)
        by_degree[d] = polys
        gens.extend(polys)
        degrees.extend([d] * len(polys))
    return IdealDescription(
        generators=gens,
        degrees=degrees,
        variables=names,
        data={"by_degree": by_degree, "max_degree": max_degree},
    )


def ideal_degree_span(
    generators: Sequence[SparsePoly], variables: tuple[str, ...], d: int
) -> list[list[Fraction]]:
    """Coefficient rows spanning the degree-d slice of the generated ideal."""
    monos = monomials_of_degree(variables, d)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in generators:
        gd = g.degree()
        if gd < 0 or gd > d:
            continue
        for mult in monomials_of_degree(variables, d - gd):
            shifted = g * SparsePoly.monomial(variables, mult)
            row = [Fraction(0)] * len(monos)
            for e, c in shifted.terms.items():
                row[index[e]] = c
            rows.append(row)
    return rows


def same_ideal_through_degree(
    gens_a: Sequence[SparsePoly],
    gens_b: Sequence[SparsePoly],
    variables: tuple[str, ...],
    max_degree: int,
) -> bool:
    """Degreewise span equality of two ideals, checked by exact ranks."""
    for d in range(1, max_degree + 1):
        rows_a = ideal_degree_span(gens_a, variables, d)
        rows_b = ideal_degree_span(gens_b, variables, d)
        ra = fraction_rank(rows_a)
        rb = fraction_rank(rows_b)
        if ra != rb or fraction_rank(rows_a + rows_b) != ra:
            return False
    return True
