"""Arithmetic in the quotient ring on its standard-monomial basis: matrices of
multiplication operators, the trace functional, and the symmetric trace form
whose rank and signature count distinct complex and real solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .groebner import (
    GroebnerBasis,
    QuotientBasis,
    normal_form,
    standard_monomials,
)
from .poly import Monomial, Polynomial


@dataclass(frozen=True)
class MultiplicationMatrix:
    """Matrix of h -> element*h on the quotient basis; column k holds the
    coordinates of the reduced product element * basis[k]."""

    entries: tuple[tuple[Fraction, ...], ...]
    element: Polynomial
    basis: QuotientBasis

    def trace(self) -> Fraction:
        return sum((row[i] for i, row in enumerate(self.entries)), Fraction(0))


@dataclass(frozen=True)
class HermiteForm:
    """Gram matrix of the trace form on the standard-monomial basis."""

    entries: tuple[tuple[Fraction, ...], ...]
    basis: QuotientBasis

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class HermiteReport:
    """Rank/signature of the trace form and the solution counts they encode."""

    form: HermiteForm
    rank: int
    signature: int
    complex_count: int
    real_count: int
    quotient_dimension: int


def _check_basis(basis: GroebnerBasis, quotient: QuotientBasis) -> None:
    if quotient.order != basis.order or quotient.monomials != standard_monomials(basis).monomials:
        raise ValueError("quotient basis does not belong to this Groebner basis")


def _coordinates(p: Polynomial, index: dict[Monomial, int], dimension: int) -> list[Fraction]:
    coords = [Fraction(0)] * dimension
    for mono, coeff in p.terms:
        coords[index[mono]] = coeff
    return coords


def multiplication_matrix(
    g: Polynomial, basis: GroebnerBasis, quotient: QuotientBasis
) -> MultiplicationMatrix:
    """Matrix of multiplication by g on the quotient basis.

    Reduced products are supported on standard monomials, so their
    coordinates are read directly off the normal form.
    """
    _check_basis(basis, quotient)
    element = normal_form(g, basis)
    index = quotient.index()
    dim = quotient.dimension
    columns = []
    for mono in quotient.monomials:
        product = normal_form(element.mul_term(1, mono), basis)
        columns.append(_coordinates(product, index, dim))
    rows = tuple(tuple(columns[k][r] for k in range(dim)) for r in range(dim))
    return MultiplicationMatrix(rows, element, quotient)


def _product_table(
    basis: GroebnerBasis, quotient: QuotientBasis
) -> dict[tuple[int, int], dict[Monomial, Fraction]]:
    """Reduced products of basis pairs: (i, j) with i <= j -> NF(b_i * b_j)."""
    order = basis.order
    table: dict[tuple[int, int], dict[Monomial, Fraction]] = {}
    monos = quotient.monomials
    for i in range(len(monos)):
        for j in range(i, len(monos)):
            product = Polynomial(order, [(monos[i] * monos[j], 1)])
            table[(i, j)] = dict(normal_form(product, basis).terms)
    return table


def _trace_table(
    quotient: QuotientBasis, products: dict[tuple[int, int], dict[Monomial, Fraction]]
) -> dict[Monomial, Fraction]:
    monos = quotient.monomials
    tau: dict[Monomial, Fraction] = {}
    for i, mono in enumerate(monos):
        total = Fraction(0)
        for k, other in enumerate(monos):
            entry = products[(min(i, k), max(i, k))]
            total += entry.get(other, Fraction(0))
        tau[mono] = total
    return tau


def trace_functional(basis: GroebnerBasis, quotient: QuotientBasis) -> dict[Monomial, Fraction]:
    """tau(b) = trace of multiplication by b, for every basis monomial b.

    Traces of arbitrary elements follow by linearity: an element with normal
    form sum(c_m * b_m) has multiplication trace sum(c_m * tau(b_m)), which
    replaces one dim^2-sized matrix build per form entry with a single table.
    """
    _check_basis(basis, quotient)
    return _trace_table(quotient, _product_table(basis, quotient))


def hermite_form(basis: GroebnerBasis, quotient: QuotientBasis) -> HermiteForm:
    """Gram matrix H[i][j] = trace of multiplication by b_i*b_j.

    Entries are computed for i <= j and mirrored; symmetry is exact because
    the products themselves are symmetric.
    """
    _check_basis(basis, quotient)
    products = _product_table(basis, quotient)
    tau = _trace_table(quotient, products)
    dim = quotient.dimension
    entries = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            value = sum(
                (c * tau[mono] for mono, c in products[(i, j)].items()), Fraction(0)
            )
            entries[i][j] = value
            entries[j][i] = value
    return HermiteForm(tuple(tuple(row) for row in entries), quotient)


def hermite_report(basis: GroebnerBasis) -> HermiteReport:
    """Full pipeline tail: basis of the quotient, trace form, exact inertia.

    The rank of the form is the number of distinct complex solutions and its
    signature the number of distinct real solutions; an empty variety (unit
    ideal) yields the 0x0 form with both counts zero.
    """
    quotient = standard_monomials(basis)
    form = hermite_form(basis, quotient)
    result = linalg.inertia(form.rows())
    return HermiteReport(
        form=form,
        rank=result.rank,
        signature=result.signature,
        complex_count=result.rank,
        real_count=result.signature,
        quotient_dimension=quotient.dimension,
    )
