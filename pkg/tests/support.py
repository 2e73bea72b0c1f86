"""Shared generators and small exact oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction
from random import Random

from hermitecount import Monomial, MonomialOrder, Polynomial, UnivariatePolynomial


def rand_fraction(rng: Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_monomial(rng: Random, nvars: int, max_exponent: int = 4) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exponent) for _ in range(nvars)))


def rand_polynomial(
    rng: Random,
    order: MonomialOrder,
    max_terms: int = 6,
    max_exponent: int = 4,
    bound: int = 100,
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rand_monomial(rng, order.nvars, max_exponent)] = rand_fraction(rng, bound)
    return Polynomial(order, terms)


def rand_monic_univariate(rng: Random, max_degree: int = 8) -> UnivariatePolynomial:
    """Monic polynomial of degree 1..max_degree; a mix of free coefficients,
    rational linear factors with forced repetitions, and irreducible quadratics."""
    style = rng.randrange(3)
    if style == 0:
        degree = rng.randint(1, max_degree)
        return UnivariatePolynomial(
            [rand_fraction(rng, 10) for _ in range(degree)] + [Fraction(1)]
        )
    f = UnivariatePolynomial([1])
    degree = 0
    target = rng.randint(1, max_degree)
    while degree < target:
        if style == 2 and target - degree >= 2 and rng.random() < 0.6:
            # irreducible quadratic: t^2 + b*t + c with b^2 - 4c < 0
            b = Fraction(rng.randint(-5, 5))
            c = b * b / 4 + Fraction(rng.randint(1, 5))
            f = f * UnivariatePolynomial([c, b, 1])
            degree += 2
        else:
            root = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            power = rng.randint(1, min(3, target - degree))
            for _ in range(power):
                f = f * UnivariatePolynomial([-root, 1])
            degree += power
    return f


def all_monomials(nvars: int, max_degree: int) -> list[Monomial]:
    out = []
    for exps in itertools.product(range(max_degree + 1), repeat=nvars):
        if sum(exps) <= max_degree:
            out.append(Monomial(exps))
    return out


def transpose(m: list[list[Fraction]]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if not a or not b:
        return []
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def rand_symmetric(rng: Random, dim: int, bound: int = 9) -> list[list[Fraction]]:
    m = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            value = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
            m[i][j] = value
            m[j][i] = value
    return m


def rand_invertible(rng: Random, dim: int) -> list[list[Fraction]]:
    """Random invertible rational matrix: identity plus a few elementary ops."""
    m = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    for _ in range(3 * dim):
        i, j = rng.randrange(dim), rng.randrange(dim)
        if i == j:
            continue
        f = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        for c in range(dim):
            m[i][c] += f * m[j][c]
    return m


def permutation_equal(a, b) -> bool:
    """Whether b equals a under one simultaneous row/column permutation."""
    n = len(a)
    if len(b) != n:
        return False
    a = [[Fraction(x) for x in row] for row in a]
    b = [[Fraction(x) for x in row] for row in b]
    for sigma in itertools.permutations(range(n)):
        if all(a[sigma[i]][sigma[j]] == b[i][j] for i in range(n) for j in range(n)):
            return True
    return False


# Zero-dimensional systems used by order-invariance and canonicity tests,
# with hand-derived (complex, real) counts where asserted elsewhere.
FIXTURE_SYSTEMS = [
    ("circle-hyperbola", "x1*x2+x2-1\nx1^2+x2^2-1"),
    ("tangent-line", "x1-1\nx1^2+x2^2-1"),
    ("circle-diagonal", "x1^2+x2^2-4\nx1-x2"),
    ("gaussian-pair", "x1^2+1"),
    ("unit-ideal", "x1\nx1+1"),
    ("nilpotent-line", "x1-1\nx2^2"),
    ("diagonal-cubic", "x1-x2\nx1^3-x2"),
    ("three-vars", "x1^2-1\nx2^2-2\nx3^2-x1*x2"),
]
