"""Exact inertia: congruence diagonalization against the characteristic
polynomial oracle."""

from fractions import Fraction
from random import Random

import pytest

from hermitecount import (
    InertiaResult,
    characteristic_polynomial,
    congruence_diagonalize,
    determinant,
    gaussian_rank,
    inertia,
    inertia_via_charpoly,
)

from support import mat_mul, rand_invertible, rand_symmetric, transpose

TRACE_FORM_4X4 = [
    [4, 0, -2, 0],
    [0, 0, 4, 6],
    [-2, 4, 4, 0],
    [0, 6, 0, -4],
]


def test_congruence_rank_deficient_diagonal():
    diagonal, transform = congruence_diagonalize([[2, 0], [0, 0]])
    assert diagonal == [2, 0]
    assert inertia([[2, 0], [0, 0]]) == InertiaResult(1, 0, 1)
    assert determinant(transform) != 0


def test_congruence_hyperbolic_pair():
    assert inertia([[0, 1], [1, 0]]) == InertiaResult(1, 1, 0)


def test_congruence_identity():
    assert inertia([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == InertiaResult(3, 0, 0)


def test_congruence_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        congruence_diagonalize([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        inertia_via_charpoly([[0, 1], [0, 0]])


def test_inertia_of_known_indefinite_form():
    result = inertia(TRACE_FORM_4X4)
    assert (result.rank, result.signature) == (4, 2)


def test_inertia_zero_matrix():
    for n in (1, 3, 5):
        zero = [[0] * n for _ in range(n)]
        assert inertia(zero) == InertiaResult(0, 0, n)


def test_inertia_of_diagonal_root_model():
    # diag(1 x r, 2 x s, -2 x s) has rank r + 2s and signature r
    for r in range(5):
        for s in range(4):
            diag = [1] * r + [2] * s + [-2] * s
            n = len(diag)
            m = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
            result = inertia(m)
            assert result.rank == r + 2 * s
            assert result.signature == r


def test_charpoly_examples():
    assert characteristic_polynomial([[2, 0], [0, 0]]).coefficients == (0, -2, 1)
    assert characteristic_polynomial([[1, 0], [0, 1]]).coefficients == (1, -2, 1)
    assert characteristic_polynomial([[0, 1], [1, 0]]).coefficients == (-1, 0, 1)
    assert characteristic_polynomial([]).coefficients == (1,)


def test_charpoly_on_nonsymmetric_matrix():
    # det(tI - A) for A = [[0, 1], [0, 0]] is t^2
    assert characteristic_polynomial([[0, 1], [0, 0]]).coefficients == (0, 0, 1)


def test_inertia_via_charpoly_examples():
    assert inertia_via_charpoly([[2, 0], [0, 0]]) == InertiaResult(1, 0, 1)
    assert inertia_via_charpoly([[0, 1], [1, 0]]) == InertiaResult(1, 1, 0)
    assert inertia_via_charpoly([[0, 0], [0, 0]]) == InertiaResult(0, 0, 2)


def test_empty_matrix_inertia():
    assert inertia([]) == InertiaResult(0, 0, 0)
    assert inertia_via_charpoly([]) == InertiaResult(0, 0, 0)


def test_oracle_agreement_and_congruence_validity_random():
    rng = Random(20240814)
    for _ in range(60):
        dim = rng.randint(1, 10)
        m = rand_symmetric(rng, dim)
        primary = inertia(m)
        oracle = inertia_via_charpoly(m)
        assert primary == oracle
        diagonal, transform = congruence_diagonalize(m)
        product = mat_mul(mat_mul(transpose(transform), m), transform)
        for i in range(dim):
            for j in range(dim):
                expected = diagonal[i] if i == j else Fraction(0)
                assert product[i][j] == expected
        assert determinant(transform) != 0
        assert primary.rank == gaussian_rank(m)


def test_sylvester_stability_under_congruence():
    rng = Random(555)
    for _ in range(20):
        dim = rng.randint(1, 6)
        m = rand_symmetric(rng, dim)
        p = rand_invertible(rng, dim)
        transformed = mat_mul(mat_mul(transpose(p), m), p)
        assert inertia(transformed) == inertia(m)


def test_gaussian_rank_on_rectangular():
    assert gaussian_rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert gaussian_rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert gaussian_rank([]) == 0


def test_inertia_result_identities():
    r = InertiaResult(3, 2, 1)
    assert r.rank == 5
    assert r.signature == 1
    assert r.positive + r.negative + r.zero == 6
