"""Buchberger's algorithm, normal forms, and the staircase of standard monomials."""

from random import Random

import pytest

from hermitecount import (
    GREVLEX,
    ORDER_KINDS,
    Monomial,
    MonomialOrder,
    NotZeroDimensionalError,
    Polynomial,
    audit_basis,
    buchberger,
    is_zero_dimensional,
    normal_form,
    parse_polynomial,
    parse_system,
    s_polynomial,
    standard_monomials,
)

from support import FIXTURE_SYSTEMS, rand_polynomial

ORDER2 = MonomialOrder(GREVLEX, 2)
VARS2 = ["x1", "x2"]


def p2(text):
    return parse_polynomial(text, VARS2)


@pytest.fixture
def line_circle_basis():
    return buchberger([p2("x1-1"), p2("x1^2+x2^2-1")], ORDER2)


def test_buchberger_line_circle(line_circle_basis):
    assert [g for g in line_circle_basis] == [p2("x1-1"), p2("x2^2")]


def test_buchberger_single_polynomial_normalizes():
    basis = buchberger([p2("2*x1^2+4")], ORDER2)
    assert list(basis) == [p2("x1^2+2")]


def test_buchberger_unit_ideal():
    basis = buchberger([p2("x1"), p2("x1+1")], ORDER2)
    assert list(basis) == [p2("1")]


def test_buchberger_rejects_all_zero_input():
    with pytest.raises(NotZeroDimensionalError):
        buchberger([Polynomial.zero(ORDER2)], ORDER2)
    with pytest.raises(NotZeroDimensionalError):
        buchberger([], ORDER2)


def test_buchberger_drops_zero_generators(line_circle_basis):
    with_zero = buchberger(
        [p2("x1-1"), Polynomial.zero(ORDER2), p2("x1^2+x2^2-1")], ORDER2
    )
    assert with_zero.generators == line_circle_basis.generators


def test_normal_form_of_circle_modulo_basis(line_circle_basis):
    assert normal_form(p2("x1^2+x2^2-1"), line_circle_basis).is_zero()


def test_normal_form_keeps_standard_support(line_circle_basis):
    p = p2("x2+1/2")
    assert normal_form(p, line_circle_basis) == p


def test_normal_form_replaces_leading_variable(line_circle_basis):
    assert normal_form(p2("x1*x2"), line_circle_basis) == p2("x2")


def test_normal_form_order_mismatch(line_circle_basis):
    with pytest.raises(ValueError):
        normal_form(parse_polynomial("x1", VARS2, "lex"), line_circle_basis)


def test_s_polynomial_of_identical_leading_terms():
    f = p2("x1^2+x2")
    assert s_polynomial(f, f).is_zero()


def test_s_polynomial_coprime_pair():
    assert s_polynomial(p2("x1-1"), p2("x2^2")) == p2("-x2^2")


def test_s_polynomial_cancels_leading_terms():
    s = s_polynomial(p2("x1^2+x2^2-1"), p2("x1-1"))
    assert s == p2("x2^2+x1-1")
    basis = buchberger([p2("x1^2+x2^2-1"), p2("x1-1")], ORDER2)
    assert normal_form(s, basis).is_zero()


def test_s_polynomial_zero_input_rejected():
    with pytest.raises(ValueError):
        s_polynomial(Polynomial.zero(ORDER2), p2("x1"))


def test_is_zero_dimensional_cases(line_circle_basis):
    assert is_zero_dimensional(line_circle_basis)
    assert not is_zero_dimensional(buchberger([p2("x1-x2")], ORDER2))
    assert is_zero_dimensional(buchberger([p2("1")], ORDER2))


def test_standard_monomials_line_circle(line_circle_basis):
    quotient = standard_monomials(line_circle_basis)
    assert quotient.monomials == (Monomial((0, 0)), Monomial((0, 1)))
    assert quotient.dimension == 2


def test_standard_monomials_unit_ideal():
    quotient = standard_monomials(buchberger([p2("1")], ORDER2))
    assert quotient.monomials == ()
    assert quotient.dimension == 0


def test_standard_monomials_paper_system():
    _, polys = parse_system("x1*x2+x2-1\nx1^2+x2^2-1")
    quotient = standard_monomials(buchberger(polys, ORDER2))
    assert quotient.dimension == 4
    assert Monomial((0, 0)) in quotient.monomials


def test_standard_monomials_guards_positive_dimension():
    with pytest.raises(NotZeroDimensionalError):
        standard_monomials(buchberger([p2("x1-x2")], ORDER2))


def test_basis_generators_are_monic_and_reduced():
    for _, text in FIXTURE_SYSTEMS:
        variables, polys = parse_system(text)
        basis = buchberger(polys, polys[0].order)
        audit_basis(basis)  # monic, reduced, S-polynomials and originals to zero


def test_normal_form_is_linear_and_idempotent():
    rng = Random(20240815)
    _, polys = parse_system("x1*x2+x2-1\nx1^2+x2^2-1")
    basis = buchberger(polys, ORDER2)
    for _ in range(25):
        p = rand_polynomial(rng, ORDER2, max_terms=5, max_exponent=3, bound=20)
        q = rand_polynomial(rng, ORDER2, max_terms=5, max_exponent=3, bound=20)
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        combo = p.scale(a) + q.scale(b)
        assert normal_form(combo, basis) == (
            normal_form(p, basis).scale(a) + normal_form(q, basis).scale(b)
        )
        nf = normal_form(p, basis)
        assert normal_form(nf, basis) == nf


def test_membership_of_original_generators():
    for _, text in FIXTURE_SYSTEMS:
        _, polys = parse_system(text)
        basis = buchberger(polys, polys[0].order)
        for f in polys:
            assert normal_form(f, basis).is_zero()


def test_canonicity_under_generator_permutation():
    rng = Random(4)
    for _, text in FIXTURE_SYSTEMS:
        _, polys = parse_system(text)
        basis = buchberger(polys, polys[0].order)
        for _ in range(3):
            shuffled = polys[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled, polys[0].order).generators == basis.generators


def test_quotient_dimension_is_order_invariant():
    for _, text in FIXTURE_SYSTEMS:
        dims = set()
        for kind in ORDER_KINDS:
            _, polys = parse_system(text, kind)
            basis = buchberger(polys, polys[0].order)
            dims.add(standard_monomials(basis).dimension)
        assert len(dims) == 1, f"{text!r} gave dimensions {dims}"


def test_standard_monomials_sorted_ascending():
    for kind in ORDER_KINDS:
        _, polys = parse_system("x1*x2+x2-1\nx1^2+x2^2-1", kind)
        order = polys[0].order
        quotient = standard_monomials(buchberger(polys, order))
        keys = [order.key(m) for m in quotient.monomials]
        assert keys == sorted(keys)


def test_lex_staircase_can_exceed_generator_degree():
    # under lex the circle-hyperbola quotient basis is {1, x2, x2^2, x2^3}:
    # standard monomials may exceed the max generator degree, which is why the
    # staircase (not a degree-bounded expansion) defines the basis
    _, polys = parse_system("x1*x2+x2-1\nx1^2+x2^2-1", "lex")
    basis = buchberger(polys, polys[0].order)
    quotient = standard_monomials(basis)
    assert quotient.dimension == 4
    assert max(m.degree for m in quotient.monomials) == 3
