"""Scalars, monomial orders, and polynomial arithmetic."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from ginlab.fields import FP_DEFAULT, QQ, PrimeField, field_from_spec
from ginlab.orders import (
    EQ,
    GT,
    LT,
    Lex,
    ProductOrder,
    Revlex,
    WeightOrder,
    canonical,
    cmp_monomials,
    elimination_order,
    sort_monomials,
)
from ginlab.poly import (
    Polynomial,
    PolynomialParseError,
    format_polynomial,
    parse_polynomial,
    random_form,
)
from ginlab.rings import RingContext


def ring(n=4, field=FP_DEFAULT):
    return RingContext(n, field)


# ----------------------------------------------------------------------
# fields


def test_prime_field_validation():
    PrimeField(2147483647)
    with pytest.raises(ValueError):
        PrimeField(2147483646)  # not prime
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)  # too large


def test_field_spec_parsing():
    assert field_from_spec("fp:101").p == 101
    assert field_from_spec("qq") is QQ
    with pytest.raises(ValueError):
        field_from_spec("gf:4")


def test_prime_field_matches_rationals_mod_p():
    rng = random.Random(1)
    p = FP_DEFAULT.p
    for _ in range(200):
        a, b = Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        fa, fb = FP_DEFAULT.of(a), FP_DEFAULT.of(b)
        assert FP_DEFAULT.add(fa, fb) == FP_DEFAULT.of(a + b)
        assert FP_DEFAULT.mul(fa, fb) == FP_DEFAULT.of(a * b)
        if b != 0:
            assert FP_DEFAULT.div(fa, fb) == FP_DEFAULT.of(a / b)
        assert FP_DEFAULT.neg(fa) == FP_DEFAULT.of(-a)
        assert (fa * FP_DEFAULT.inv(fa)) % p == 1 if a % p else True


# ----------------------------------------------------------------------
# orders


def test_lex_compares_first_variable():
    # x0 vs x1 in 4 variables
    assert cmp_monomials((1, 0, 0, 0), (0, 1, 0, 0), Lex()) == GT


def test_revlex_paper_example():
    # x1^2 vs x0*x2 in 3 variables: difference (-1, 2, -1) has negative
    # rightmost entry, so x1^2 is the larger monomial
    assert cmp_monomials((0, 2, 0), (1, 0, 1), Revlex()) == GT
    assert cmp_monomials((1, 0, 1), (0, 2, 0), Revlex()) == LT


def test_degree_compared_first():
    for order in (Lex(), Revlex(), WeightOrder((1, 5, 9), Lex())):
        assert cmp_monomials((3, 0, 0), (0, 0, 2), order) == GT


def test_cmp_eq_only_on_equal():
    assert cmp_monomials((1, 2, 0), (1, 2, 0), Lex()) == EQ
    with pytest.raises(ValueError):
        cmp_monomials((1, 2), (1, 2, 0), Lex())


ALL_ORDERS = [
    Lex(),
    Revlex(),
    WeightOrder((3, 2, 1, 1), Lex()),
    WeightOrder((1, 1, 2, 7), Revlex()),
    elimination_order(4, Revlex()),
    ProductOrder((2, 2), (Lex(), Revlex())),
]


@pytest.mark.parametrize("order", ALL_ORDERS, ids=str)
def test_sorting_is_strict_total_order(order):
    R = ring(4)
    for d in range(1, 9):
        mons = R.monomials_of_degree(d)
        ranked = sort_monomials(mons, order)
        assert len(ranked) == len(set(ranked))
        for a, b in zip(ranked, ranked[1:]):
            assert cmp_monomials(a, b, order) == GT


@pytest.mark.parametrize("order", ALL_ORDERS, ids=str)
def test_order_axioms_on_random_triples(order):
    rng = random.Random(7)
    mons = ring(4).monomials_of_degree(5)
    for _ in range(300):
        m, n, q = (rng.choice(mons) for _ in range(3))
        c_mn = cmp_monomials(m, n, order)
        assert c_mn == -cmp_monomials(n, m, order)
        if c_mn == GT and cmp_monomials(n, q, order) == GT:
            assert cmp_monomials(m, q, order) == GT
        shift = rng.choice(mons)
        scaled = (
            tuple(a + b for a, b in zip(m, shift)),
            tuple(a + b for a, b in zip(n, shift)),
        )
        assert cmp_monomials(*scaled, order) == c_mn


def test_weight_order_requires_positive_weights_and_tiebreak():
    with pytest.raises(ValueError):
        WeightOrder((1, 0, 1), Lex())
    with pytest.raises(ValueError):
        WeightOrder((1, 2, 3), None)


def test_canonicalization_merges_equivalent_descriptors():
    assert canonical(elimination_order(4, Lex())) == Lex()
    assert canonical(WeightOrder((2, 2, 2), Revlex())) == Revlex()
    assert canonical(elimination_order(4, Revlex())) != Revlex()


def test_elimination_order_pulls_x0_terms_first():
    order = elimination_order(3, Revlex())
    # within degree 2: anything with x0 beats anything without
    assert cmp_monomials((1, 0, 1), (0, 2, 0), order) == GT
    assert cmp_monomials((2, 0, 0), (1, 1, 0), order) == GT


# ----------------------------------------------------------------------
# polynomials


def test_parse_and_format_round_trip():
    R = ring(4)
    for text in ["x0^2*x1 - 3*x2^3", "x0 + x1 + x2 + x3", "5*x3", "0", "7", "-x0*x1 + 2"]:
        f = parse_polynomial(text, R)
        assert parse_polynomial(format_polynomial(f), R) == f


def test_parse_rejects_bad_grammar():
    R = ring(4)
    for bad in ["x4", "3x0", "x0^", "x0*", "", "x0^-2"]:
        with pytest.raises(PolynomialParseError):
            parse_polynomial(bad, R)


def test_addition_cancels():
    R = ring(2)
    f = parse_polynomial("x0 + x1", R)
    g = parse_polynomial("-x1", R)
    assert f + g == parse_polynomial("x0", R)


def test_product_of_conjugates():
    R = ring(2)
    f = parse_polynomial("x0 + x1", R)
    g = parse_polynomial("x0 - x1", R)
    assert f * g == parse_polynomial("x0^2 - x1^2", R)


def test_linear_substitution_binomial():
    R = ring(2)
    f = parse_polynomial("x0^2", R)
    images = [parse_polynomial("x0 + x1", R), Polynomial.variable(R, 1)]
    assert f.substitute(images) == parse_polynomial("x0^2 + 2*x0*x1 + x1^2", R)


def test_substitution_is_ring_homomorphism():
    R = ring(3)
    rng = random.Random(3)
    images = [random_form(R, 1, rng) for _ in range(3)]
    for _ in range(20):
        f = random_form(R, rng.randint(1, 3), rng)
        g = random_form(R, rng.randint(1, 3), rng)
        sub = lambda h: h.substitute(images)
        assert sub(f + g) == sub(f) + sub(g)
        assert sub(f * g) == sub(f) * sub(g)


def test_leading_terms():
    R = ring(4)
    f = parse_polynomial("x0*x1 + x2^2", R)
    assert f.leading_term(Lex()) == ((1, 1, 0, 0), 1)
    g = parse_polynomial("x1^2 + x0*x2", R)
    assert g.leading_monomial(Revlex()) == (0, 2, 0, 0)
    h = parse_polynomial("5*x3", R)
    assert h.leading_term(Lex()) == ((0, 0, 0, 1), 5)
    with pytest.raises(ValueError):
        Polynomial.zero(R).leading_term(Lex())


def test_prime_and_rational_arithmetic_agree():
    Rq = ring(3, QQ)
    Rp = ring(3, FP_DEFAULT)
    rng = random.Random(11)
    for _ in range(20):
        terms = [
            (tuple(rng.randint(0, 2) for _ in range(3)), rng.randint(-9, 9))
            for _ in range(4)
        ]
        f_q = Polynomial.from_terms(Rq, terms)
        g_q = Polynomial.from_terms(Rq, terms[::-1])
        f_p = Polynomial.from_terms(Rp, terms)
        g_p = Polynomial.from_terms(Rp, terms[::-1])
        prod_q = f_q * g_q + f_q
        prod_p = f_p * g_p + f_p
        reduced = {
            m: FP_DEFAULT.of(c) for m, c in prod_q.terms.items()
            if FP_DEFAULT.of(c) != 0
        }
        assert reduced == prod_p.terms


def test_homogeneous_degree_and_zero():
    R = ring(2)
    assert parse_polynomial("x0^2 + x0*x1", R).homogeneous_degree() == 2
    assert parse_polynomial("x0^2 + x1", R).homogeneous_degree() is None
    assert Polynomial.zero(R).is_zero
