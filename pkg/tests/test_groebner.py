"""Division, Buchberger, initial ideals, Hilbert functions, and the
Macaulay-matrix cross-checks."""

import random

import pytest

from oracles import macaulay_contains, macaulay_dimension

from ginlab.fields import FP_DEFAULT, QQ
from ginlab.gin import apply_change, random_coordinate_change
from ginlab.groebner import (
    DegreeCapExceeded,
    Ideal,
    buchberger,
    ideal_equal,
    normal_form,
)
from ginlab.monomial_ideals import MonomialIdeal
from ginlab.orders import Lex, Revlex
from ginlab.poly import Polynomial, parse_polynomial, random_form
from ginlab.rings import RingContext
from ginlab.sylvester import sample_monic_pair


def ring(n=4, field=FP_DEFAULT):
    return RingContext(n, field)


def polys(R, *texts):
    return [parse_polynomial(t, R) for t in texts]


# ----------------------------------------------------------------------
# normal form


def test_normal_form_two_division_steps():
    R = ring(2)
    f, g = polys(R, "x0^2", "x0 - x1")
    assert normal_form(f, [g], Lex()) == parse_polynomial("x1^2", R)


def test_normal_form_no_divisibility():
    R = ring(3)
    f, g = polys(R, "x1*x2", "x0")
    assert normal_form(f, [g], Lex()) == f


def test_normal_form_membership_gives_zero():
    R = ring(3)
    f, g = polys(R, "x0^2 + x0*x1", "x0")
    assert normal_form(f, [g], Lex()).is_zero


def test_normal_form_zero_input():
    R = ring(2)
    assert normal_form(Polynomial.zero(R), polys(R, "x0"), Lex()).is_zero


def test_normal_form_uses_first_listed_divisor():
    R = ring(3)
    f = parse_polynomial("x0^2", R)
    g1, g2 = polys(R, "x0 - x1", "x0 - x2")
    # both leading terms divide x0^2; the first listed one must be used at
    # every step, so the remainder is x1^2 (and x2^2 with the order swapped)
    assert normal_form(f, [g1, g2], Lex()) == parse_polynomial("x1^2", R)
    assert normal_form(f, [g2, g1], Lex()) == parse_polynomial("x2^2", R)


def test_reduced_basis_is_monic_and_sorted():
    R = ring(4)
    rng = random.Random(51)
    gens = [random_form(R, 2, rng).scale(7) for _ in range(3)]
    gb = buchberger(gens, Revlex())
    keys = []
    for g in gb:
        lt, c = g.leading_term(Revlex())
        assert c == R.field.one
        keys.append((g.homogeneous_degree(), Revlex().sort_key(lt)))
    assert keys == sorted(keys)
    # tails are reduced: no monomial anywhere is divisible by another lead
    lts = [g.leading_monomial(Revlex()) for g in gb]
    for i, g in enumerate(gb):
        for m in g.terms:
            for j, lt in enumerate(lts):
                if i != j:
                    assert not all(a <= b for a, b in zip(lt, m))
                elif m != lt:
                    assert not all(a <= b for a, b in zip(lt, m))


def test_normal_form_result_irreducible():
    R = ring(3)
    rng = random.Random(5)
    G = buchberger([random_form(R, 2, rng) for _ in range(2)], Revlex())
    lts = [g.leading_monomial(Revlex()) for g in G]
    for _ in range(10):
        f = random_form(R, 4, rng)
        r = normal_form(f, G, Revlex())
        for m in r.terms:
            assert not any(all(a <= b for a, b in zip(lt, m)) for lt in lts)
        # f - r lies in the ideal
        assert normal_form(f - r, G, Revlex()).is_zero


# ----------------------------------------------------------------------
# buchberger


def test_buchberger_one_spair_by_hand():
    R = ring(2)
    gb = buchberger(polys(R, "x0 - x1", "x0^2"), Lex())
    assert gb == polys(R, "x0 - x1", "x1^2")


def test_buchberger_monomial_input_is_minimalized():
    R = ring(3)
    gb = buchberger(polys(R, "x0*x1", "x0^2*x1", "x2^3"), Lex())
    assert gb == polys(R, "x0*x1", "x2^3")


def test_buchberger_empty_input():
    assert buchberger([], Lex()) == []


def test_buchberger_requires_homogeneous():
    R = ring(2)
    with pytest.raises(ValueError):
        buchberger(polys(R, "x0^2 + x1"), Lex())


def test_degree_cap_below_generators_rejected():
    R = ring(2)
    with pytest.raises(ValueError):
        buchberger(polys(R, "x0^3"), Lex(), degree_cap=2)


def test_degree_cap_abort_carries_degree():
    R = ring(3)
    rng = random.Random(2)
    # a 3-point ideal in P^2 needs its lex basis out to degree 3
    from ginlab.points import random_points, vanishing_ideal

    I = vanishing_ideal(random_points(4, 2, 3, FP_DEFAULT))
    with pytest.raises(DegreeCapExceeded) as err:
        buchberger(list(I.generators), Lex(), degree_cap=2)
    assert err.value.degree > 2


def test_reduced_basis_unique_under_shuffles():
    R = ring(4)
    rng = random.Random(9)
    gens = [random_form(R, 2, rng) for _ in range(3)]
    reference = buchberger(gens, Revlex())
    for s in range(5):
        shuffled = list(gens)
        random.Random(s).shuffle(shuffled)
        assert buchberger(shuffled, Revlex()) == reference


def test_ci22_revlex_initial_ideal_in_generic_coordinates():
    R = ring(4)
    rng = random.Random(21)
    f, g = sample_monic_pair(R, 2, 2, rng)
    moved = apply_change(Ideal([f, g]), random_coordinate_change(R, 77))
    assert moved.initial_ideal(Revlex()) == MonomialIdeal.from_strings(
        R, ["x0^2", "x0*x1", "x1^3"]
    )


def test_sparse_and_dense_engines_agree():
    Rp = ring(3, FP_DEFAULT)
    Rq = ring(3, QQ)
    texts = ["x0^2 - x1*x2", "x0*x1 - x2^2"]
    gb_p = buchberger(polys(Rp, *texts), Lex())
    gb_q = buchberger([parse_polynomial(t, Rq) for t in texts], Lex())
    # compare monomial supports and leading terms degreewise
    assert [sorted(g.terms) for g in gb_p] == [sorted(g.terms) for g in gb_q]
    for fp, fq in zip(gb_p, gb_q):
        assert {m: FP_DEFAULT.of(c) for m, c in fq.terms.items()} == fp.terms


# ----------------------------------------------------------------------
# initial ideals / hilbert functions


def test_initial_ideal_from_hand_basis():
    R = ring(2)
    I = Ideal(polys(R, "x0 - x1", "x0^2"))
    assert I.initial_ideal(Lex()) == MonomialIdeal.from_strings(R, ["x0", "x1^2"])


def test_initial_ideal_of_monomial_ideal_is_itself():
    R = ring(3)
    I = Ideal(polys(R, "x0*x1", "x1^2*x2"))
    assert I.initial_ideal(Revlex()) == MonomialIdeal.from_strings(
        R, ["x0*x1", "x1^2*x2"]
    )


def test_hilbert_function_ci22():
    R = ring(4)
    rng = random.Random(31)
    f, g = sample_monic_pair(R, 2, 2, rng)
    hf = Ideal([f, g]).hilbert_function(Revlex(), bound=6)
    assert hf.dims == (1, 4, 8, 12, 16, 20, 24)


def test_hilbert_function_points():
    from ginlab.points import random_points, vanishing_ideal

    I = vanishing_ideal(random_points(3, 2, 8, FP_DEFAULT))
    hf = I.hilbert_function(Lex(), bound=5)
    assert hf.dims == (1, 3, 3, 3, 3, 3)
    assert hf.stable_value == 3


def test_hilbert_function_unit_ideal():
    R = ring(3)
    I = Ideal([Polynomial.constant(R, 1)])
    assert I.hilbert_function(Lex(), bound=3).dims == (0, 0, 0, 0)


def test_ideal_equal():
    R = ring(2)
    assert ideal_equal(
        Ideal(polys(R, "x0", "x1")), Ideal(polys(R, "x0 + x1", "x1")), Lex()
    )
    assert not ideal_equal(Ideal(polys(R, "x0^2")), Ideal(polys(R, "x0")), Lex())


def test_gb_cache_regenerates_identically():
    R = ring(3)
    rng = random.Random(13)
    I = Ideal([random_form(R, 2, rng), random_form(R, 2, rng)])
    first = I.groebner_basis(Lex())
    assert I.gb_cache
    again = Ideal(list(I.generators)).groebner_basis(Lex())
    assert first == again


# ----------------------------------------------------------------------
# Macaulay-matrix oracle cross-checks


def random_homogeneous_ideal(R, rng, count=2, maxdeg=3):
    return Ideal([random_form(R, rng.randint(1, maxdeg), rng) for _ in range(count)])


def test_hilbert_matches_macaulay_ranks():
    rng = random.Random(41)
    for nvars in (3, 4):
        R = ring(nvars)
        I = random_homogeneous_ideal(R, rng)
        hf = I.hilbert_function(Revlex(), bound=6)
        for d in range(7):
            assert R.monomial_count(d) - hf.dims[d] == macaulay_dimension(I, d, Lex())


def test_membership_matches_macaulay_rank():
    rng = random.Random(43)
    R = ring(3)
    I = random_homogeneous_ideal(R, rng)
    gb = I.groebner_basis(Revlex())
    for _ in range(20):
        f = random_form(R, rng.randint(2, 5), rng)
        assert I.contains(f, Revlex()) == macaulay_contains(I, f, Lex())
    # known members
    g = I.generators[0] * random_form(R, 2, rng)
    assert I.contains(g, Revlex()) and macaulay_contains(I, g, Lex())


def test_hilbert_invariant_under_coordinate_change():
    rng = random.Random(47)
    R = ring(4)
    f, g = sample_monic_pair(R, 2, 2, rng)
    I = Ideal([f, g])
    hf = I.hilbert_function(Revlex(), bound=5)
    for seed in range(5):
        moved = apply_change(I, random_coordinate_change(R, seed))
        assert moved.hilbert_function(Revlex(), bound=5).dims == hf.dims
