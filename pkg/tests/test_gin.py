"""Random coordinate changes and the gin agreement protocol."""

import random

import pytest

from ginlab.fields import FP_DEFAULT, QQ
from ginlab.gin import (
    apply_change,
    gin,
    inverse_change,
    random_coordinate_change,
)
from ginlab.groebner import Ideal, ideal_equal
from ginlab.monomial_ideals import MonomialIdeal, is_borel_fixed
from ginlab.orders import Lex, Revlex
from ginlab.poly import parse_polynomial, random_form
from ginlab.rings import RingContext
from ginlab.sylvester import sample_monic_pair


def ring(n=4, field=FP_DEFAULT):
    return RingContext(n, field)


def test_same_seed_same_matrix():
    R = ring()
    assert random_coordinate_change(R, 5).matrix == random_coordinate_change(R, 5).matrix


def test_neighboring_seeds_differ():
    R = ring()
    assert random_coordinate_change(R, 5).matrix != random_coordinate_change(R, 6).matrix


def test_determinant_nonzero_for_many_seeds():
    from ginlab import linalg

    R = ring(3)
    for seed in range(1000):
        m = random_coordinate_change(R, seed).matrix
        assert linalg.det(R.field, [list(r) for r in m]) != 0


def test_rational_coordinate_change_bounded_entries():
    R = ring(3, QQ)
    m = random_coordinate_change(R, 4).matrix
    assert all(abs(c) <= 10**6 for row in m for c in row)


def test_identity_change_keeps_generators():
    R = ring(3)
    I = Ideal([parse_polynomial("x0^2 - x1*x2", R)])
    identity = tuple(
        tuple(R.field.one if i == j else R.field.zero for j in range(3)) for i in range(3)
    )
    assert apply_change(I, identity).generators == I.generators


def test_change_then_inverse_restores_ideal():
    R = ring(3)
    rng = random.Random(2)
    I = Ideal([random_form(R, 2, rng), random_form(R, 2, rng)])
    M = random_coordinate_change(R, 12)
    back = apply_change(apply_change(I, M), inverse_change(M))
    assert ideal_equal(I, back, Revlex())


def test_singular_matrix_rejected():
    R = ring(2)
    I = Ideal([parse_polynomial("x0^2", R)])
    singular = ((R.field.one, R.field.one), (R.field.one, R.field.one))
    with pytest.raises(ValueError):
        apply_change(I, singular)


def test_gin_of_three_generic_points():
    from ginlab.points import random_points, vanishing_ideal

    I = vanishing_ideal(random_points(3, 2, 5, FP_DEFAULT))
    result = gin(I, Lex(), trials=2, seed=1)
    assert result.gin == MonomialIdeal.from_strings(
        I.ring, ["x0^2", "x0*x1", "x0*x2", "x1^3"]
    )
    assert result.agreed and result.borel
    assert result.regularity == 3


def test_gin_ci22_lex():
    R = ring(4)
    rng = random.Random(8)
    f, g = sample_monic_pair(R, 2, 2, rng)
    result = gin(Ideal([f, g]), Lex(), trials=2, seed=2)
    assert result.gin == MonomialIdeal.from_strings(
        R, ["x0^2", "x0*x1", "x0*x2^2", "x1^4"]
    )
    assert result.regularity == 4


def test_gin_of_borel_monomial_ideal_is_itself():
    R = ring(3)
    gens = ["x0^2", "x0*x1", "x1^3"]
    I = Ideal([parse_polynomial(t, R) for t in gens])
    result = gin(I, Lex(), trials=2, seed=4)
    assert result.gin == MonomialIdeal.from_strings(R, gens)


def test_gin_outputs_are_borel_fixed():
    rng = random.Random(77)
    for nvars, deg in [(3, 2), (4, 2), (3, 3)]:
        R = ring(nvars)
        I = Ideal([random_form(R, deg, rng), random_form(R, deg, rng)])
        result = gin(I, Revlex(), trials=2, seed=rng.randint(0, 10**6))
        assert result.borel
        assert is_borel_fixed(result.gin)


def test_gin_preserves_hilbert_function():
    R = ring(4)
    rng = random.Random(6)
    f, g = sample_monic_pair(R, 2, 2, rng)
    I = Ideal([f, g])
    result = gin(I, Lex(), trials=2, seed=3)
    from ginlab.monomial_ideals import hilbert_data

    assert hilbert_data(result.gin, 5).hf.dims == I.hilbert_function(Revlex(), 5).dims


def test_gin_requires_two_trials():
    R = ring(2)
    I = Ideal([parse_polynomial("x0^2", R)])
    with pytest.raises(ValueError):
        gin(I, Lex(), trials=1, seed=0)


def test_gin_keeps_transformed_ideal_with_cache():
    R = ring(4)
    rng = random.Random(10)
    f, g = sample_monic_pair(R, 2, 2, rng)
    result = gin(Ideal([f, g]), Lex(), trials=2, seed=9)
    moved = result.trial_ideals[0]
    assert moved.gb_cache  # the expensive basis is reusable
    assert moved.initial_ideal(Lex()) == result.gin
