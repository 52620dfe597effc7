"""Monomial ideal combinatorics: Hilbert series, Borel property, Betti
numbers, saturation."""

import pytest

from ginlab.fields import FP_DEFAULT
from ginlab.monomial_ideals import (
    MonomialIdeal,
    betti_regularity,
    borel_regularity,
    ek_betti,
    hilbert_data,
    is_borel_fixed,
    minimalize_monomials,
    monomial_hilbert,
    saturate_borel,
    saturate_monomial,
)
from ginlab.rings import RingContext


def ring(n):
    return RingContext(n, FP_DEFAULT)


def J(n, *gens):
    return MonomialIdeal.from_strings(ring(n), gens)


def test_minimal_generators_canonical():
    ideal = J(3, "x0^2*x1", "x0*x1", "x2^3", "x0*x1*x2")
    assert ideal.generator_strings() == ("x0*x1", "x2^3")


def test_contains_and_degree_slices():
    ideal = J(2, "x0^2")
    assert ideal.contains((2, 1))
    assert not ideal.contains((1, 5))
    assert ideal.monomials_of_degree(3) == ((3, 0), (2, 1))


# ----------------------------------------------------------------------
# Hilbert series


def test_hilbert_principal_variable():
    hf, dim, deg, numer = monomial_hilbert(J(2, "x0"), 5)
    assert hf.dims == (1, 1, 1, 1, 1, 1)
    assert (dim, deg) == (1, 1)


def test_hilbert_gin_of_ci22():
    ideal = J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4")
    hf, dim, deg, _ = monomial_hilbert(ideal, 6)
    assert hf.dims == (1, 4, 8, 12, 16, 20, 24)
    assert dim == 2
    assert deg == 4


def test_hilbert_artinian_and_unit():
    hf, dim, deg, _ = monomial_hilbert(J(2, "x0", "x1"), 3)
    assert hf.dims == (1, 0, 0, 0)
    assert dim == 0 and deg == 1
    hfu, dimu, degu, _ = monomial_hilbert(J(2, "1"), 3)
    assert hfu.dims == (0, 0, 0, 0)
    assert degu == 0


def test_hilbert_zero_ideal_is_free():
    hf, dim, deg, _ = monomial_hilbert(MonomialIdeal(ring(3), []), 4)
    assert hf.dims == (1, 3, 6, 10, 15)
    assert (dim, deg) == (3, 1)


def test_hilbert_census_function():
    ideal = J(3, "x0^3", "x0^2*x1", "x0^2*x2", "x0*x1^3", "x0*x1^2*x2",
              "x0*x1*x2^3", "x0*x2^5", "x1^7")
    hf, dim, deg, _ = monomial_hilbert(ideal, 8)
    assert hf.dims == (1, 3, 6, 7, 7, 7, 7, 7, 7)
    assert dim == 1 and deg == 7
    assert hf.stable_value == 7


# ----------------------------------------------------------------------
# Borel property


def test_borel_examples():
    assert is_borel_fixed(J(3, "x0^2", "x0*x1", "x1^3"))
    assert not is_borel_fixed(J(3, "x0*x2"))
    assert is_borel_fixed(J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4"))


def test_borel_regularity_values():
    assert borel_regularity(J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4")) == 4
    assert borel_regularity(J(2, "x0")) == 1
    with pytest.raises(ValueError):
        borel_regularity(J(3, "x0*x2"))


# ----------------------------------------------------------------------
# Eliahou-Kervaire Betti numbers


def test_ek_betti_principal():
    assert ek_betti(J(2, "x0")) == {(0, 1): 1}


def test_ek_betti_koszul_pair():
    assert ek_betti(J(2, "x0", "x1")) == {(0, 1): 2, (1, 2): 1}


def test_ek_betti_square_of_maximal_ideal():
    table = ek_betti(J(2, "x0^2", "x0*x1", "x1^2"))
    assert table == {(0, 2): 3, (1, 3): 2}
    assert betti_regularity(table) == 2


def test_ek_regularity_agrees_with_generator_degree():
    ideals = [
        J(3, "x0^2", "x0*x1", "x1^3"),
        J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4"),
        J(3, "x0^3", "x0^2*x1", "x0*x1^2", "x1^4"),
    ]
    for ideal in ideals:
        assert betti_regularity(ek_betti(ideal)) == borel_regularity(ideal)


def test_ek_betti_requires_borel():
    with pytest.raises(ValueError):
        ek_betti(J(3, "x0*x2"))


def test_ek_betti_euler_characteristic_gives_hilbert_numerator():
    # the resolution's alternating sum must reproduce the series numerator:
    # N(t) = 1 - sum_i (-1)^i sum_j beta_{i,j} t^j
    from ginlab.monomial_ideals import hilbert_numerator

    ideals = [
        J(2, "x0^2", "x0*x1", "x1^2"),
        J(3, "x0^2", "x0*x1", "x1^3"),
        J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4"),
        J(3, "x0^3", "x0^2*x1", "x0^2*x2", "x0*x1^3", "x0*x1^2*x2",
          "x0*x1*x2^3", "x0*x2^5", "x1^7"),
        J(3, "x0^3", "x0^2*x1", "x0*x1^2", "x1^4"),
    ]
    for ideal in ideals:
        table = ek_betti(ideal)
        top = max(j for (_, j) in table)
        numer = [0] * (top + 1)
        numer[0] = 1
        for (i, j), count in table.items():
            numer[j] += (-1) ** (i + 1) * count
        direct = hilbert_numerator(ideal)
        direct = list(direct) + [0] * (len(numer) - len(direct))
        assert numer == direct[: len(numer)]
        assert all(c == 0 for c in direct[len(numer):])


# ----------------------------------------------------------------------
# saturation


def test_saturation_strips_last_variable():
    ideal = J(4, "x0^2", "x0*x1", "x0*x2", "x0*x3")
    sat, d = saturate_monomial(ideal, 3)
    assert sat == J(4, "x0")
    assert d == 2


def test_saturated_ideal_unchanged():
    ideal = J(3, "x0^2", "x0*x1", "x1^3")
    sat, d = saturate_borel(ideal)
    assert sat == ideal
    assert d == 0


def test_gin_ci22_already_saturated():
    ideal = J(4, "x0^2", "x0*x1", "x0*x2^2", "x1^4")
    sat, d = saturate_borel(ideal)
    assert sat == ideal and d == 0
    # regularity bound max{e, c} from the dimension-1 Hilbert data
    _, dim, deg, _ = monomial_hilbert(ideal, 8)


def test_borel_saturation_requires_borel():
    with pytest.raises(ValueError):
        saturate_borel(J(3, "x0*x2"))


def test_saturation_degree_positive_case():
    # x1-saturation of (x0^2, x0*x1^3): strips to (x0^2, x0) = (x0)
    ideal = J(2, "x0^2", "x0*x1^3")
    sat, d = saturate_monomial(ideal, 1)
    assert sat == J(2, "x0")
    assert d == 4  # pieces differ up to degree 3 = deg(x0*x1^3) - 1
