from fractions import Fraction

import pytest

from newton_monodromy.errors import InputError, UnsupportedError
from newton_monodromy.lattice.polytope import convex_hull
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity, roots_dividing
from newton_monodromy.newton.polyhedra import INFINITY
from newton_monodromy.zeta.zeta_functions import (
    chi_bkk,
    chi_complement,
    eigenvalue_multiplicities,
    euler_characteristic,
    lefschetz,
    multiplicity,
    zeta_infinity,
    zeta_local,
)


def test_root_of_unity_classes():
    assert RootOfUnity.from_fraction(Fraction(5, 4)) == RootOfUnity(4, 1)
    assert RootOfUnity.from_string("3/4").conjugate() == RootOfUnity(4, 1)
    assert RootOfUnity.from_string("0/1").is_one
    with pytest.raises(InputError):
        RootOfUnity.from_string("2/4")
    with pytest.raises(InputError):
        RootOfUnity.from_string("five")


def test_roots_dividing_skips_one():
    assert roots_dividing(4) == [RootOfUnity(2, 1), RootOfUnity(4, 1), RootOfUnity(4, 3)]
    assert roots_dividing(1) == []


def test_cyclotomic_products_cancel():
    product = CyclotomicProduct.from_pairs([(1, 1), (1, -1), (2, 1)])
    assert product.as_dict() == {2: 1}
    assert CyclotomicProduct().is_one
    assert str(CyclotomicProduct.from_exponents({2: 1, 4: -1})) == "(1-t^2)(1-t^4)^{-1}"


def test_cusp_zeta(cusp_pair):
    zeta = zeta_local(cusp_pair)
    assert zeta.as_dict() == {2: 1, 3: 1, 6: -1}
    assert euler_characteristic(zeta) == -1
    assert eigenvalue_multiplicities(cusp_pair) == {RootOfUnity(6, 1): 1, RootOfUnity(6, 5): 1}


def test_worked_pair_zeta(worked_pair):
    zeta = zeta_local(worked_pair)
    assert zeta.as_dict() == {2: 1, 4: -1}
    assert str(zeta) == "(1-t^2)(1-t^4)^{-1}"


def test_worked_pair_multiplicities(worked_pair, i, minus_i, minus_one):
    assert multiplicity(worked_pair, i) == 1
    assert multiplicity(worked_pair, minus_i) == 1
    assert multiplicity(worked_pair, minus_one) == 0
    assert eigenvalue_multiplicities(worked_pair) == {i: 1, minus_i: 1}
    with pytest.raises(UnsupportedError):
        multiplicity(worked_pair, RootOfUnity.one())


def test_shared_tangent_cone(pair_of):
    assert zeta_local(pair_of("x^2 + y^2", "x + y")).as_dict() == {1: -1}


def test_lefschetz_numbers(worked_pair):
    assert lefschetz(worked_pair, 1) == 0
    assert lefschetz(worked_pair, 2) == 2
    assert lefschetz(worked_pair, 4) == -2
    with pytest.raises(InputError):
        lefschetz(worked_pair, 0)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (4, 1)])
def test_chi_bkk_of_a_curve(a, b):
    triangle = convex_hull([(0, 0), (a, 0), (0, b)])
    assert chi_bkk([triangle], 2) == -a * b


def test_chi_bkk_of_points():
    triangle = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert chi_bkk([triangle, triangle], 2) == 1
    assert chi_bkk([triangle, triangle, triangle], 2) == 0


def test_zeta_at_infinity(infinity_pair):
    assert chi_complement(infinity_pair) == 1
    assert zeta_infinity(infinity_pair).as_dict() == {1: 2}


def test_modes_are_not_mixed(worked_pair, infinity_pair):
    with pytest.raises(InputError):
        zeta_infinity(worked_pair)
    with pytest.raises(InputError):
        zeta_local(infinity_pair)


@pytest.mark.parametrize(
    "P, n, expected",
    [
        ("x^2 + y^3 + 1", 2, {2: 1, 3: 1, 6: -1}),
        ("x^4 + y^2 + 1", 2, {2: 1, 4: -1}),
        ("x^2 + y^2 + z^2 + 1", 3, {2: 1}),
    ],
)
def test_polynomial_at_infinity_has_the_classical_zeta(pair_of, P, n, expected):
    pair = pair_of(P, "1", n=n, mode=INFINITY)
    assert chi_complement(pair) == 0
    zeta = zeta_infinity(pair)
    assert zeta.as_dict() == expected
    assert zeta == CyclotomicProduct.from_exponents(expected)
