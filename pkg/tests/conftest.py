import pytest

from newton_monodromy.newton.polyhedra import INFINITY, LOCAL, MeroPair
from newton_monodromy.parsing.parse_polynomial import parse_polynomial
from newton_monodromy.zeta.cyclotomic import RootOfUnity


def make_pair(P, Q="1", n=2, mode=LOCAL):
    return MeroPair(parse_polynomial(P, n), parse_polynomial(Q, n), mode)


@pytest.fixture
def worked_pair():
    """f = (x^2 + y^3) / (x + y) at the origin."""

    return make_pair("x^2 + y^3", "x + y")


@pytest.fixture
def cusp_pair():
    return make_pair("x^2 + y^3")


@pytest.fixture
def infinity_pair():
    return make_pair("x^2", "x + 1", n=1, mode=INFINITY)


@pytest.fixture
def i():
    return RootOfUnity(4, 1)


@pytest.fixture
def minus_i():
    return RootOfUnity(4, 3)


@pytest.fixture
def minus_one():
    return RootOfUnity(2, 1)


@pytest.fixture
def pair_of():
    return make_pair
