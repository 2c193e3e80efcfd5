import pytest

from newton_monodromy.errors import InputError
from newton_monodromy.newton.polyhedra import (
    INFINITY,
    LOCAL,
    MeroPair,
    all_facet_data,
    facet_data,
    is_convenient,
    is_properly_contained,
)
from newton_monodromy.newton.polynomial import SparsePolynomial
from newton_monodromy.parsing.parse_polynomial import parse_polynomial


def test_newton_polyhedra_of_the_worked_pair(worked_pair):
    assert worked_pair.gamma_P.vertices == ((0, 3), (2, 0))
    assert worked_pair.gamma_Q.vertices == ((0, 1), (1, 0))
    assert worked_pair.gamma_f.vertices == ((0, 4), (2, 1), (3, 0))
    assert len(worked_pair.gamma_f.compact_faces()) == 5


def test_facet_data_on_the_full_stratum(worked_pair):
    data = {datum.alpha: datum for datum in facet_data(worked_pair, (0, 1))}
    assert set(data) == {(1, 1), (3, 2)}
    steep = data[(3, 2)]
    assert (steep.dP, steep.dQ, steep.d, steep.v) == (6, 2, 4, 1)
    flat = data[(1, 1)]
    assert (flat.dP, flat.dQ, flat.d, flat.v) == (2, 1, 1, 1)


def test_facet_data_on_the_axes(worked_pair):
    data = sorted((datum.S, datum.d, datum.v) for datum in all_facet_data(worked_pair) if len(datum.S) == 1)
    assert data == [((0,), 1, 1), ((1,), 2, 1)]


def test_empty_subset_is_rejected(worked_pair):
    with pytest.raises(InputError):
        facet_data(worked_pair, ())


def test_restricted_support_drops_off_axis_terms():
    g = parse_polynomial("x^2 + x*y + y^3", 2)
    assert g.restricted_support((0,)) == [(2,)]
    assert g.restricted_support((1,)) == [(3,)]


@pytest.mark.parametrize(
    "text, mode, expected",
    [
        ("x^2 + y^3", LOCAL, True),
        ("x*y + y^2", LOCAL, False),
        ("1 + x*y", LOCAL, True),
        ("x^2 + y", INFINITY, True),
        ("1 + x*y", INFINITY, False),
    ],
)
def test_is_convenient(text, mode, expected):
    assert is_convenient(parse_polynomial(text, 2), mode) is expected


def test_proper_containment(worked_pair, pair_of):
    assert is_properly_contained(worked_pair)
    reversed_pair = pair_of("x + y", "x^2 + y^3")
    check = is_properly_contained(reversed_pair)
    assert not check
    assert check.witness


def test_pair_needs_matching_variables():
    with pytest.raises(InputError):
        MeroPair(SparsePolynomial.constant(2), SparsePolynomial.constant(3))


def test_zero_polynomial_is_rejected():
    with pytest.raises(InputError):
        SparsePolynomial.from_terms(2, {(1, 0): 0})
