from fractions import Fraction

import pytest

from newton_monodromy.errors import HypothesisError, InputError, UnimodalityError, UnsupportedError
from newton_monodromy.ehrhart.polynomials import LaurentBiPoly, PuiseuxPolynomial, UniPoly
from newton_monodromy.lattice.frame import lattice_frame
from newton_monodromy.lattice.volume import normalized_volume
from newton_monodromy.newton.polyhedra import MeroPair
from newton_monodromy.newton.polynomial import SparsePolynomial
from newton_monodromy.spectrum.cayley import cayley_cells
from newton_monodromy.spectrum.hodge import (
    VIA_LOCAL_H,
    VIA_WEIGHTS,
    build_weighted_region,
    check_conjugation,
    e_lambda,
    jordan_at_least,
    jordan_counts,
    jordan_extremes,
    lifted_cells_agree,
    tilde_l,
)
from newton_monodromy.spectrum.spectrum import check_spectrum_paths, lambda_mass, reduced_spectrum, spectrum_from_hodge
from newton_monodromy.zeta.cyclotomic import RootOfUnity
from newton_monodromy.zeta.zeta_functions import multiplicity

WORKED_SPECTRUM = PuiseuxPolynomial({Fraction(1, 4): 1, Fraction(7, 4): 1})


def test_cayley_cells_of_the_worked_pair(worked_pair):
    cells = {cell.gamma.vertices: cell for cell in cayley_cells(worked_pair)}
    assert len(cells) == 5
    steep = cells[frozenset({(0, 4), (2, 1)})]
    assert (steep.d_gamma, steep.s_gamma, steep.m_gamma) == (4, 2, 0)
    assert steep.box.vertices == frozenset({(2, 0), (0, 3), (0, 1)})
    flat = cells[frozenset({(2, 1), (3, 0)})]
    assert flat.d_gamma == 1
    corner = cells[frozenset({(2, 1)})]
    assert (corner.d_gamma, corner.s_gamma, corner.m_gamma) == (1, 2, 1)
    top = cells[frozenset({(0, 4)})]
    assert (top.d_gamma, top.s_gamma) == (2, 1)
    assert cells[frozenset({(3, 0)})].s_gamma == 1


def test_box_heights_run_from_q_to_p(worked_pair):
    steep = next(cell for cell in cayley_cells(worked_pair) if cell.d_gamma == 4)
    assert steep.height((0, 1)) == 0
    assert steep.height((2, 0)) == 4
    assert steep.height((0, 3)) == 4


def test_weighted_region(worked_pair):
    region = build_weighted_region(worked_pair)
    assert normalized_volume(region.K, lattice_frame(region.K)) == 5
    assert region.distances() == [1, 2, 4]
    assert region.nu((2, 0)) == 0
    assert region.nu((0, 1)) == 1
    assert lifted_cells_agree(worked_pair)


def test_hypotheses_are_checked(pair_of, infinity_pair):
    with pytest.raises(HypothesisError):
        cayley_cells(pair_of("x*y + y^2"))
    with pytest.raises(HypothesisError):
        cayley_cells(pair_of("x + y", "x^2 + y^3"))
    with pytest.raises(InputError):
        cayley_cells(infinity_pair)


def test_hodge_deligne_polynomials(worked_pair, i, minus_i):
    E = e_lambda(worked_pair, i)
    assert E.poly == LaurentBiPoly({(0, 1): -1})
    assert E.hodge_numbers() == {(0, 1): 1}
    assert E.total_mass() == 1
    assert e_lambda(worked_pair, minus_i).poly == LaurentBiPoly({(1, 0): -1})
    assert check_conjugation(worked_pair, i)


def test_eigenvalue_one_is_unsupported(worked_pair):
    with pytest.raises(UnsupportedError):
        e_lambda(worked_pair, RootOfUnity.one())
    with pytest.raises(UnsupportedError):
        jordan_counts(worked_pair, RootOfUnity.one())
    with pytest.raises(UnsupportedError):
        jordan_extremes(worked_pair, RootOfUnity.one())


def test_jordan_counts(worked_pair, i, minus_one):
    counts = jordan_counts(worked_pair, i)
    assert counts[1] == 1
    assert counts[2] == 0
    assert counts.weighted_total() == 1
    assert jordan_counts(worked_pair, i, VIA_WEIGHTS).provenance[1] == VIA_WEIGHTS
    assert jordan_counts(worked_pair, minus_one).weighted_total() == 0
    with pytest.raises(InputError):
        jordan_counts(worked_pair, i, "guess")


def test_blocks_of_at_least_a_size(worked_pair, i):
    assert jordan_at_least(worked_pair, i, 1) == 1
    assert jordan_at_least(worked_pair, i, 2) == 0
    with pytest.raises(InputError):
        jordan_at_least(worked_pair, i, 0)


def test_jordan_extremes(worked_pair, i, minus_one):
    assert jordan_extremes(worked_pair, i) == (0, 1)
    assert jordan_extremes(worked_pair, minus_one) == (0, 0)


def test_tilde_l():
    assert tilde_l(UniPoly.t(), 2) == UniPoly.t()
    assert tilde_l(UniPoly.zero(), 3) == 0
    assert tilde_l(UniPoly.from_list([1, 2, 1]), 2) == UniPoly.from_list([1, 1])
    with pytest.raises(UnimodalityError):
        tilde_l(UniPoly.from_list([1, 0, 1]), 2)
    with pytest.raises(InputError):
        tilde_l(UniPoly.from_list([1, 2]), 2)


def test_reduced_spectrum(worked_pair, i, minus_i, minus_one):
    spectrum = reduced_spectrum(worked_pair)
    assert spectrum == WORKED_SPECTRUM
    assert spectrum_from_hodge(worked_pair) == WORKED_SPECTRUM
    assert check_spectrum_paths(worked_pair)
    assert lambda_mass(spectrum, i) == 1
    assert lambda_mass(spectrum, minus_i) == 1
    assert lambda_mass(spectrum, minus_one) == 0


@pytest.fixture
def solid_pair():
    P = SparsePolynomial.from_support(3, [(0, 0, 4), (0, 3, 1), (0, 5, 0), (2, 4, 1), (3, 0, 0), (4, 5, 4)])
    Q = SparsePolynomial.from_support(3, [(0, 0, 1), (0, 1, 0), (1, 0, 0), (2, 0, 0), (2, 2, 1)])
    return MeroPair(P, Q)


NINTHS = [RootOfUnity(9, k) for k in (1, 2, 4, 5, 7, 8)]


def test_spectrum_of_a_three_variable_pair(solid_pair):
    ninths = {2: 1, 10: 3, 11: 2, 13: 3, 14: 3, 16: 2, 17: 3, 25: 1}
    spectrum = reduced_spectrum(solid_pair)
    assert spectrum == PuiseuxPolynomial({Fraction(e, 9): c for e, c in ninths.items()})
    assert spectrum.reflected(3) == spectrum
    assert spectrum.coefficient_sum() == 18


@pytest.mark.parametrize("root", NINTHS, ids=str)
def test_hodge_and_jordan_data_in_three_variables(solid_pair, root):
    assert lambda_mass(reduced_spectrum(solid_pair), root) == 3
    assert multiplicity(solid_pair, root) == 3
    E = e_lambda(solid_pair, root)
    assert E.total_mass() == 3
    assert check_conjugation(solid_pair, root)
    counts = jordan_counts(solid_pair, root)
    assert counts.counts == jordan_counts(solid_pair, root, VIA_WEIGHTS).counts
    assert counts.provenance[3] == VIA_LOCAL_H
    assert counts.weighted_total() == 3
    assert jordan_extremes(solid_pair, root) == (counts[3], counts[2])


def test_interior_vertex_at_even_distance(pair_of, minus_one):
    pair = pair_of("x^6 + x^2*y^2 + y^6")
    assert multiplicity(pair, minus_one) == 2
    assert jordan_extremes(pair, minus_one) == (1, 0)
    counts = jordan_counts(pair, minus_one)
    assert (counts[2], counts[1]) == (1, 0)
    assert jordan_at_least(pair, minus_one, 2) == 1
    assert jordan_extremes(pair, RootOfUnity(3, 1)) == (0, 0)
