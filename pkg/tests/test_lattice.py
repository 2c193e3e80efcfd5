import inspect
from fractions import Fraction

import pytest

from newton_monodromy.errors import InputError, NoSupportingFaceError
from newton_monodromy.lattice import frame, polytope, volume
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import AffineLatticeFrame, lattice_frame
from newton_monodromy.lattice.polytope import EMPTY_FACE, convex_hull, minkowski_sum, supporting_face
from newton_monodromy.lattice.volume import lattice_points, mixed_volume, normalized_volume, relative_interior_points
from newton_monodromy.newton import polyhedra, polynomial

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
TRIANGLE = [(0, 0), (2, 0), (0, 2)]


def test_primitive_clears_denominators_and_content():
    assert la.primitive((2, 4, -6)) == (1, 2, -3)
    assert la.primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert la.primitive((0, 0)) == (0, 0)


def test_integer_kernel_is_primitive():
    (kernel,) = la.integer_kernel([(1, 1)], 2)
    assert la.dot(kernel, (1, 1)) == 0
    assert la.content(kernel) == 1


def test_saturated_basis_of_a_sublattice():
    (basis,) = la.saturated_basis([(2, 0)], 2)
    assert tuple(abs(a) for a in basis) == (1, 0)
    assert la.is_saturated([(1, 0), (0, 1)])
    assert not la.is_saturated([(2, 0)])


def test_frame_orientation_and_coordinates():
    frame = lattice_frame([(0, 0), (2, 2)])
    assert frame.dim == 1
    assert frame.basis == ((1, 1),)
    assert frame.integer_coordinates((2, 2)) == (2,)
    with pytest.raises(InputError):
        frame.integer_coordinates((1, 0))


def test_pullback_matches_coordinates():
    frame = lattice_frame([(1, 0), (3, 2)])
    w, c = frame.pullback((1,))
    for point in [(1, 0), (2, 1), (3, 2)]:
        assert la.dot(w, point) + c == frame.coordinates(point)[0]


def test_hull_of_square_with_interior_point():
    square = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert square.dim == 2
    assert square.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert len(square.facets) == 4
    assert len(square.faces) == 10
    assert EMPTY_FACE in square.faces


def test_lower_dimensional_hull_has_equations():
    segment = convex_hull([(0, 0), (1, 1), (2, 2)])
    assert segment.dim == 1
    assert segment.vertices == ((0, 0), (2, 2))
    assert len(segment.equations) == 1


def test_supporting_face_of_a_polyhedron():
    orthant = convex_hull([(1, 0), (0, 1)], rays=[(1, 0), (0, 1)])
    edge = supporting_face(orthant, (1, 1))
    assert edge.vertices == frozenset({(1, 0), (0, 1)})
    assert edge.is_compact
    with pytest.raises(NoSupportingFaceError):
        orthant.support_value((-1, 0))


def test_minkowski_sum_of_segments_is_a_square():
    a = convex_hull([(0, 0), (1, 0)])
    b = convex_hull([(0, 0), (0, 1)])
    assert minkowski_sum(a, b) == convex_hull(SQUARE)


@pytest.mark.parametrize(
    "points, volume",
    [
        (SQUARE, 2),
        (TRIANGLE, 4),
        ([(0, 0), (3, 0)], 3),
        ([(0, 0), (2, 2)], 2),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 1),
    ],
)
def test_normalized_volume(points, volume):
    polytope = convex_hull(points)
    assert normalized_volume(polytope, lattice_frame(polytope)) == volume


def test_mixed_volume():
    frame = AffineLatticeFrame.standard(2)
    a = convex_hull([(0, 0), (1, 0)])
    b = convex_hull([(0, 0), (0, 1)])
    assert mixed_volume([a, b], frame) == 1
    assert mixed_volume([b, a], frame) == 1
    triangle = convex_hull(TRIANGLE)
    assert mixed_volume([triangle, triangle], frame) == 4
    with pytest.raises(InputError):
        mixed_volume([a], frame)


def test_lattice_points_of_dilates():
    triangle = convex_hull(TRIANGLE)
    assert len(lattice_points(triangle)) == 6
    assert len(lattice_points(triangle, 2)) == 15
    assert lattice_points(triangle, 0) == [(0, 0)]
    assert relative_interior_points(convex_hull([(0, 0), (3, 0), (0, 3)])) == [(1, 1)]


def test_lattice_point_count_is_polynomial_in_the_dilation():
    # the classical count of a lattice polygon: area * m^2 + boundary / 2 * m + 1
    polygon = convex_hull([(0, 0), (3, 0), (1, 2), (0, 1)])
    counts = [len(lattice_points(polygon, m)) for m in range(7)]
    assert counts[:3] == [1, 8, 22]
    second_differences = [counts[m + 2] - 2 * counts[m + 1] + counts[m] for m in range(5)]
    assert set(second_differences) == {normalized_volume(polygon, lattice_frame(polygon))}
    tetrahedron = convex_hull([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1)])
    counts = [len(lattice_points(tetrahedron, m)) for m in range(8)]
    third_differences = [counts[m + 3] - 3 * counts[m + 2] + 3 * counts[m + 1] - counts[m] for m in range(5)]
    assert set(third_differences) == {normalized_volume(tetrahedron, lattice_frame(tetrahedron))}


def test_enumeration_refuses_entries_beyond_int64_headroom():
    with pytest.raises(InputError, match="too large"):
        lattice_points(convex_hull([(2 ** 30, 1)]))
    with pytest.raises(InputError, match="too large"):
        lattice_points(convex_hull([(0, 0), (1, 1)]), 2 ** 29)
    assert lattice_points(convex_hull([(0, 0), (1, 1)]), 3) == [(0, 0), (1, 1), (2, 2), (3, 3)]


@pytest.mark.parametrize("module", [la, frame, polytope, volume, polyhedra, polynomial], ids=lambda m: m.__name__)
def test_core_signatures_are_unannotated(module):
    candidates = [f for _, f in inspect.getmembers(module, inspect.isfunction)]
    for _, cls in inspect.getmembers(module, inspect.isclass):
        candidates.extend(f for f in vars(cls).values() if inspect.isfunction(f))
    functions = [f for f in candidates if f.__code__.co_filename == module.__file__]
    assert functions
    assert [f.__qualname__ for f in functions if f.__annotations__] == []
