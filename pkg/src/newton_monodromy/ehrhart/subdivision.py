"""Lattice polyhedral subdivisions, piecewise affine functions on them, and their h- and local h-polynomials.

Cells are Face objects; a subdivision is given by its maximal cells and
contains every face of them, the empty cell included.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from newton_monodromy.errors import InputError, TilingError
from newton_monodromy.ehrhart.polynomials import UniPoly
from newton_monodromy.ehrhart.posets import REVERSED, g_poly
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import lattice_frame
from newton_monodromy.lattice.polytope import EMPTY_FACE, Face, LatticePolytope, convex_hull, face_polytope
from newton_monodromy.lattice.volume import normalized_volume

logger = logging.getLogger(__name__)


class Subdivision(object):
    """A subdivision of a lattice polytope into lattice polytopes."""

    def __init__(self, ambient: LatticePolytope, maximal_cells: Iterable[Face]):
        self.ambient = ambient
        self.maximal_cells = tuple(sorted(set(maximal_cells), key=Face.sort_key))
        cells = {EMPTY_FACE}
        for cell in self.maximal_cells:
            cells.update(face_polytope(cell).faces)
        self.cells = tuple(sorted(cells, key=Face.sort_key))

    def __repr__(self):
        return f"Subdivision({len(self.maximal_cells)} maximal cells of {self.ambient!r})"

    @classmethod
    def trivial(cls, polytope: LatticePolytope):
        return cls(polytope, [polytope.as_face()] if not polytope.is_empty else [])

    @property
    def dim(self):
        return self.ambient.dim

    def link(self, cell: Face):
        """Cells containing the given cell, the cell itself included."""

        return [c for c in self.cells if cell <= c]

    def sigma(self, cell: Face) -> Face:
        """Smallest face of the ambient polytope containing the cell."""

        return self.ambient.smallest_face_containing(cell.vertices)

    def restrict(self, face: Face) -> "Subdivision":
        """The induced subdivision of a face of the ambient polytope."""

        inside = [c for c in self.cells if c.dim == face.dim and all(self.ambient.face_contains(face, v) for v in c.vertices)]
        return Subdivision(face_polytope(face), inside)

    def validate(self):
        """Raises TilingError unless the maximal cells tile the ambient polytope face to face."""

        if self.ambient.is_empty:
            return self
        frame = lattice_frame(self.ambient)
        for cell in self.maximal_cells:
            if cell.dim != self.dim or not all(self.ambient.contains(v) for v in cell.vertices):
                raise TilingError(f"{cell!r} is not a full dimensional cell inside the ambient polytope", datum=cell)
        total = sum(normalized_volume(face_polytope(c), frame) for c in self.maximal_cells)
        expected = normalized_volume(self.ambient, frame)
        if total != expected:
            raise TilingError(f"cell volumes add up to {total}, the polytope has {expected}", datum=total)
        sharing: Dict[Face, int] = {}
        for cell in self.maximal_cells:
            for ridge in face_polytope(cell).faces_of_dim(self.dim - 1):
                sharing[ridge] = sharing.get(ridge, 0) + 1
        for ridge, count in sharing.items():
            on_boundary = any(all(la.dot(facet.normal, v) == facet.offset for v in ridge.vertices)
                              for facet in self.ambient.facets)
            if count != (1 if on_boundary else 2):
                raise TilingError(f"{ridge!r} is shared by {count} maximal cells", datum=ridge)
        logger.debug("%r validated", self)
        return self


@dataclass(frozen=True)
class AffinePiece(object):
    """nu(x) = <linear, x> + constant on one maximal cell."""

    cell: Face
    linear: Tuple[Fraction, ...]
    constant: Fraction

    def value(self, point):
        return la.dot(self.linear, [Fraction(p) for p in point]) + self.constant

    def scaled_value(self, point, m):
        """m * nu(point / m) for a point of the m-th dilate."""

        return la.dot(self.linear, point) + m * self.constant

    @property
    def denominator(self):
        return la.lcm_of_denominators(list(self.linear) + [self.constant])


@dataclass(frozen=True)
class PiecewiseAffine(object):
    """A continuous function, affine on each maximal cell of a subdivision."""

    pieces: Tuple[AffinePiece, ...]

    @classmethod
    def zero(cls, polytope: LatticePolytope):
        n = polytope.ambient_dim
        return cls((AffinePiece(polytope.as_face(), (Fraction(0),) * n, Fraction(0)),))

    @classmethod
    def constant(cls, polytope: LatticePolytope, value):
        n = polytope.ambient_dim
        return cls((AffinePiece(polytope.as_face(), (Fraction(0),) * n, Fraction(value)),))

    @classmethod
    def linear(cls, polytope: LatticePolytope, linear: Sequence, constant=0):
        return cls((AffinePiece(polytope.as_face(), tuple(Fraction(a) for a in linear), Fraction(constant)),))

    def piece_containing(self, face: Face) -> AffinePiece:
        for piece in self.pieces:
            if face.vertices <= piece.cell.vertices:
                return piece
        for piece in self.pieces:
            polytope = face_polytope(piece.cell)
            if all(polytope.contains(v) for v in face.vertices):
                return piece
        raise InputError(f"no piece of the function is defined on {face!r}")

    def __call__(self, point):
        face = Face(frozenset([tuple(point)]), frozenset(), 0)
        return self.piece_containing(face).value(point)

    @property
    def weight_denominator(self):
        return la.lcm_of_denominators(p.denominator for p in self.pieces)

    def vertex_values(self) -> Dict[tuple, Fraction]:
        values = {}
        for piece in self.pieces:
            for v in piece.cell.vertices:
                values[v] = piece.value(v)
        return values

    def is_vertex_integral(self):
        return all(value.denominator == 1 for value in self.vertex_values().values())

    def validate(self):
        """Raises TilingError if two pieces disagree on a shared vertex."""

        seen: Dict[tuple, Fraction] = {}
        for piece in self.pieces:
            for v in piece.cell.vertices:
                value = piece.value(v)
                if seen.setdefault(v, value) != value:
                    raise TilingError(f"function is discontinuous at {v}: {seen[v]} vs {value}", datum=v)
        return self


def regular_subdivision(polytope: LatticePolytope, points: Iterable[Sequence[int]], heights: Mapping):
    """Subdivision induced by lifting points to the given heights, with the lower envelope function.

    The maximal cells are the projections of the bounded facets of the
    upper hull conv{(v, s) : s >= heights[v]}.
    """
    points = [tuple(p) for p in points]
    n = polytope.ambient_dim
    if any(not polytope.contains(p) for p in points):
        raise InputError("lifted points must lie in the polytope")
    if not set(polytope.vertices) <= set(points):
        raise InputError("lifted points must include every vertex of the polytope")
    lifted = convex_hull([p + (int(heights[p]),) for p in points], [(0,) * n + (1,)], n + 1)
    cells = []
    pieces = []
    for facet in lifted.facets:
        if facet.normal[-1] <= 0:
            continue
        projected = [v[:-1] for v in facet.face.vertices]
        cell = convex_hull(projected, ambient_dim=n).as_face()
        c = facet.normal[-1]
        linear = tuple(Fraction(-a, c) for a in facet.normal[:-1])
        cells.append(cell)
        pieces.append(AffinePiece(cell, linear, Fraction(facet.offset, c)))
    subdivision = Subdivision(polytope, cells).validate()
    logger.info("regular subdivision with %d maximal cells", len(cells))
    return subdivision, PiecewiseAffine(tuple(pieces)).validate()


def h_link(subdivision: Subdivision, cell: Face) -> UniPoly:
    """h-polynomial of the link of a cell, a polynomial of degree at most dim P - dim F."""

    if cell not in subdivision.cells:
        raise InputError(f"{cell!r} is not a cell of {subdivision!r}")
    top = subdivision.dim
    R = UniPoly.zero()
    for other in subdivision.link(cell):
        R = R + g_poly(cell, other) * UniPoly.t_minus_one(top - other.dim)
    return R.reversed(top - cell.dim)


def local_h(subdivision: Subdivision, cell: Face) -> UniPoly:
    """Local h-polynomial of a cell: alternating sum over the faces Q of P above sigma(F)."""

    ambient = subdivision.ambient
    top_face = ambient.as_face()
    lowest = subdivision.sigma(cell)
    result = UniPoly.zero()
    for face in ambient.superfaces(lowest):
        sign = (-1) ** (ambient.dim - face.dim)
        restricted = subdivision.restrict(face)
        result = result + sign * (h_link(restricted, cell) * g_poly(face, top_face, REVERSED))
    return result
