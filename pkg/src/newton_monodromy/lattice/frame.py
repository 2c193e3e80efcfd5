from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from newton_monodromy.errors import DiagnosticError, InputError
from newton_monodromy.lattice import linear_algebra as la

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class AffineLatticeFrame(object):
    """A base point plus a lattice basis of Z^n intersected with a linear subspace L."""

    base_point: IntVector
    basis: Tuple[IntVector, ...]
    ambient_dim: int

    @property
    def dim(self):
        return len(self.basis)

    @classmethod
    def standard(cls, n, base_point=None):
        base = tuple(base_point) if base_point is not None else (0,) * n
        basis = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
        return cls(base, basis, n)

    @functools.cached_property
    def _coordinate_map(self):
        return la.coordinate_map(self.basis)

    def direction_coordinates(self, vector):
        """Coordinates of a direction vector in the basis; InputError if it leaves L."""

        if len(vector) != self.ambient_dim:
            raise InputError(f"vector {tuple(vector)} does not have ambient dimension {self.ambient_dim}")
        coords = tuple(la.dot(row, vector) for row in self._coordinate_map)
        rebuilt = [sum(c * b[i] for c, b in zip(coords, self.basis)) for i in range(self.ambient_dim)]
        if any(Fraction(r) != Fraction(v) for r, v in zip(rebuilt, vector)):
            raise InputError(f"vector {tuple(vector)} is not in the span of the frame")
        return tuple(Fraction(c) for c in coords)

    def coordinates(self, point):
        return self.direction_coordinates([Fraction(p) - b for p, b in zip(point, self.base_point)])

    def integer_coordinates(self, point):
        coords = self.coordinates(point)
        if any(c.denominator != 1 for c in coords):
            raise InputError(f"point {tuple(point)} is not a lattice point of the frame")
        return tuple(int(c) for c in coords)

    def contains_direction(self, vector):
        try:
            self.direction_coordinates(vector)
        except InputError:
            return False
        return True

    def pullback(self, functional):
        """(w, c) with <functional, coordinates(x)> = <w, x> + c for every x in the affine span."""

        w = tuple(
            sum(Fraction(a) * row[i] for a, row in zip(functional, self._coordinate_map))
            for i in range(self.ambient_dim)
        )
        return w, -la.dot(w, self.base_point)

    def point(self, coords):
        return tuple(b + sum(c * v[i] for c, v in zip(coords, self.basis)) for i, b in enumerate(self.base_point))


def _oriented(vector):
    for entry in reversed(vector):
        if entry:
            return vector if entry > 0 else tuple(-a for a in vector)
    return vector


def frame_of_points(points, n, verify=False):
    """Frame of the affine lattice spanned by integer points; the base point is the smallest one."""

    points = sorted(set(tuple(p) for p in points))
    if not points:
        raise InputError("cannot build a lattice frame of the empty set")
    base = points[0]
    basis = la.saturated_basis([la.subtract(p, base) for p in points[1:]], n)
    if len(basis) < n:
        basis = [_oriented(b) for b in basis]
    if verify and not la.is_saturated(basis):
        raise DiagnosticError(f"basis {basis} does not generate a saturated lattice")
    return AffineLatticeFrame(base, tuple(basis), n)


def lattice_frame(face):
    """Frame of Z^n intersected with the affine span of a nonempty face (or polytope, or point set)."""

    vertices = getattr(face, "vertices", face)
    vertices = list(vertices)
    if not vertices:
        raise InputError("lattice_frame needs a nonempty face")
    n = len(vertices[0])
    frame = frame_of_points(vertices, n, verify=True)
    logger.debug("frame of %d points: dim %d basis %s", len(vertices), frame.dim, frame.basis)
    return frame
