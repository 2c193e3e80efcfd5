"""Normalized volumes, mixed volumes and lattice points of dilates."""
from __future__ import annotations

import itertools
import logging
import math

import numpy as np

from newton_monodromy.config import MAX_GRID_ENTRY
from newton_monodromy.errors import DiagnosticError, InputError
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import AffineLatticeFrame
from newton_monodromy.lattice.polytope import LatticePolytope, convex_hull

logger = logging.getLogger(__name__)


def _triangulation(polytope):
    """Pulling triangulation from the smallest vertex of every face."""

    memo = {}

    def triangulate(face):
        if face in memo:
            return memo[face]
        if face.dim == 0:
            simplices = [(next(iter(face.vertices)),)]
        else:
            apex = min(face.vertices)
            simplices = []
            for sub in polytope.subfaces(face):
                if sub.dim == face.dim - 1 and apex not in sub.vertices:
                    simplices.extend(s + (apex,) for s in triangulate(sub))
        memo[face] = simplices
        return simplices

    return triangulate(polytope.as_face())


def _full_dimensional_volume(polytope):
    """d! times the Euclidean volume of a full dimensional polytope in Z^d."""

    total = 0
    for simplex in _triangulation(polytope):
        apex = simplex[-1]
        total += abs(la.determinant([la.subtract(v, apex) for v in simplex[:-1]]))
    return total


def _frame_coordinates(polytope, frame):
    """Vertices in frame coordinates, translated so the first vertex sits at the origin."""

    origin = polytope.vertices[0]
    coords = []
    for v in polytope.vertices:
        direction = la.subtract(v, origin)
        if not frame.contains_direction(direction):
            raise InputError(f"{polytope!r} is not contained in the span of the frame")
        coords.append(tuple(int(c) for c in frame.direction_coordinates(direction)))
    return coords


def normalized_volume(polytope, frame):
    """Vol_Z: d! times the Euclidean volume measured in the frame lattice, d = frame.dim."""

    if polytope.is_empty:
        return 0
    coords = _frame_coordinates(polytope, frame)
    if polytope.dim < frame.dim:
        return 0
    if frame.dim == 0:
        return 1
    return _full_dimensional_volume(convex_hull(coords, ambient_dim=frame.dim))


def mixed_volume(polytopes, frame):
    """Normalized mixed volume by the inclusion-exclusion over subsets of the arguments."""

    d = frame.dim
    if len(polytopes) != d:
        raise InputError(f"mixed volume in a {d}-dimensional frame needs {d} arguments, got {len(polytopes)}")
    if any(p.is_empty for p in polytopes):
        return 0
    if d == 0:
        return 1
    args = [_frame_coordinates(p, frame) for p in polytopes]
    total = 0
    for k in range(1, d + 1):
        sign = (-1) ** (d - k)
        for subset in itertools.combinations(range(d), k):
            points = [(0,) * d]
            for i in subset:
                points = {la.add(p, q) for p in points for q in args[i]}
                points = convex_hull(points, ambient_dim=d).vertices
            hull = convex_hull(points, ambient_dim=d)
            if hull.dim == d:
                total += sign * _full_dimensional_volume(hull)
    if total % math.factorial(d):
        raise DiagnosticError(f"inclusion-exclusion sum {total} is not divisible by {d}!")
    result = total // math.factorial(d)
    if result < 0:
        raise DiagnosticError(f"negative mixed volume {result}")
    return result


def lattice_point_array(polytope, m):
    """Integer points of m * polytope as rows of an int64 array, sorted lexicographically."""

    n = polytope.ambient_dim
    if polytope.is_empty:
        return np.zeros((0, n), dtype=np.int64)
    if not polytope.is_bounded:
        raise InputError("lattice points need a bounded polytope")
    if m == 0:
        return np.zeros((1, n), dtype=np.int64)
    largest = max(max(abs(c) for v in polytope.vertices for c in v) * m,
                  max((abs(c) for f in polytope.facets for c in f.normal), default=0),
                  max((abs(c) for normal, _ in polytope.equations for c in normal), default=0))
    if largest >= MAX_GRID_ENTRY:
        raise InputError(f"entries up to {largest} are too large to enumerate lattice points (limit {MAX_GRID_ENTRY})")
    vertices = np.array(polytope.vertices, dtype=np.int64) * m
    low, high = vertices.min(axis=0), vertices.max(axis=0)
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(low, high)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    keep = np.ones(len(grid), dtype=bool)
    for normal, value in polytope.equations:
        keep &= grid @ np.array(normal, dtype=np.int64) == m * value
    for facet in polytope.facets:
        keep &= grid @ np.array(facet.normal, dtype=np.int64) >= m * facet.offset
    return grid[keep]


def lattice_points(polytope, m=1):
    if m < 0:
        raise InputError("dilation factor must be nonnegative")
    return [tuple(int(a) for a in row) for row in lattice_point_array(polytope, m)]


def relative_interior_points(polytope, m=1):
    points = lattice_point_array(polytope, m)
    keep = np.ones(len(points), dtype=bool)
    for facet in polytope.facets:
        keep &= points @ np.array(facet.normal, dtype=np.int64) > m * facet.offset
    return [tuple(int(a) for a in row) for row in points[keep]]
