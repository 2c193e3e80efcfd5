"""Exact convex hulls with face lattices.

Hulls are computed by the double description method on the homogenized cone:
points are lifted to height 1, recession rays to height 0, and everything is
expressed in the lattice frame of the affine span so the cone is full
dimensional. Faces are identified by their vertex and ray sets, so the same
face reached from two different polytopes compares equal.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from newton_monodromy.config import MAX_AMBIENT_DIM
from newton_monodromy.errors import DiagnosticError, InputError, NoSupportingFaceError
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import AffineLatticeFrame, frame_of_points

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class Face(object):
    """A face given by its vertices, the recession rays it contains and its dimension."""

    vertices: FrozenSet[IntVector]
    rays: FrozenSet[IntVector] = frozenset()
    dim: int = -1

    @property
    def is_empty(self):
        return not self.vertices

    @property
    def is_compact(self):
        return not self.rays

    def __le__(self, other):
        return self.vertices <= other.vertices and self.rays <= other.rays

    def __lt__(self, other):
        return self <= other and self != other

    def sort_key(self):
        return (self.dim, sorted(self.vertices), sorted(self.rays))

    def __repr__(self):
        rays = f", rays={sorted(self.rays)}" if self.rays else ""
        return f"Face(dim={self.dim}, vertices={sorted(self.vertices)}{rays})"


EMPTY_FACE = Face(frozenset(), frozenset(), -1)


@dataclass(frozen=True)
class Facet(object):
    """Inequality <normal, x> >= offset with primitive inward normal, and the face it cuts out."""

    normal: IntVector
    offset: int
    face: Face


class LatticePolyhedron(object):
    """conv(vertices) + cone(rays), with its facet description and face lattice."""

    def __init__(self, ambient_dim, vertices, rays, dim, facets, equations, faces, frame):
        self.ambient_dim = ambient_dim
        self.vertices = tuple(sorted(vertices))
        self.rays = tuple(sorted(rays))
        self.dim = dim
        self.facets = tuple(sorted(facets, key=lambda f: (f.normal, f.offset)))
        self.equations = tuple(equations)
        self.faces = tuple(sorted(faces, key=Face.sort_key))
        self.frame = frame
        self._faces_by_key = {(f.vertices, f.rays): f for f in self.faces}

    def __repr__(self):
        kind = type(self).__name__
        rays = f", rays={list(self.rays)}" if self.rays else ""
        return f"{kind}(dim={self.dim}, vertices={list(self.vertices)}{rays})"

    def __eq__(self, other):
        if not isinstance(other, LatticePolyhedron):
            return NotImplemented
        return (self.ambient_dim, self.vertices, self.rays) == (other.ambient_dim, other.vertices, other.rays)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices, self.rays))

    @property
    def is_empty(self):
        return self.dim < 0

    @property
    def is_bounded(self):
        return not self.rays

    def as_face(self):
        if self.is_empty:
            return EMPTY_FACE
        return self._faces_by_key[(frozenset(self.vertices), frozenset(self.rays))]

    def face(self, vertices, rays=frozenset()):
        """Looks up the face with exactly these vertices and rays."""

        key = (frozenset(vertices), frozenset(rays))
        if key not in self._faces_by_key:
            raise InputError(f"no face with vertices {sorted(key[0])} in {self!r}")
        return self._faces_by_key[key]

    def faces_of_dim(self, k):
        return [f for f in self.faces if f.dim == k]

    def compact_faces(self, include_empty=False):
        return [f for f in self.faces if f.is_compact and (include_empty or not f.is_empty)]

    def subfaces(self, face):
        """Faces of the polyhedron contained in the given face, both ends included."""

        return [f for f in self.faces if f <= face]

    def superfaces(self, face):
        return [f for f in self.faces if face <= f]

    def facets_containing(self, face):
        return [f for f in self.facets if face <= f.face]

    def contains(self, point):
        if self.is_empty:
            return False
        if any(la.dot(w, point) != value for w, value in self.equations):
            return False
        return all(la.dot(f.normal, point) >= f.offset for f in self.facets)

    def relative_interior_contains(self, point):
        if not self.contains(point):
            return False
        return all(la.dot(f.normal, point) > f.offset for f in self.facets)

    def face_contains(self, face, point):
        """True iff the (rational) point lies in the given face of this polyhedron."""

        if face.is_empty or not self.contains(point):
            return False
        return all(la.dot(f.normal, point) == f.offset for f in self.facets_containing(face))

    def smallest_face_containing(self, points):
        points = list(points)
        if not points:
            return EMPTY_FACE
        for face in self.faces:
            if all(self.face_contains(face, p) for p in points):
                return face
        raise InputError(f"points {points} are not contained in {self!r}")

    def support_value(self, u):
        if self.is_empty:
            raise InputError("the empty polyhedron has no support function")
        if any(la.dot(u, r) < 0 for r in self.rays):
            raise NoSupportingFaceError(f"no supporting face: {tuple(u)} is unbounded below on {self!r}")
        return min(la.dot(u, v) for v in self.vertices)

    def supporting_face(self, u):
        if len(u) != self.ambient_dim:
            raise InputError(f"direction {tuple(u)} does not have ambient dimension {self.ambient_dim}")
        if self.is_empty:
            return EMPTY_FACE
        value = self.support_value(u)
        vertices = frozenset(v for v in self.vertices if la.dot(u, v) == value)
        rays = frozenset(r for r in self.rays if la.dot(u, r) == 0)
        return self.face(vertices, rays)

    def relative_interior_normal(self, face):
        """Sum of the facet normals of the facets containing the face (zero for the top face)."""

        normal = (0,) * self.ambient_dim
        for facet in self.facets_containing(face):
            normal = la.add(normal, facet.normal)
        return normal


class LatticePolytope(LatticePolyhedron):
    """A bounded lattice polyhedron."""

    def __init__(self, ambient_dim, vertices, dim, facets, equations, faces, frame):
        super().__init__(ambient_dim, vertices, (), dim, facets, equations, faces, frame)

    @classmethod
    def empty(cls, ambient_dim):
        return cls(ambient_dim, (), -1, (), (), (EMPTY_FACE,), None)


def _double_description(generators):
    """Irredundant inequalities a.x >= 0 of the full dimensional cone spanned by the generators."""

    size = len(generators[0])
    basis = []
    for j, g in enumerate(generators):
        if la.rank([generators[k] for k in basis] + [g]) == len(basis) + 1:
            basis.append(j)
        if len(basis) == size:
            break
    if len(basis) < size:
        raise DiagnosticError("homogenized generators do not span their frame")
    columns, det = la.adjugate([generators[k] for k in basis])
    sign = 1 if det > 0 else -1
    inequalities = [la.primitive(la.scale(sign, c)) for c in columns]
    processed = list(basis)
    for j in (k for k in range(len(generators)) if k not in basis):
        g = generators[j]
        values = [la.dot(a, g) for a in inequalities]
        negative = [i for i, v in enumerate(values) if v < 0]
        if negative:
            zeros = [frozenset(k for k in processed if la.dot(a, generators[k]) == 0) for a in inequalities]
            keep = [i for i, v in enumerate(values) if v >= 0]
            updated = [inequalities[i] for i in keep]
            for p in (i for i in keep if values[i] > 0):
                for q in negative:
                    common = zeros[p] & zeros[q]
                    if len(common) < size - 2:
                        continue
                    if any(common <= zeros[r] for r in range(len(inequalities)) if r != p and r != q):
                        continue
                    combined = la.add(la.scale(-values[q], inequalities[p]), la.scale(values[p], inequalities[q]))
                    updated.append(la.primitive(combined))
            inequalities = updated
        processed.append(j)
    return sorted(set(inequalities))


def _grade(sets):
    """Dimensions of a graded family of generator sets; the empty set gets -1."""

    dims = {}
    for s in sorted(sets, key=len):
        below = [dims[t] for t in dims if t < s]
        dims[s] = max(below) + 1 if below else -1
    return dims


def _point(p, n):
    face = Face(frozenset([p]), frozenset(), 0)
    equations = [(tuple(1 if i == j else 0 for i in range(n)), p[j]) for j in range(n)]
    return LatticePolytope(n, [p], 0, (), equations, (EMPTY_FACE, face), AffineLatticeFrame(p, (), n))


def convex_hull(points, rays=(), ambient_dim=None):
    """Irredundant V- and H-description plus face lattice of conv(points) + cone(rays)."""

    points = {tuple(int(a) for a in p) for p in points}
    rays = {la.primitive(r) for r in rays}
    if any(not any(r) for r in rays):
        raise InputError("recession rays must be nonzero")
    dims = {len(v) for v in points | rays}
    if ambient_dim is not None:
        dims.add(ambient_dim)
    if len(dims) > 1:
        raise InputError(f"dimension mismatch among hull inputs: {sorted(dims)}")
    n = dims.pop() if dims else 0
    if not points:
        if rays:
            raise InputError("a polyhedron needs at least one point")
        return LatticePolytope.empty(n)
    if n > MAX_AMBIENT_DIM:
        logger.warning("ambient dimension %d exceeds the supported %d", n, MAX_AMBIENT_DIM)

    points, rays = sorted(points), sorted(rays)
    frame = frame_of_points(points + [la.add(points[0], r) for r in rays], n)
    d = frame.dim
    if d == 0:
        return _point(points[0], n)

    generators = [frame.integer_coordinates(p) + (1,) for p in points]
    generators += [tuple(int(c) for c in frame.direction_coordinates(r)) + (0,) for r in rays]
    inequalities = _double_description(generators)
    tight = [frozenset(j for j, g in enumerate(generators) if la.dot(a, g) == 0) for a in inequalities]
    extreme = frozenset(
        j for j, g in enumerate(generators)
        if la.rank([a for a, t in zip(inequalities, tight) if j in t]) == d
    )
    is_point = [j < len(points) for j in range(len(generators))]

    def to_face(gens, dim):
        return Face(
            frozenset(points[j] for j in gens if is_point[j]),
            frozenset(rays[j - len(points)] for j in gens if not is_point[j]),
            dim,
        )

    facet_sets = [(a, t & extreme) for a, t in zip(inequalities, tight) if any(a[:-1])]
    found = {extreme}
    frontier = [extreme]
    while frontier:
        fresh = []
        for current in frontier:
            for _, s in facet_sets:
                meet = current & s
                if meet not in found:
                    found.add(meet)
                    fresh.append(meet)
        frontier = fresh
    found = {s for s in found if any(is_point[j] for j in s)} | {frozenset()}
    dims = _grade(found)
    if dims[extreme] != d:
        raise DiagnosticError(f"face lattice grading gave dimension {dims[extreme]}, expected {d}")
    faces = {s: to_face(s, dims[s]) for s in found}

    coordinate_map = frame._coordinate_map
    facets = []
    for a, s in facet_sets:
        normal = la.primitive([sum(a[i] * coordinate_map[i][k] for i in range(d)) for k in range(n)])
        anchor = next(points[j] for j in s if is_point[j])
        facets.append(Facet(normal, la.dot(normal, anchor), faces[s]))
    equations = [(w, la.dot(w, points[0])) for w in la.nullspace(frame.basis, n)] if d < n else []

    vertices = [points[j] for j in extreme if is_point[j]]
    extreme_rays = [rays[j - len(points)] for j in extreme if not is_point[j]]
    logger.debug("hull: %d points -> %d vertices, %d facets, %d faces", len(points), len(vertices), len(facets), len(faces))
    if extreme_rays:
        return LatticePolyhedron(n, vertices, extreme_rays, d, facets, equations, faces.values(), frame)
    return LatticePolytope(n, vertices, d, facets, equations, faces.values(), frame)


@functools.lru_cache(maxsize=None)
def face_polytope(face):
    return convex_hull(face.vertices, face.rays)


def supporting_face(polyhedron, u):
    """Face on which <u, .> attains its minimum; the whole polyhedron for u = 0."""

    return polyhedron.supporting_face(tuple(u))


def minkowski_sum(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise InputError(f"dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    if a.is_empty or b.is_empty:
        return LatticePolytope.empty(a.ambient_dim)
    points = {la.add(p, q) for p in a.vertices for q in b.vertices}
    return convex_hull(points, set(a.rays) | set(b.rays), a.ambient_dim)


def minkowski_decomposition(total, face, a, b):
    """The unique faces (face_a, face_b) with face = face_a + face_b."""

    normal = total.relative_interior_normal(face)
    return a.supporting_face(normal), b.supporting_face(normal)
