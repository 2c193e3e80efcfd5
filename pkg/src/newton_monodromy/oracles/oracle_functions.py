"""Slow brute-force references for the test suite and the ``check`` command.

Nothing in here imports the engine: polytopes are handled as bare point
lists, cut out by every valid halfspace the points suggest, and counted on
a numpy grid. Only small inputs (ambient dimension <= 3) are supported.
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy

from newton_monodromy.config import ORACLE_MAX_DIM, SPECTRUM_BOUND_PAD

logger = logging.getLogger(__name__)


@dataclass
class OracleReport(object):
    """One quantity computed twice: by an oracle and by the engine."""

    quantity: str
    oracle_value: object
    engine_value: object
    agree: bool

    @classmethod
    def compare(cls, quantity, oracle_value, engine_value):
        return cls(quantity, oracle_value, engine_value, oracle_value == engine_value)


def _ambient(points):
    n = len(points[0])
    if n > ORACLE_MAX_DIM:
        raise ValueError(f"oracles only handle ambient dimension <= {ORACLE_MAX_DIM}, got {n}")
    return n


def _primitive(vector):
    g = reduce(math.gcd, (abs(int(a)) for a in vector), 0)
    if g == 0:
        return None
    return tuple(int(a) // g for a in vector)


def _perpendicular(vectors, n):
    """Primitive integer normal to n - 1 vectors in Z^n, None when they are dependent."""

    if n == 1:
        return (1,)
    if n == 2:
        (u,) = vectors
        return _primitive((-u[1], u[0]))
    u, v = vectors
    return _primitive(np.cross(np.array(u, dtype=np.int64), np.array(v, dtype=np.int64)))


def _rank(vectors, n):
    if not vectors:
        return 0
    return int(np.linalg.matrix_rank(np.array(vectors, dtype=np.int64).reshape(-1, n)))


def _differences(points):
    return [tuple(q - p for p, q in zip(a, b)) for a, b in itertools.combinations(points, 2)]


def _equation_normals(directions, n):
    """Integer basis of the vectors orthogonal to every direction."""

    directions = [d for d in directions if any(d)]
    if not directions:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    normals = []
    for vector in sympy.Matrix(directions).nullspace():
        denominator = reduce(sympy.ilcm, [sympy.fraction(a)[1] for a in vector], 1)
        normals.append(_primitive([int(a * denominator) for a in vector]))
    return normals


class _MinkowskiSum(object):
    """sum_i w_i conv(points_i), described by equations and every halfspace normal to n - 1 edge directions.

    Edges of a Minkowski sum are parallel to edges of its summands, so the
    pairwise differences of each summand's points already contain every
    facet direction; the extra candidate halfspaces are valid but redundant.
    """

    def __init__(self, summands, n):
        self.summands = [list(points) for points in summands]
        self.n = n
        directions = [d for points in self.summands for d in _differences(points) if any(d)]
        self.dim = _rank(directions, n)
        self.equation_normals = _equation_normals(directions, n)
        generators = list(dict.fromkeys(_primitive(d) for d in directions)) + self.equation_normals
        normals = set()
        for chosen in itertools.combinations(generators, n - 1):
            a = _perpendicular(chosen, n)
            if a is not None:
                normals.update({a, tuple(-x for x in a)})
        self.normals = sorted(normals)

    def _support(self, a, weights):
        return sum(w * min(sum(x * y for x, y in zip(a, p)) for p in points) for w, points in zip(weights, self.summands))

    def count(self, weights):
        """Number of lattice points of sum_i w_i conv(points_i)."""

        if not any(weights):
            return 1
        low = sum(w * np.array(points, dtype=np.int64).min(axis=0) for w, points in zip(weights, self.summands))
        high = sum(w * np.array(points, dtype=np.int64).max(axis=0) for w, points in zip(weights, self.summands))
        return int(len(self.points(weights, low, high)))

    def points(self, weights, low=None, high=None):
        if low is None:
            low = sum(w * np.array(points, dtype=np.int64).min(axis=0) for w, points in zip(weights, self.summands))
            high = sum(w * np.array(points, dtype=np.int64).max(axis=0) for w, points in zip(weights, self.summands))
        axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(low, high)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, self.n)
        keep = np.ones(len(grid), dtype=bool)
        for a in self.equation_normals:
            keep &= grid @ np.array(a, dtype=np.int64) == self._support(a, weights)
        for a in self.normals:
            keep &= grid @ np.array(a, dtype=np.int64) >= self._support(a, weights)
        return grid[keep]


def volume_by_dilation(points):
    """Normalized volume of conv(points) in its own lattice: d! times the leading Ehrhart coefficient."""

    points = [tuple(int(a) for a in p) for p in points]
    n = _ambient(points)
    polytope = _MinkowskiSum([points], n)
    d = polytope.dim
    if d == 0:
        return 1
    m = sympy.Symbol("m")
    ehrhart = sympy.interpolate([(k, polytope.count([k])) for k in range(d + 1)], m)
    return int(sympy.Poly(ehrhart, m).LC() * math.factorial(d))


def mixed_volume_by_interpolation(polytopes):
    """Normalized mixed volume of d point sets in Z^d.

    The lattice point count of w_1 P_1 + ... + w_d P_d is a polynomial of
    degree d in the weights; its w_1...w_d coefficient is the mixed volume,
    and the d-fold first difference at 0 isolates exactly that coefficient.
    """
    polytopes = [[tuple(int(a) for a in p) for p in points] for points in polytopes]
    d = len(polytopes)
    n = _ambient(polytopes[0])
    if d != n:
        raise ValueError(f"mixed volume in Z^{n} needs {n} point sets, got {d}")
    total = 0
    for size in range(d + 1):
        for subset in itertools.combinations(range(d), size):
            chosen = [polytopes[i] for i in subset]
            count = _MinkowskiSum(chosen, n).count([1] * size) if chosen else 1
            total += (-1) ** (d - size) * count
    return total


def _lattice_length(points):
    xs = sorted(points)
    return math.gcd(xs[-1][0] - xs[0][0], xs[-1][1] - xs[0][1])


def zeta_staircase_2d(p_support, q_support):
    """Local zeta function of P/Q in two variables as {d: exponent}, read off the staircase of P + Q.

    Compact edges are found by sweeping the primitive positive normals
    through every pair of sum points; the axis strata contribute one factor each.
    """
    p_support = [tuple(p) for p in p_support]
    q_support = [tuple(q) for q in q_support]
    if len(p_support[0]) != 2:
        raise ValueError("the staircase oracle works in two variables")
    exponents = Counter()
    for axis in range(2):
        p_axis = [p[axis] for p in p_support if p[1 - axis] == 0]
        q_axis = [q[axis] for q in q_support if q[1 - axis] == 0]
        if p_axis and q_axis and min(p_axis) > min(q_axis):
            exponents[min(p_axis) - min(q_axis)] += 1
    sums = {(p[0] + q[0], p[1] + q[1]) for p in p_support for q in q_support}
    normals = set()
    for a, b in itertools.combinations(sorted(sums), 2):
        normal = _primitive((abs(b[1] - a[1]), abs(b[0] - a[0])))
        if normal and normal[0] > 0 and normal[1] > 0 and (b[0] - a[0]) * (b[1] - a[1]) < 0:
            normals.add(normal)

    def face(support, alpha):
        low = min(alpha[0] * p[0] + alpha[1] * p[1] for p in support)
        return low, [p for p in support if alpha[0] * p[0] + alpha[1] * p[1] == low]

    for alpha in sorted(normals):
        _, edge = face(sums, alpha)
        if len(edge) < 2:
            continue
        dP, faceP = face(p_support, alpha)
        dQ, faceQ = face(q_support, alpha)
        if dP > dQ:
            exponents[dP - dQ] -= _lattice_length(faceP) + _lattice_length(faceQ)
    return {d: e for d, e in sorted(exponents.items()) if e}


def _minimal_points(points):
    return [p for p in points if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in points)]


def _compact_faces(p_support, q_support, n):
    """Compact faces of conv(supp P + supp Q) + R^n_+ as (weight vector, dimension) pairs."""

    points = _minimal_points(sorted({tuple(a + b for a, b in zip(p, q)) for p in p_support for q in q_support}))
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    array = np.array(points, dtype=np.int64)
    facets = {}
    for k in range(1, n + 1):
        for combo in itertools.combinations(points, k):
            diffs = [tuple(b - a for a, b in zip(combo[0], c)) for c in combo[1:]]
            for rays in itertools.combinations(range(n), n - k):
                a = _perpendicular(diffs + [units[i] for i in rays], n)
                if a is None:
                    continue
                if all(x <= 0 for x in a):
                    a = tuple(-x for x in a)
                if any(x < 0 for x in a) or a in facets:
                    continue
                values = array @ np.array(a, dtype=np.int64)
                on = [points[i] for i in np.flatnonzero(values == values.min())]
                zero = frozenset(i for i in range(n) if a[i] == 0)
                if _rank(_differences(on) + [units[i] for i in zero], n) == n - 1:
                    facets[a] = (frozenset(on), zero)
    faces = set(facets.values())
    frontier = list(faces)
    while frontier:
        found = []
        for on, zero in frontier:
            for other_on, other_zero in facets.values():
                face = (on & other_on, zero & other_zero)
                if face[0] and face not in faces:
                    faces.add(face)
                    found.append(face)
        frontier = found
    result = []
    for on, zero in faces:
        if zero:
            continue
        b = tuple(sum(a[i] for a, (f_on, _) in facets.items() if on <= f_on) for i in range(n))
        result.append((b, _rank(_differences(sorted(on)), n)))
    return sorted(result)


def _argmin(support, b):
    values = [sum(x * y for x, y in zip(b, p)) for p in support]
    return [p for p, v in zip(support, values) if v == min(values)]


def _weight_functional(faceP, faceQ, n):
    """Integer a and denominator L with nu(x) = a.(x - p0) / L on the affine span of the box."""

    p0, q0 = faceP[0], faceQ[0]
    directions = [d for d in _differences(faceP) + _differences(faceQ) if any(d)]
    rows = list(sympy.Matrix(directions).rowspace()) if directions else []
    w = sympy.Matrix([[b - a for a, b in zip(p0, q0)]])
    M = sympy.Matrix.vstack(*rows, w)
    target = sympy.zeros(M.rows, 1)
    target[M.rows - 1] = 1
    ell = M.T * (M * M.T).inv() * target
    L = reduce(sympy.ilcm, [sympy.fraction(x)[1] for x in ell], 1)
    return tuple(int(x * L) for x in ell), int(L), p0


def spectrum_by_definition(p_support, q_support, bound=None):
    """Reduced spectrum as {exponent: coefficient}, summing (-1)^(n-1-dim) (1-t)^s h(t) over compact faces.

    Each h(t) is evaluated term by term from weighted lattice point counts
    of the dilated boxes, for every exponent below the bound; products are
    truncated there too, which loses nothing as long as bound >= n + 2.
    """
    p_support = [tuple(int(a) for a in p) for p in p_support]
    q_support = [tuple(int(a) for a in q) for q in q_support]
    n = _ambient(p_support)
    bound = n + SPECTRUM_BOUND_PAD if bound is None else bound
    if bound < n + 2:
        raise ValueError(f"the exponent bound must be at least n + 2 = {n + 2}")
    total = Counter()
    for b, dim in _compact_faces(p_support, q_support, n):
        faceP, faceQ = _argmin(p_support, b), _argmin(q_support, b)
        box = _MinkowskiSum([faceP + faceQ], n)
        a, L, p0 = _weight_functional(faceP, faceQ, n)
        s = sum(1 for i in range(n) if any(p[i] for p in faceP + faceQ))
        phi = {}
        for m in range(bound + 1):
            grid = box.points([m])
            weights = (grid - m * np.array(p0, dtype=np.int64)) @ np.array(a, dtype=np.int64)
            phi[m] = Counter(Fraction(int(r), L) for r in np.mod(weights, L))
        h = Counter()
        for c in {c for counts in phi.values() for c in counts if c}:
            for k in range(bound):
                h[k + c] += phi[k + 1][c] - phi[k][c]
        sign = (-1) ** (n - 1 - dim)
        for beta, coefficient in h.items():
            for j in range(s + 1):
                if beta + j < bound:
                    total[beta + j] += sign * (-1) ** j * math.comb(s, j) * coefficient
    spectrum = {alpha: c for alpha, c in sorted(total.items()) if c}
    logger.debug("spectrum by definition: %s", spectrum)
    return spectrum
