"""Newton polyhedra of a pair (P, Q), their coordinate restrictions and the facet data of the zeta formulas."""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from newton_monodromy.errors import HypothesisError, InputError
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import frame_of_points
from newton_monodromy.lattice.polytope import (
    Face,
    LatticePolyhedron,
    LatticePolytope,
    convex_hull,
    face_polytope,
    minkowski_sum,
)
from newton_monodromy.lattice.volume import mixed_volume
from newton_monodromy.newton.polynomial import SparsePolynomial

logger = logging.getLogger(__name__)

LOCAL = "local"
INFINITY = "infinity"
MODES = (LOCAL, INFINITY)


def _orthant(k):
    return [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]


def newton_polyhedron_of_support(support, k, mode=LOCAL):
    """conv(support) + R^k_+ (local) or conv({0} and support) (infinity)."""

    support = [tuple(e) for e in support]
    if mode == LOCAL:
        if not support:
            return LatticePolytope.empty(k)
        return convex_hull(support, _orthant(k), k)
    if mode == INFINITY:
        return convex_hull(support + [(0,) * k], (), k)
    raise InputError(f"unknown mode {mode!r}")


def newton_polyhedron(g, mode=LOCAL):
    return newton_polyhedron_of_support(g.support(), g.n, mode)


def coordinate_subsets(n):
    """Nonempty subsets of {0..n-1} as sorted tuples, smallest first."""

    return [s for k in range(1, n + 1) for s in itertools.combinations(range(n), k)]


@dataclass(frozen=True)
class Stratum(object):
    """The Newton polyhedra of P, Q and f restricted to the coordinate subspace R^S."""

    S: Tuple[int, ...]
    gamma_P: LatticePolyhedron
    gamma_Q: LatticePolyhedron
    gamma_f: LatticePolyhedron


class MeroPair(object):
    """The pair (P, Q) defining f = P/Q, with its Newton polyhedra in one mode."""

    def __init__(self, P, Q, mode=LOCAL):
        if P.n != Q.n:
            raise InputError(f"P has {P.n} variables but Q has {Q.n}")
        if mode not in MODES:
            raise InputError(f"unknown mode {mode!r}")
        self.P = P
        self.Q = Q
        self.mode = mode
        self._strata = {}

    def __repr__(self):
        return f"MeroPair(P={self.P}, Q={self.Q}, mode={self.mode!r})"

    @property
    def n(self):
        return self.P.n

    @functools.cached_property
    def gamma_P(self):
        return newton_polyhedron(self.P, self.mode)

    @functools.cached_property
    def gamma_Q(self):
        return newton_polyhedron(self.Q, self.mode)

    @functools.cached_property
    def gamma_f(self):
        return minkowski_sum(self.gamma_P, self.gamma_Q)

    def stratum(self, S):
        """Restriction to R^S; None when it is empty (local mode, P or Q vanishes on R^S)."""

        S = tuple(sorted(S))
        if S not in self._strata:
            k = len(S)
            gamma_P = newton_polyhedron_of_support(self.P.restricted_support(S), k, self.mode)
            gamma_Q = newton_polyhedron_of_support(self.Q.restricted_support(S), k, self.mode)
            if gamma_P.is_empty or gamma_Q.is_empty:
                self._strata[S] = None
            else:
                self._strata[S] = Stratum(S, gamma_P, gamma_Q, minkowski_sum(gamma_P, gamma_Q))
        return self._strata[S]


@dataclass(frozen=True)
class FacetDatum(object):
    """One facet term of the zeta formula on the stratum S."""

    S: Tuple[int, ...]
    facet: Face
    alpha: Tuple[int, ...]
    dP: int
    dQ: int
    d: int
    v: int
    faceP: Face
    faceQ: Face


def facet_weight(facet, faceP, faceQ, k):
    """v = sum over j of the mixed volume of j copies of faceP and k-1-j copies of faceQ."""

    frame = frame_of_points(facet.vertices, k)
    if frame.dim != k - 1:
        raise InputError(f"{facet!r} is not a facet of a {k}-dimensional polyhedron")
    polyP, polyQ = face_polytope(faceP), face_polytope(faceQ)
    return sum(mixed_volume([polyP] * j + [polyQ] * (k - 1 - j), frame) for j in range(k))


def facet_data(pair, S):
    """Facet data of the zeta formula on the stratum S (local: compact facets; infinity: facets avoiding 0)."""

    S = tuple(sorted(S))
    if not S:
        raise InputError("the coordinate subset S must be nonempty")
    stratum = pair.stratum(S)
    if stratum is None:
        return []
    k = len(S)
    data = []
    if pair.mode == INFINITY and stratum.gamma_f.dim != k:
        raise HypothesisError(
            f"the Newton polytope at infinity on S={[i + 1 for i in S]} is not {k}-dimensional", datum=S
        )
    for facet in stratum.gamma_f.facets:
        if pair.mode == LOCAL:
            if not facet.face.is_compact or any(a <= 0 for a in facet.normal):
                continue
            direction, alpha = facet.normal, facet.normal
            dP = stratum.gamma_P.support_value(direction)
            dQ = stratum.gamma_Q.support_value(direction)
        else:
            if facet.offset == 0:
                continue
            direction = facet.normal
            alpha = tuple(-a for a in direction)
            dP = -stratum.gamma_P.support_value(direction)
            dQ = -stratum.gamma_Q.support_value(direction)
        faceP = stratum.gamma_P.supporting_face(direction)
        faceQ = stratum.gamma_Q.supporting_face(direction)
        v = facet_weight(facet.face, faceP, faceQ, k)
        data.append(FacetDatum(S, facet.face, alpha, dP, dQ, dP - dQ, v, faceP, faceQ))
    logger.debug("S=%s: %d facet data", S, len(data))
    return data


def all_facet_data(pair):
    data = []
    for S in coordinate_subsets(pair.n):
        data.extend(facet_data(pair, S))
    logger.info("%d facet data over %d strata", len(data), 2 ** pair.n - 1)
    return data


def is_convenient(g, mode=LOCAL):
    """Every coordinate axis meets the support (the origin counts in local mode)."""

    for i in range(g.n):
        on_axis = [e for e in g.support() if all(e[j] == 0 for j in range(g.n) if j != i)]
        if not any(mode == LOCAL or e[i] > 0 for e in on_axis):
            return False
    return True


@dataclass(frozen=True)
class ContainmentCheck(object):
    """Outcome of the proper containment test; falsy on failure, with the violating cone as witness."""

    holds: bool
    witness: Optional[Tuple[Tuple[int, ...], ...]] = None
    detail: str = ""

    def __bool__(self):
        return self.holds


def _dual_fan_test(inner, outer, total):
    """min <u, inner> > min <u, outer> for every interior u, checked on the cones of the dual fan of total."""

    for facet in total.facets:
        r = facet.normal
        if inner.support_value(r) < outer.support_value(r):
            return ContainmentCheck(False, (r,), f"support functions reversed on the ray {r}")
    for face in total.faces:
        if face.is_empty:
            continue
        rays = tuple(f.normal for f in total.facets_containing(face))
        b = (0,) * total.ambient_dim
        for r in rays:
            b = la.add(b, r)
        if all(x > 0 for x in b) and not inner.support_value(b) > outer.support_value(b):
            return ContainmentCheck(False, rays, f"support functions agree at the interior direction {b}")
    return ContainmentCheck(True)


def _reflected(support, n):
    points = [tuple(-e for e in exponent) for exponent in support] + [(0,) * n]
    return convex_hull(points, _orthant(n), n)


def is_properly_contained(pair):
    """Local: Gamma_+(P) properly inside Gamma_+(Q). Infinity: Gamma_inf(Q) properly inside Gamma_inf(P)."""

    if pair.mode == LOCAL:
        result = _dual_fan_test(pair.gamma_P, pair.gamma_Q, pair.gamma_f)
    else:
        inner = _reflected(pair.Q.support(), pair.n)
        outer = _reflected(pair.P.support(), pair.n)
        result = _dual_fan_test(inner, outer, minkowski_sum(inner, outer))
    if not result:
        logger.info("proper containment fails: %s", result.detail)
    return result
