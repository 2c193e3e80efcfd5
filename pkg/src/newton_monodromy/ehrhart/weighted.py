"""lambda-weighted Ehrhart counts and the h*, l* polynomials built from them, plain and limit mixed."""
from __future__ import annotations

import functools
import logging
import math
from collections import Counter
from typing import Union

import numpy as np

from newton_monodromy.errors import DiagnosticError, InputError, PolynomialityError
from newton_monodromy.ehrhart.polynomials import LaurentBiPoly, UniPoly, binomial_series_coefficient
from newton_monodromy.ehrhart.posets import REVERSED, g_poly
from newton_monodromy.ehrhart.subdivision import AffinePiece, PiecewiseAffine, Subdivision, h_link, local_h
from newton_monodromy.lattice.polytope import Face, LatticePolytope, face_polytope
from newton_monodromy.lattice.volume import lattice_point_array
from newton_monodromy.zeta.cyclotomic import RootOfUnity

logger = logging.getLogger(__name__)

CellLike = Union[Face, LatticePolytope]


def _as_face(cell: CellLike) -> Face:
    return cell.as_face() if isinstance(cell, LatticePolytope) else cell


@functools.lru_cache(maxsize=None)
def _weight_classes(face: Face, piece: AffinePiece, m: int) -> Counter:
    """Residues of denominator * m * nu(v / m) modulo the denominator, over v in mP."""

    denominator = piece.denominator
    points = lattice_point_array(face_polytope(face), m).astype(object)
    linear = np.array([int(a * denominator) for a in piece.linear], dtype=object)
    offset = int(piece.constant * denominator) * m
    residues = (points @ linear + offset) % denominator
    return Counter(int(r) for r in residues)


def phi_weighted(P: CellLike, nu: PiecewiseAffine, root: RootOfUnity, m: int) -> int:
    """Number of v in mP with m * nu(v / m) congruent to root.k / root.d modulo 1."""

    if m < 0:
        raise InputError("dilation factor must be nonnegative")
    face = _as_face(P)
    if m == 0 or face.is_empty:
        return int(root.is_one) if m == 0 else 0
    piece = nu.piece_containing(face)
    denominator = piece.denominator
    if denominator % root.order:
        return 0
    return _weight_classes(face, piece, m).get(root.k * denominator // root.order, 0)


@functools.lru_cache(maxsize=None)
def _hstar(face: Face, piece: AffinePiece, root: RootOfUnity) -> UniPoly:
    D = face.dim
    nu = PiecewiseAffine((piece,))
    counts = [phi_weighted(face, nu, root, m) for m in range(D + 2)]
    numerator = UniPoly({
        j: sum((-1) ** (j - i) * math.comb(D + 1, j - i) * counts[i] for i in range(j + 1))
        for j in range(D + 2)
    })
    for m in range(D + 2, 2 * D + 4):
        predicted = binomial_series_coefficient(numerator, D, m)
        actual = phi_weighted(face, nu, root, m)
        if predicted != actual:
            raise PolynomialityError(
                f"nu not vertex-integral / polynomiality violated on {face!r}: "
                f"predicted {predicted} points of weight {root} at m={m}, counted {actual}",
                datum=(face, root, m),
            )
    return numerator


def hstar(P: CellLike, nu: PiecewiseAffine, root: RootOfUnity) -> UniPoly:
    """h*_lambda(P, nu; u): numerator of the generating series of phi_weighted over m >= 0."""

    face = _as_face(P)
    if face.is_empty:
        return UniPoly.one() if root.is_one else UniPoly.zero()
    piece = nu.piece_containing(face)
    if piece.denominator % root.order:
        return UniPoly.zero()
    return _hstar(face, piece, root)


def lstar(P: CellLike, nu: PiecewiseAffine, root: RootOfUnity) -> UniPoly:
    """l*_lambda(P, nu; u): alternating sum of hstar over all faces Q of P, weighted by g([Q, P]*)."""

    face = _as_face(P)
    if face.is_empty:
        return UniPoly.one() if root.is_one else UniPoly.zero()
    result = UniPoly.zero()
    for sub in face_polytope(face).faces:
        h = hstar(sub, nu, root)
        if h:
            result = result + (-1) ** (face.dim - sub.dim) * (h * g_poly(sub, face, REVERSED))
    return result


def _mixed(P, nu, subdivision, root, cell_factor) -> LaurentBiPoly:
    if subdivision.ambient.as_face() != _as_face(P):
        raise InputError("the subdivision does not subdivide the given polytope")
    total = LaurentBiPoly.zero()
    for cell in subdivision.cells:
        star = lstar(cell, nu, root)
        if not star:
            continue
        factor = cell_factor(subdivision, cell)
        # v^(dim F + 1) * l*(F; u / v) * factor(uv)
        term = LaurentBiPoly({(i, cell.dim + 1 - i): c for i, c in star.items()}) * factor.substitute(1, 1)
        total = total + term
    if total.has_negative_degrees():
        raise DiagnosticError(f"limit mixed polynomial {total} has negative degrees", datum=total)
    return total


def hstar_mixed(P: CellLike, nu: PiecewiseAffine, subdivision: Subdivision, root: RootOfUnity) -> LaurentBiPoly:
    """Limit mixed h*-polynomial: sum over cells F of v^(dim F+1) l*(F; u/v) h(LK(F); uv)."""

    return _mixed(P, nu, subdivision, root, h_link)


def lstar_mixed(P: CellLike, nu: PiecewiseAffine, subdivision: Subdivision, root: RootOfUnity) -> LaurentBiPoly:
    """Local limit mixed h*-polynomial: as hstar_mixed with the local h-polynomial of each cell."""

    result = _mixed(P, nu, subdivision, root, local_h)
    logger.debug("l*_%s mixed = %s", root, result)
    return result


def ehrhart_hstar(P: CellLike) -> UniPoly:
    """Classical h*-polynomial of a lattice polytope."""

    polytope = face_polytope(_as_face(P)) if isinstance(P, Face) else P
    return hstar(P, PiecewiseAffine.zero(polytope), RootOfUnity.one())
