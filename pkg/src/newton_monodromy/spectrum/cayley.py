"""Cayley cells: the polytopes conv(gamma(P) and gamma(Q)) over the compact faces gamma of Gamma_+(f)."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from newton_monodromy.errors import DiagnosticError, HypothesisError, InputError
from newton_monodromy.ehrhart.subdivision import AffinePiece
from newton_monodromy.lattice import linear_algebra as la
from newton_monodromy.lattice.frame import AffineLatticeFrame, lattice_frame
from newton_monodromy.lattice.polytope import Face, convex_hull
from newton_monodromy.newton.polyhedra import LOCAL, MeroPair, is_convenient, is_properly_contained

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CayleyCell(object):
    """One compact face gamma with its box, lattice distance d and coordinate data s, m."""

    gamma: Face
    faceP: Face
    faceQ: Face
    box: Face
    d_gamma: int
    s_gamma: int
    m_gamma: int
    alpha: Tuple[int, ...]
    frame: AffineLatticeFrame
    q_level: int

    @property
    def dim(self):
        return self.gamma.dim

    def height(self, point) -> int:
        """Lattice height of a point of the box above the gamma(Q) side."""

        return la.dot(self.alpha, self.frame.integer_coordinates(point)) - self.q_level

    def nu_piece(self) -> AffinePiece:
        """nu = 1 - height / d as an affine function on the box: 0 on gamma(P), 1 on gamma(Q)."""

        w, c = self.frame.pullback(self.alpha)
        d = self.d_gamma
        linear = tuple(-a / d for a in w)
        return AffinePiece(self.box, linear, 1 - (c - self.q_level) / Fraction(d))


def check_hypotheses(pair: MeroPair):
    """Local mode, both polynomials convenient and Gamma_+(P) properly inside Gamma_+(Q)."""

    if pair.mode != LOCAL:
        raise InputError("Cayley cells are defined for pairs in local mode")
    for name, g in (("P", pair.P), ("Q", pair.Q)):
        if not is_convenient(g):
            raise HypothesisError(f"{name} = {g} is not convenient", datum=name)
    containment = is_properly_contained(pair)
    if not containment:
        raise HypothesisError(f"proper containment fails: {containment.detail}", datum=containment.witness)


def coordinate_support(face: Face) -> int:
    """Dimension of the smallest coordinate subspace containing the face."""

    n = len(next(iter(face.vertices)))
    return sum(1 for i in range(n) if any(v[i] for v in face.vertices))


def cayley_cell(pair: MeroPair, gamma: Face) -> CayleyCell:
    b = pair.gamma_f.relative_interior_normal(gamma)
    faceP = pair.gamma_P.supporting_face(b)
    faceQ = pair.gamma_Q.supporting_face(b)
    box = convex_hull(faceP.vertices | faceQ.vertices).as_face()
    if box.dim != gamma.dim + 1:
        raise HypothesisError(
            f"the box over {gamma!r} has dimension {box.dim}, expected {gamma.dim + 1}", datum=gamma
        )
    frame = lattice_frame(box)
    p0, q0 = min(faceP.vertices), min(faceQ.vertices)
    directions = [la.subtract(p, p0) for p in faceP.vertices] + [la.subtract(q, q0) for q in faceQ.vertices]
    rows = [tuple(int(c) for c in frame.direction_coordinates(v)) for v in directions if any(v)]
    kernel = la.nullspace(rows, frame.dim)
    if len(kernel) != 1:
        raise DiagnosticError(f"no unique height functional on the box over {gamma!r}", datum=gamma)
    alpha = kernel[0]
    p_level = la.dot(alpha, frame.integer_coordinates(p0))
    q_level = la.dot(alpha, frame.integer_coordinates(q0))
    if p_level < q_level:
        alpha, p_level, q_level = tuple(-a for a in alpha), -p_level, -q_level
    s = coordinate_support(gamma)
    m = s - gamma.dim - 1
    if m < 0:
        raise DiagnosticError(f"m_gamma = {m} < 0 for {gamma!r}", datum=gamma)
    return CayleyCell(gamma, faceP, faceQ, box, p_level - q_level, s, m, alpha, frame, q_level)


def cayley_cells(pair: MeroPair) -> List[CayleyCell]:
    """One Cayley cell per compact face of Gamma_+(f), lowest dimension first."""

    check_hypotheses(pair)
    cells = [cayley_cell(pair, gamma) for gamma in pair.gamma_f.compact_faces()]
    logger.info("%d Cayley cells", len(cells))
    return cells
