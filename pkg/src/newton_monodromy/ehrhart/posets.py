"""g-polynomials of intervals in face lattices of lattice polytopes."""
from __future__ import annotations

import functools
import logging

from newton_monodromy.errors import PosetError
from newton_monodromy.ehrhart.polynomials import UniPoly
from newton_monodromy.lattice.polytope import Face, face_polytope

logger = logging.getLogger(__name__)

FORWARD = "forward"
REVERSED = "reversed"


def interval(lower: Face, upper: Face):
    """Faces G of upper with lower <= G <= upper."""

    if not lower <= upper:
        raise PosetError(f"{lower!r} is not a face of {upper!r}")
    return [G for G in face_polytope(upper).faces if lower <= G]


@functools.lru_cache(maxsize=None)
def g_poly(lower: Face, upper: Face, orientation: str = FORWARD) -> UniPoly:
    """g-polynomial of the interval [lower, upper], or of its dual when orientation is REVERSED.

    The recursion t^d g(1/t) - g(t) = H(t) fixes the coefficients of g up to
    degree (d - 1) // 2, read off from the top of H; the remaining coefficients
    of the identity are then checked.
    """
    if orientation not in (FORWARD, REVERSED):
        raise ValueError(f"unknown orientation {orientation!r}")
    faces = interval(lower, upper)
    if lower == upper:
        return UniPoly.one()
    d = upper.dim - lower.dim
    H = UniPoly.zero()
    for G in faces:
        if orientation == FORWARD and G != upper:
            H = H + g_poly(lower, G, FORWARD) * UniPoly.t_minus_one(upper.dim - G.dim)
        elif orientation == REVERSED and G != lower:
            H = H + g_poly(G, upper, REVERSED) * UniPoly.t_minus_one(G.dim - lower.dim)
    g = UniPoly({i: H.coefficient(d - i) for i in range((d - 1) // 2 + 1)})
    if g.reversed(d) - g != H:
        raise PosetError(
            f"interval [{lower!r}, {upper!r}] is not Eulerian: residual {g.reversed(d) - g - H}"
        )
    logger.debug("g[%s, %s] (%s) = %s", lower.dim, upper.dim, orientation, g)
    return g
