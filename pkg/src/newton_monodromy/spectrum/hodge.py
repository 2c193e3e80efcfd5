"""The weighted region (K, nu, S_nu), equivariant Hodge-Deligne polynomials and Jordan block counts.

Every public function here asserts the combinatorial consequences of the
hypotheses it relies on; a failed assertion raises a DiagnosticError that
names the offending datum instead of returning a wrong number.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from newton_monodromy.errors import DiagnosticError, InputError, TilingError, UnimodalityError, UnsupportedError
from newton_monodromy.ehrhart.polynomials import LaurentBiPoly, UniPoly
from newton_monodromy.ehrhart.subdivision import AffinePiece, PiecewiseAffine, Subdivision, local_h, regular_subdivision
from newton_monodromy.ehrhart.weighted import lstar, lstar_mixed
from newton_monodromy.lattice.polytope import LatticePolytope, convex_hull, face_polytope
from newton_monodromy.lattice.volume import relative_interior_points
from newton_monodromy.newton.polyhedra import MeroPair
from newton_monodromy.spectrum.cayley import CayleyCell, cayley_cells
from newton_monodromy.zeta.cyclotomic import RootOfUnity
from newton_monodromy.zeta.zeta_functions import multiplicity

logger = logging.getLogger(__name__)

VIA_LOCAL_H = "via_local_h"
VIA_WEIGHTS = "via_weights"
VIA_EXTREMES = "via_extremes"


@dataclass(frozen=True)
class WeightedRegion(object):
    """K with the function nu (0 on the P side, 1 on the Q side) and its domains of linearity S_nu."""

    K: LatticePolytope
    nu: PiecewiseAffine
    subdivision: Subdivision
    cells: Tuple[CayleyCell, ...]

    @property
    def n(self):
        return self.K.ambient_dim

    def distances(self):
        return sorted({cell.d_gamma for cell in self.cells})


@functools.lru_cache(maxsize=None)
def build_weighted_region(pair: MeroPair) -> WeightedRegion:
    """Assembles K, nu and S_nu from the Cayley cells of the compact facets and conv(Gamma_P)."""

    cells = tuple(cayley_cells(pair))
    n = pair.n
    K = convex_hull(set(pair.gamma_P.vertices) | set(pair.gamma_Q.vertices), ambient_dim=n)
    maximal, pieces = [], []
    for cell in cells:
        if cell.dim != n - 1:
            continue
        if not all(K.contains(v) for v in cell.box.vertices):
            raise TilingError(f"the box over {cell.gamma!r} leaves K", datum=cell.gamma)
        maximal.append(cell.box)
        pieces.append(cell.nu_piece())
    inner = convex_hull(pair.gamma_P.vertices, ambient_dim=n)
    if inner.dim == n:
        maximal.append(inner.as_face())
        pieces.append(AffinePiece(inner.as_face(), (Fraction(0),) * n, Fraction(0)))
    subdivision = Subdivision(K, maximal).validate()
    nu = PiecewiseAffine(tuple(pieces)).validate()
    for vertex, value in nu.vertex_values().items():
        if value not in (0, 1):
            raise TilingError(f"nu takes the value {value} at the cell vertex {vertex}", datum=vertex)
    logger.info("weighted region: K with %d vertices, %d maximal cells", len(K.vertices), len(maximal))
    return WeightedRegion(K, nu, subdivision, cells)


def lifted_cells_agree(pair: MeroPair) -> bool:
    """Cross-check: lifting V(Gamma_P) to 0 and V(Gamma_Q) to 1 reproduces the maximal cells of S_nu."""

    region = build_weighted_region(pair)
    heights = {v: 0 for v in pair.gamma_P.vertices}
    heights.update({v: 1 for v in pair.gamma_Q.vertices})
    lifted, _ = regular_subdivision(region.K, heights, heights)
    return set(lifted.maximal_cells) == set(region.subdivision.maximal_cells)


@dataclass(frozen=True)
class EHDPolynomial(object):
    """E_lambda(u, v) of the Milnor fiber for one eigenvalue, with the Hodge numbers it encodes."""

    poly: LaurentBiPoly
    n: int
    root: RootOfUnity

    def e(self, p, q):
        return self.poly.coefficient((p, q))

    def hodge_number(self, p, q):
        """h^{p,q}_lambda of the middle cohomology."""

        return (-1) ** (self.n - 1) * self.e(p, q)

    def hodge_numbers(self) -> Dict[Tuple[int, int], int]:
        return {pq: self.hodge_number(*pq) for pq, _ in self.poly.items()}

    def weight_dimension(self, w):
        """dim Gr^W_w, the sum of h^{p,q} over p + q = w."""

        return sum(h for (p, q), h in self.hodge_numbers().items() if p + q == w)

    def total_mass(self):
        return sum(abs(h) for h in self.hodge_numbers().values())

    def check_support(self):
        top = self.n - 1
        outside = [pq for pq in self.hodge_numbers() if not (0 <= pq[0] <= top and 0 <= pq[1] <= top)]
        if outside:
            raise DiagnosticError(f"E_{self.root} has terms outside [0, {top}]^2: {outside}", datum=outside)

    def check_symmetry(self):
        top = self.n - 1
        for (p, q), h in self.hodge_numbers().items():
            if self.hodge_number(top - q, top - p) != h:
                raise DiagnosticError(f"Hodge symmetry fails for E_{self.root} at ({p}, {q})", datum=(p, q))

    def __str__(self):
        return str(self.poly)


def e_lambda(pair: MeroPair, root: RootOfUnity) -> EHDPolynomial:
    """E_lambda = (-1)^(n-1) l*_lambda(K, nu; u, v) / (uv)."""

    if root.is_one:
        raise UnsupportedError("E_lambda is only available for eigenvalues other than 1")
    region = build_weighted_region(pair)
    mixed = lstar_mixed(region.K, region.nu, region.subdivision, root)
    if not mixed.divisible_by_uv():
        raise DiagnosticError(f"l*_{root}(K, nu; u, v) = {mixed} is not divisible by uv", datum=mixed)
    poly = (-1) ** (pair.n - 1) * mixed.shifted(-1, -1)
    result = EHDPolynomial(poly, pair.n, root)
    negative = {pq: h for pq, h in result.hodge_numbers().items() if h < 0}
    if negative:
        raise DiagnosticError(f"negative Hodge numbers for lambda={root}: {negative}", datum=negative)
    result.check_support()
    result.check_symmetry()
    logger.info("E_%s = %s", root, result)
    return result


def check_conjugation(pair: MeroPair, root: RootOfUnity) -> bool:
    """E_lambda(u, v) = E_conj(lambda)(v, u)."""

    return e_lambda(pair, root).poly.swapped() == e_lambda(pair, root.conjugate()).poly


@dataclass
class JordanCounts(object):
    """Numbers J_k of Jordan blocks of size k for one eigenvalue, with where each number came from."""

    root: RootOfUnity
    n: int
    counts: Dict[int, int] = field(default_factory=dict)
    provenance: Dict[int, str] = field(default_factory=dict)

    def __getitem__(self, k):
        return self.counts.get(k, 0)

    def weighted_total(self):
        return sum(k * j for k, j in self.counts.items())

    def as_rows(self) -> List[dict]:
        return [
            {"size": k, "lambda": str(self.root), "blocks": self[k], "provenance": self.provenance.get(k, "")}
            for k in range(1, self.n + 1)
        ]


def tilde_l(l: UniPoly, span: int) -> UniPoly:
    """Coefficients l~_i of l = sum_i l~_i (t^i + ... + t^(span - i)); they must be nonnegative."""

    if not l.is_palindromic(span):
        raise InputError(f"{l} is not palindromic of span {span}")
    result = UniPoly({i: l.coefficient(i) - (l.coefficient(i - 1) if i else 0) for i in range(span // 2 + 1)})
    negative = [i for i, c in result.items() if c < 0]
    if negative:
        raise UnimodalityError(f"{l} is not unimodal: decreasing at {negative}", datum=l)
    return result


def _jordan_via_local_h(pair, root) -> Dict[int, int]:
    region = build_weighted_region(pair)
    n = pair.n
    total = UniPoly.zero()
    for cell in region.cells:
        weight = lstar(cell.box, region.nu, root).evaluate(1)
        if not weight:
            continue
        tl = tilde_l(local_h(region.subdivision, cell.box), n - 1 - cell.dim)
        total = total + weight * UniPoly({cell.box.dim + 1 + 2 * i: c for i, c in tl.items()})
    stray = [e for e, _ in total.items() if not 2 <= e <= n + 1]
    if stray:
        raise DiagnosticError(f"Jordan generating polynomial {total} has degrees {stray} outside [2, n+1]", datum=total)
    return {n - k: total.coefficient(k + 2) for k in range(n)}


def _jordan_via_weights(pair, root) -> Dict[int, int]:
    E = e_lambda(pair, root)
    n = pair.n
    return {k: E.weight_dimension(n - k) - E.weight_dimension(n - k - 2) for k in range(1, n + 1)}


def jordan_paths(pair: MeroPair, root: RootOfUnity) -> Dict[str, Dict[int, int]]:
    """Block counts by size from each path, not reconciled."""

    if root.is_one:
        raise UnsupportedError("Jordan blocks are only computed for eigenvalues other than 1")
    return {VIA_LOCAL_H: _jordan_via_local_h(pair, root), VIA_WEIGHTS: _jordan_via_weights(pair, root)}


def jordan_counts(pair: MeroPair, root: RootOfUnity, method=VIA_LOCAL_H) -> JordanCounts:
    """Jordan blocks for lambda != 1, computed from local h-polynomials and from the weight grading.

    Both paths always run and must agree; method only names the one reported
    as provenance.
    """
    if method not in (VIA_LOCAL_H, VIA_WEIGHTS):
        raise InputError(f"unknown Jordan method {method!r}")

    paths = jordan_paths(pair, root)
    via_local_h, via_weights = paths[VIA_LOCAL_H], paths[VIA_WEIGHTS]
    if via_local_h != via_weights:
        raise DiagnosticError(
            f"Jordan counts disagree for lambda={root}: {via_local_h} vs {via_weights}",
            datum=(via_local_h, via_weights),
        )
    negative = {k: j for k, j in via_local_h.items() if j < 0}
    if negative:
        raise DiagnosticError(f"negative Jordan counts for lambda={root}: {negative}", datum=negative)
    result = JordanCounts(root, pair.n, dict(via_local_h), {k: method for k in via_local_h})
    expected = multiplicity(pair, root)
    if result.weighted_total() != expected:
        raise DiagnosticError(
            f"Jordan blocks for lambda={root} add up to {result.weighted_total()}, multiplicity is {expected}",
            datum=result.counts,
        )
    return result


def jordan_at_least(pair: MeroPair, root: RootOfUnity, k: int) -> int:
    """Number of Jordan blocks of size >= k, read off the weight grading."""

    if k < 1:
        raise InputError("block sizes start at 1")
    E = e_lambda(pair, root)
    n = pair.n
    value = E.weight_dimension(n - 2 + k) + E.weight_dimension(n - 1 + k)
    counts = jordan_counts(pair, root)
    expected = sum(counts[j] for j in range(k, n + 1))
    if value != expected:
        raise DiagnosticError(f"{value} blocks of size >= {k} from weights, {expected} from the counts", datum=k)
    return value


def jordan_extremes(pair: MeroPair, root: RootOfUnity, verify=True) -> Tuple[int, int]:
    """(J_n, J_{n-1}) from interior vertices and interior edges of Gamma_+(f)."""

    if root.is_one:
        raise UnsupportedError("Jordan blocks are only computed for eigenvalues other than 1")
    region = build_weighted_region(pair)
    n = pair.n
    interior = [cell for cell in region.cells if cell.s_gamma == n]
    top = sum(1 for cell in interior if cell.dim == 0 and cell.d_gamma % root.order == 0)
    second = 0
    if n >= 2:
        for cell in interior:
            e = cell.d_gamma
            if cell.dim != 1 or e % root.order:
                continue
            k = root.k * e // root.order
            heights = [cell.height(v) for v in relative_interior_points(face_polytope(cell.box))]
            second += heights.count(k) + heights.count(e - k)
    if verify:
        counts = jordan_counts(pair, root)
        if counts[n] != top or (n >= 2 and counts[n - 1] != second):
            raise DiagnosticError(
                f"extreme Jordan counts ({top}, {second}) disagree with {counts.counts} for lambda={root}",
                datum=(top, second),
            )
    return top, second
