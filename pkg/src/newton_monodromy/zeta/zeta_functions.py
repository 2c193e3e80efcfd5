"""Monodromy zeta functions from Newton data, eigenvalue multiplicities, Lefschetz numbers and BKK counts."""
from __future__ import annotations

import itertools
import logging
from typing import Dict, Sequence

from newton_monodromy.errors import DiagnosticError, HypothesisError, InputError, UnsupportedError
from newton_monodromy.lattice.frame import AffineLatticeFrame
from newton_monodromy.lattice.polytope import LatticePolytope, convex_hull
from newton_monodromy.lattice.volume import mixed_volume
from newton_monodromy.newton.polyhedra import (
    INFINITY,
    LOCAL,
    MeroPair,
    all_facet_data,
    coordinate_subsets,
    is_convenient,
)
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity, roots_of_order

logger = logging.getLogger(__name__)


def _facet_factors(pair):
    pairs = []
    for datum in all_facet_data(pair):
        if datum.d > 0 and datum.v:
            pairs.append((datum.d, (-1) ** (len(datum.S) - 1) * datum.v))
    return CyclotomicProduct.from_pairs(pairs)


def zeta_local(pair: MeroPair) -> CyclotomicProduct:
    """Zeta function of the Milnor monodromy at the origin."""

    if pair.mode != LOCAL:
        raise InputError("zeta_local needs a pair in local mode")
    zeta = _facet_factors(pair)
    logger.info("local zeta: %s", zeta)
    return zeta


def _check_multiplicity_hypotheses(pair):
    if pair.mode == LOCAL and not (is_convenient(pair.P) and is_convenient(pair.Q)):
        raise HypothesisError("multiplicities need P and Q convenient", datum=(str(pair.P), str(pair.Q)))


def multiplicity(pair: MeroPair, root: RootOfUnity) -> int:
    """Multiplicity of the eigenvalue root (root != 1) in the middle degree monodromy."""

    if root.is_one:
        raise UnsupportedError("the multiplicity of the eigenvalue 1 is not covered")
    _check_multiplicity_hypotheses(pair)
    value = 0
    for datum in all_facet_data(pair):
        if datum.d > 0 and datum.d % root.order == 0:
            value += (-1) ** (pair.n - len(datum.S)) * datum.v
    if value < 0:
        raise DiagnosticError(
            f"negative multiplicity {value} for lambda={root}: an asserted hypothesis fails", datum=root
        )
    return value


def eigenvalue_multiplicities(pair: MeroPair) -> Dict[RootOfUnity, int]:
    """Every eigenvalue other than 1 with a nonzero multiplicity."""

    _check_multiplicity_hypotheses(pair)
    orders = set()
    for datum in all_facet_data(pair):
        if datum.d > 1:
            orders.update(k for k in range(2, datum.d + 1) if datum.d % k == 0)
    result = {}
    for order in sorted(orders):
        for root in roots_of_order(order):
            value = multiplicity(pair, root)
            if value:
                result[root] = value
    return result


def euler_characteristic(zeta: CyclotomicProduct) -> int:
    """Euler characteristic of the Milnor fiber, the degree of its zeta function."""

    return zeta.degree()


def lefschetz(pair: MeroPair, m: int) -> int:
    """Lefschetz number of the m-th power of the monodromy: sum over d | m of d * e_d."""

    if m < 1:
        raise InputError("Lefschetz numbers are indexed by m >= 1")
    return zeta_local(pair).divisor_sum(m)


def chi_bkk(polytopes: Sequence[LatticePolytope], s: int) -> int:
    """Euler characteristic of a nondegenerate complete intersection in (C*)^s."""

    p = len(polytopes)
    if p > s:
        logger.warning("BKK with %d equations in %d variables: the intersection is empty", p, s)
        return 0
    if any(poly.is_empty for poly in polytopes):
        raise InputError("BKK needs nonempty Newton polytopes")
    frame = AffineLatticeFrame.standard(s)
    total = 0
    for split in itertools.product(range(1, s + 1), repeat=p):
        if sum(split) != s:
            continue
        args = [poly for poly, count in zip(polytopes, split) for _ in range(count)]
        total += mixed_volume(args, frame)
    return (-1) ** (s - p) * total


def _polytope(support, k):
    """Newton polytope of a restricted support, None when the restriction vanishes."""

    return convex_hull(support, ambient_dim=k) if support else None


def _torus_zero_locus(polytopes, s):
    """chi of the common zero set of the given supports inside the torus (C*)^s."""

    if len(polytopes) > s:
        return 0
    return chi_bkk(polytopes, s)


def chi_complement(pair: MeroPair) -> int:
    """Euler characteristic of Q^{-1}(0) minus P^{-1}(0), stratified by coordinate tori."""

    if pair.mode != INFINITY:
        raise InputError("chi_complement belongs to the zeta function at infinity")
    if pair.Q.is_constant:
        return 0
    n = pair.n
    total = 0
    for S in [()] + coordinate_subsets(n):
        k = len(S)
        q_support = pair.Q.restricted_support(S)
        p_support = pair.P.restricted_support(S)
        if k == 0:
            q_vanishes = not q_support
            p_vanishes = not p_support
            total += int(q_vanishes) - int(q_vanishes and p_vanishes)
            continue
        np_Q = _polytope(q_support, k)
        np_P = _polytope(p_support, k)
        if np_Q is None:
            # the whole torus lies in Q = 0; chi of a positive dimensional torus is 0
            total += 0 - (0 if np_P is None else _torus_zero_locus([np_P], k))
        elif np_P is None:
            continue
        else:
            total += _torus_zero_locus([np_Q], k) - _torus_zero_locus([np_P, np_Q], k)
    logger.info("chi(Q=0 minus P=0) = %d", total)
    return total


def zeta_infinity(pair: MeroPair) -> CyclotomicProduct:
    """Zeta function of the monodromy at infinity."""

    if pair.mode != INFINITY:
        raise InputError("zeta_infinity needs a pair in infinity mode")
    zeta = _facet_factors(pair) * CyclotomicProduct.from_exponents({1: chi_complement(pair)})
    logger.info("zeta at infinity: %s", zeta)
    return zeta
