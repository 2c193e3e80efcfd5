"""Reduced Hodge spectrum at the origin."""
from __future__ import annotations

import logging
from fractions import Fraction

from newton_monodromy.errors import DiagnosticError
from newton_monodromy.ehrhart.polynomials import PuiseuxPolynomial, UniPoly
from newton_monodromy.ehrhart.weighted import hstar
from newton_monodromy.newton.polyhedra import MeroPair
from newton_monodromy.spectrum.hodge import build_weighted_region, e_lambda
from newton_monodromy.zeta.cyclotomic import RootOfUnity, roots_dividing

logger = logging.getLogger(__name__)


def _check_spectrum(spectrum: PuiseuxPolynomial, n: int):
    for alpha in spectrum.exponents():
        if not 0 < alpha < n:
            raise DiagnosticError(f"spectral number {alpha} outside (0, {n})", datum=alpha)
        if alpha.denominator == 1:
            raise DiagnosticError(f"integral spectral number {alpha} in the reduced spectrum", datum=alpha)
    if spectrum.reflected(n) != spectrum:
        raise DiagnosticError(f"spectrum {spectrum} is not symmetric about n/2", datum=spectrum)


def reduced_spectrum(pair: MeroPair) -> PuiseuxPolynomial:
    """Sum over compact faces gamma of (-1)^(n-1-dim gamma) (1-t)^s h_gamma(t), in closed form.

    For each fractional class c = j/d_gamma the contribution of the box is
    t^(c-1) (1-t)^m h*_c(box, nu; t).
    """
    region = build_weighted_region(pair)
    n = pair.n
    total = PuiseuxPolynomial.zero()
    for cell in region.cells:
        sign = (-1) ** (n - 1 - cell.dim)
        factor = UniPoly.from_list([1, -1]) ** cell.m_gamma
        for j in range(1, cell.d_gamma):
            c = Fraction(j, cell.d_gamma)
            h = hstar(cell.box, region.nu, RootOfUnity.from_fraction(c))
            if h:
                total = total + sign * PuiseuxPolynomial((h * factor).coefficients).shifted(c - 1)
    _check_spectrum(total, n)
    logger.info("reduced spectrum: %s", total)
    return total


def spectrum_from_hodge(pair: MeroPair) -> PuiseuxPolynomial:
    """The reduced spectrum rebuilt from the Hodge numbers h^{p,q}_lambda: t^(p + c) for lambda = exp(2 pi i c)."""

    region = build_weighted_region(pair)
    roots = set()
    for d in region.distances():
        roots.update(roots_dividing(d))
    total = PuiseuxPolynomial.zero()
    for root in sorted(roots):
        for (p, _), h in e_lambda(pair, root).hodge_numbers().items():
            total = total + PuiseuxPolynomial({p + root.fraction: h})
    return total


def check_spectrum_paths(pair: MeroPair) -> bool:
    closed_form = reduced_spectrum(pair)
    from_hodge = spectrum_from_hodge(pair)
    if closed_form != from_hodge:
        raise DiagnosticError(f"spectrum {closed_form} differs from the Hodge spectrum {from_hodge}")
    return True


def lambda_mass(spectrum: PuiseuxPolynomial, root: RootOfUnity) -> int:
    """Sum of the coefficients at the exponents alpha with exp(2 pi i alpha) = lambda."""

    return sum(c for alpha, c in spectrum.items() if RootOfUnity.from_fraction(alpha) == root)
