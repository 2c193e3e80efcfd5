"""Sparse polynomials with exact rational coefficients.

Only supports matter for the invariants computed here; coefficients are kept
so inputs can be echoed back verbatim.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from newton_monodromy.config import VARIABLE_NAMES
from newton_monodromy.errors import InputError

Exponent = Tuple[int, ...]


def variable_names(n):
    if n <= len(VARIABLE_NAMES):
        return list(VARIABLE_NAMES[:n])
    return [f"x{i + 1}" for i in range(n)]


def _format_fraction(value):
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SparsePolynomial(object):
    """A nonzero polynomial in n variables as a map exponent -> coefficient."""

    n: int
    terms: Tuple[Tuple[Exponent, Fraction], ...]

    def __post_init__(self):
        if not self.terms:
            raise InputError("zero polynomial")
        for exponent, coefficient in self.terms:
            if len(exponent) != self.n:
                raise InputError(f"exponent {exponent} does not have {self.n} entries")
            if any(e < 0 for e in exponent):
                raise InputError(f"negative exponent in {exponent}")
            if coefficient == 0:
                raise InputError(f"zero coefficient stored for {exponent}")

    @classmethod
    def from_terms(cls, n, terms):
        combined = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(int(e) for e in exponent)
            combined[exponent] = combined.get(exponent, Fraction(0)) + Fraction(coefficient)
        return cls(n, tuple(sorted((e, c) for e, c in combined.items() if c != 0)))

    @classmethod
    def from_support(cls, n, support):
        return cls.from_terms(n, {tuple(e): 1 for e in support})

    @classmethod
    def constant(cls, n, value=1):
        return cls.from_terms(n, {(0,) * n: value})

    def as_dict(self):
        return dict(self.terms)

    def support(self):
        return [e for e, _ in self.terms]

    def restricted_support(self, indices):
        """supp(g) intersected with Z^S, projected to the coordinates in S."""

        others = [i for i in range(self.n) if i not in indices]
        return [tuple(e[i] for i in indices) for e in self.support() if all(e[i] == 0 for i in others)]

    @property
    def is_constant(self):
        return self.support() == [(0,) * self.n]

    def __str__(self):
        names = variable_names(self.n)
        pieces = []
        for exponent, coefficient in sorted(self.terms, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponent) if e
            )
            magnitude = abs(coefficient)
            if not monomial:
                body = _format_fraction(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{_format_fraction(magnitude)}*{monomial}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text
