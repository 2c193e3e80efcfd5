"""Formal products of (1 - t^d)^e and roots of unity as reduced fractions k/d."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

import sympy

from newton_monodromy.errors import InputError


@dataclass(frozen=True, order=True)
class RootOfUnity(object):
    """lambda = exp(2 pi i k/d) with 0 <= k < d and gcd(k, d) = 1."""

    d: int
    k: int

    def __post_init__(self):
        if self.d < 1 or not 0 <= self.k < self.d or math.gcd(self.k, self.d) != 1:
            raise InputError(f"{self.k}/{self.d} is not a reduced root-of-unity class")

    @classmethod
    def from_fraction(cls, value):
        """Class of exp(2 pi i c) for any rational c."""

        value = Fraction(value) % 1
        return cls(value.denominator, value.numerator)

    @classmethod
    def from_string(cls, text):
        try:
            k, _, d = text.strip().partition("/")
            k, d = int(k), int(d or 1)
        except ValueError:
            raise InputError(f"cannot read {text!r} as k/d") from None
        if d < 1 or math.gcd(k, d) != 1 or not 0 <= k < d:
            raise InputError(f"lambda must be given as k/d in lowest terms with 0 <= k < d, got {text!r}")
        return cls(d, k)

    @classmethod
    def one(cls):
        return cls(1, 0)

    @property
    def order(self):
        return self.d

    @property
    def fraction(self):
        return Fraction(self.k, self.d)

    @property
    def is_one(self):
        return self.d == 1

    def conjugate(self):
        return RootOfUnity(self.d, (-self.k) % self.d)

    def __str__(self):
        return f"{self.k}/{self.d}"


def roots_of_order(d):
    return [RootOfUnity(d, k) for k in range(d) if math.gcd(k, d) == 1]


def roots_dividing(m):
    """All classes whose order divides m, eigenvalue 1 excluded."""

    return [root for d in sympy.divisors(m) if d > 1 for root in roots_of_order(d)]


@dataclass(frozen=True)
class CyclotomicProduct(object):
    """prod_d (1 - t^d)^{e_d}; no zero exponents are stored and the empty product is 1."""

    factors: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]):
        for d in exponents:
            if d < 1:
                raise InputError(f"cyclotomic factor degree must be positive, got {d}")
        return cls(tuple(sorted((int(d), int(e)) for d, e in exponents.items() if e != 0)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]):
        exponents: Dict[int, int] = {}
        for d, e in pairs:
            exponents[d] = exponents.get(d, 0) + e
        return cls.from_exponents(exponents)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other):
        return CyclotomicProduct.from_pairs(self.factors + other.factors)

    def __bool__(self):
        return True

    @property
    def is_one(self):
        return not self.factors

    def degree(self):
        """Degree of the rational function: sum of d * e_d."""

        return sum(d * e for d, e in self.factors)

    def order_at(self, root: RootOfUnity):
        """Order of vanishing at t = lambda."""

        return sum(e for d, e in self.factors if d % root.order == 0)

    def divisor_sum(self, m):
        """sum over d | m of d * e_d."""

        return sum(d * e for d, e in self.factors if m % d == 0)

    def to_sympy(self, t=None):
        t = t if t is not None else sympy.Symbol("t")
        expr = sympy.Integer(1)
        for d, e in self.factors:
            expr *= (1 - t ** d) ** e
        return expr

    def __str__(self):
        if not self.factors:
            return "1"
        pieces = []
        for d, e in self.factors:
            base = "(1-t)" if d == 1 else f"(1-t^{d})"
            pieces.append(base if e == 1 else f"{base}^{{{e}}}")
        return "".join(pieces)
