"""Integer polynomials in t, Laurent polynomials in u, v and Puiseux polynomials in t, on top of sympy's Poly.

A Laurent polynomial is u^a v^b times a Poly over ZZ, a Puiseux polynomial is
t^shift times a Poly in t^(1/scale). Both keep the smallest shift and scale,
so equal values have equal representations.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping

from sympy import ZZ, Poly, binomial
from sympy.abc import t, u, v


def _collect(coefficients, normalize):
    terms = {}
    for exponent, value in (coefficients or {}).items():
        exponent = normalize(exponent)
        terms[exponent] = terms.get(exponent, 0) + int(value)
    return {e: c for e, c in terms.items() if c}


def _monomial(*powers, gens=(t,)):
    return Poly.from_dict({tuple(powers): 1}, *gens, domain=ZZ)


class _Carrier(object):
    """Read-only behaviour shared by the three carriers; subclasses provide coefficients and arithmetic."""

    __slots__ = ()

    @classmethod
    def _constant_exponent(cls):
        return 0

    @classmethod
    def one(cls):
        return cls({cls._constant_exponent(): 1})

    @classmethod
    def zero(cls):
        return cls({})

    @property
    def coefficients(self) -> Dict:
        raise NotImplementedError

    def coefficient(self, exponent):
        return self.coefficients.get(self._normalize(exponent), 0)

    def items(self):
        return sorted(self.coefficients.items())

    def is_zero(self):
        return self.poly.is_zero

    def __bool__(self):
        return not self.poly.is_zero

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = type(self)({self._constant_exponent(): other})
        elif isinstance(other, Mapping):
            other = type(self)(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, tuple(self.items())))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, other):
        return self * other

    def total_mass(self):
        return sum(abs(c) for c in self.coefficients.values())

    def coefficient_sum(self):
        return sum(self.coefficients.values())

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class UniPoly(_Carrier):
    """Polynomial in one variable with integer coefficients."""

    __slots__ = ("poly",)

    def __init__(self, coefficients: Mapping = None):
        terms = _collect(coefficients, self._normalize)
        self.poly = Poly.from_dict({(e,): c for e, c in terms.items()}, t, domain=ZZ) if terms else Poly(0, t, domain=ZZ)

    @staticmethod
    def _normalize(exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError(f"negative degree {exponent} in a polynomial")
        return exponent

    @classmethod
    def _of(cls, poly: Poly):
        result = cls.__new__(cls)
        result.poly = poly
        return result

    def _key(self):
        return self.poly

    @classmethod
    def from_list(cls, coefficients: Iterable[int]):
        coefficients = [int(c) for c in coefficients]
        return cls._of(Poly.from_list(coefficients[::-1] or [0], t, domain=ZZ))

    @classmethod
    def t(cls):
        return cls._of(Poly(t, t, domain=ZZ))

    @classmethod
    def t_minus_one(cls, power=1):
        return cls._of(Poly(t - 1, t, domain=ZZ) ** power)

    @property
    def coefficients(self) -> Dict[int, int]:
        return {e: int(c) for (e,), c in self.poly.terms() if c}

    def coefficient(self, exponent):
        exponent = int(exponent)
        return int(self.poly.coeff_monomial(t ** exponent)) if 0 <= exponent <= self.degree else 0

    @property
    def degree(self):
        return -1 if self.poly.is_zero else self.poly.degree()

    def to_list(self):
        return [] if self.poly.is_zero else [int(c) for c in reversed(self.poly.all_coeffs())]

    def evaluate(self, x):
        value = self.poly.eval(x)
        return int(value) if value.is_Integer else Fraction(int(value.p), int(value.q))

    __call__ = evaluate

    def reversed(self, span):
        """t^span * p(1/t)."""

        if self.degree > span:
            raise ValueError(f"degree {self.degree} exceeds the reversal span {span}")
        padded = self.to_list() + [0] * (span + 1 - len(self.to_list()))
        return UniPoly.from_list(padded[::-1])

    def is_palindromic(self, span):
        return self.degree <= span and self == self.reversed(span)

    def truncated(self, degree):
        if degree < 0:
            return UniPoly.zero()
        return UniPoly._of(self.poly.rem(_monomial(degree + 1)))

    def substitute(self, u_power: int, v_power: int) -> "LaurentBiPoly":
        """t -> u^a v^b."""

        return LaurentBiPoly({(e * u_power, e * v_power): c for e, c in self.coefficients.items()})

    def __add__(self, other):
        return UniPoly._of(self.poly + other.poly)

    def __neg__(self):
        return UniPoly._of(-self.poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly._of(self.poly * other)
        return UniPoly._of(self.poly * other.poly)

    def __pow__(self, k):
        return UniPoly._of(self.poly ** k)

    def __str__(self):
        return _render(self.items(), lambda e: _power("t", e, braces=False))


class LaurentBiPoly(_Carrier):
    """Laurent polynomial in u, v; exponents are (deg_u, deg_v)."""

    __slots__ = ("poly", "shift")

    def __init__(self, coefficients: Mapping = None):
        terms = _collect(coefficients, self._normalize)
        a = min((p for p, _ in terms), default=0)
        b = min((q for _, q in terms), default=0)
        poly = Poly.from_dict({(p - a, q - b): c for (p, q), c in terms.items()}, u, v, domain=ZZ) if terms else None
        self._set(poly, (a, b))

    def _set(self, poly, shift):
        if poly is None or poly.is_zero:
            self.poly, self.shift = Poly(0, u, v, domain=ZZ), (0, 0)
        else:
            (a, b), self.poly = poly.terms_gcd()
            self.shift = (shift[0] + a, shift[1] + b)

    @classmethod
    def _of(cls, poly, shift):
        result = cls.__new__(cls)
        result._set(poly, shift)
        return result

    @staticmethod
    def _normalize(exponent):
        return (int(exponent[0]), int(exponent[1]))

    @classmethod
    def _constant_exponent(cls):
        return (0, 0)

    def _key(self):
        return self.poly, self.shift

    @classmethod
    def monomial(cls, p, q, coefficient=1):
        return cls({(p, q): coefficient})

    @property
    def coefficients(self) -> Dict:
        a, b = self.shift
        return {(p + a, q + b): int(c) for (p, q), c in self.poly.terms() if c}

    def _lifted(self, shift):
        a, b = self.shift
        return self.poly * _monomial(a - shift[0], b - shift[1], gens=(u, v))

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = (min(self.shift[0], other.shift[0]), min(self.shift[1], other.shift[1]))
        return LaurentBiPoly._of(self._lifted(low) + other._lifted(low), low)

    def __neg__(self):
        return LaurentBiPoly._of(-self.poly, self.shift)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentBiPoly._of(self.poly * other, self.shift)
        return LaurentBiPoly._of(self.poly * other.poly, (self.shift[0] + other.shift[0], self.shift[1] + other.shift[1]))

    def __pow__(self, k):
        return LaurentBiPoly._of(self.poly ** k, (self.shift[0] * k, self.shift[1] * k))

    def shifted(self, p, q):
        return LaurentBiPoly._of(self.poly, (self.shift[0] + p, self.shift[1] + q))

    def has_negative_degrees(self):
        return not self.is_zero() and min(self.shift) < 0

    def divisible_by_uv(self):
        return self.is_zero() or min(self.shift) >= 1

    def swapped(self):
        return LaurentBiPoly({(q, p): c for (p, q), c in self.coefficients.items()})

    def diagonal(self) -> UniPoly:
        """Specialization v = u."""

        collapsed = Poly(self.poly.as_expr().subs(v, u), u, domain=ZZ)
        return UniPoly({e + sum(self.shift): c for (e,), c in collapsed.terms() if c})

    def at_v_one(self) -> UniPoly:
        collapsed = self.poly.eval(v, 1)
        return UniPoly({e + self.shift[0]: c for (e,), c in collapsed.terms() if c})

    def __str__(self):
        return _render(self.items(), lambda e: "*".join(x for x in (_power("u", e[0]), _power("v", e[1])) if x))


class PuiseuxPolynomial(_Carrier):
    """Finite sum of c * t^alpha with exact rational exponents alpha."""

    __slots__ = ("poly", "shift", "scale")

    def __init__(self, coefficients: Mapping = None):
        terms = _collect(coefficients, self._normalize)
        if not terms:
            self._set(None, Fraction(0), 1)
            return
        low = min(terms)
        scale = math.lcm(*((e - low).denominator for e in terms))
        poly = Poly.from_dict({(int((e - low) * scale),): c for e, c in terms.items()}, t, domain=ZZ)
        self._set(poly, low, scale)

    def _set(self, poly, shift, scale):
        if poly is None or poly.is_zero:
            self.poly, self.shift, self.scale = Poly(0, t, domain=ZZ), Fraction(0), 1
            return
        (low,), poly = poly.terms_gcd()
        shift += Fraction(low, scale)
        if poly.degree() == 0:
            self.poly, self.shift, self.scale = poly, shift, 1
            return
        (step,), deflated = poly.deflate()
        g = math.gcd(step, scale)
        if g > 1:
            poly = deflated.compose(_monomial(step // g))
            scale //= g
        self.poly, self.shift, self.scale = poly, shift, scale

    @classmethod
    def _of(cls, poly, shift, scale):
        result = cls.__new__(cls)
        result._set(poly, Fraction(shift), scale)
        return result

    @staticmethod
    def _normalize(exponent):
        return Fraction(exponent)

    @classmethod
    def _constant_exponent(cls):
        return Fraction(0)

    def _key(self):
        return self.poly, self.shift, self.scale

    @property
    def coefficients(self) -> Dict[Fraction, int]:
        return {self.shift + Fraction(e, self.scale): int(c) for (e,), c in self.poly.terms() if c}

    def _rebased(self, shift, scale):
        """The Poly p with self = t^shift * p(t^(1/scale)); scale must be a multiple of self.scale."""

        stretched = self.poly.compose(_monomial(scale // self.scale))
        return stretched * _monomial(int((self.shift - shift) * scale))

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.shift, other.shift)
        scale = math.lcm(self.scale, other.scale, (self.shift - other.shift).denominator)
        return PuiseuxPolynomial._of(self._rebased(low, scale) + other._rebased(low, scale), low, scale)

    def __neg__(self):
        return PuiseuxPolynomial._of(-self.poly, self.shift, self.scale)

    def __mul__(self, other):
        if isinstance(other, int):
            return PuiseuxPolynomial._of(self.poly * other, self.shift, self.scale)
        scale = math.lcm(self.scale, other.scale)
        product = self._rebased(self.shift, scale) * other._rebased(other.shift, scale)
        return PuiseuxPolynomial._of(product, self.shift + other.shift, scale)

    def __pow__(self, k):
        return PuiseuxPolynomial._of(self.poly ** k, self.shift * k, self.scale)

    def shifted(self, alpha):
        return PuiseuxPolynomial._of(self.poly, self.shift + Fraction(alpha), self.scale)

    def times_poly(self, poly: UniPoly):
        return self * PuiseuxPolynomial._of(poly.poly, 0, 1)

    def reflected(self, n):
        """t^n * p(1/t)."""

        if self.is_zero():
            return self
        mirrored = Poly(self.poly.all_coeffs()[::-1], t, domain=ZZ)
        return PuiseuxPolynomial._of(mirrored, n - self.shift - Fraction(self.poly.degree(), self.scale), self.scale)

    def truncated_below(self, bound):
        return PuiseuxPolynomial({e: c for e, c in self.coefficients.items() if e < bound})

    def exponents(self):
        return sorted(self.coefficients)

    def __str__(self):
        return _render(self.items(), lambda e: _power("t", e, braces=True))


def _render(items, monomial):
    if not items:
        return "0"
    pieces = []
    for e, c in items:
        mono = monomial(e)
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
        pieces.append(("-" if c < 0 else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    return text + "".join(f" {s} {b}" for s, b in pieces[1:])


def _power(name, k, braces=None):
    if k == 0:
        return ""
    if k == 1:
        return name
    if braces is None:
        braces = k < 0
    return f"{name}^{{{_fraction_text(k)}}}" if braces else f"{name}^{k}"


def _fraction_text(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def binomial_series_coefficient(numerator: UniPoly, dim: int, m: int) -> int:
    """Coefficient of u^m in numerator(u) / (1 - u)^(dim + 1)."""

    return int(sum(c * binomial(m - j + dim, dim) for j, c in numerator.coefficients.items() if j <= m))
