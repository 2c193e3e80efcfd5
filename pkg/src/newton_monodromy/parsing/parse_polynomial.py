import re
from collections import namedtuple
from fractions import Fraction

from newton_monodromy.config import VARIABLE_NAMES
from newton_monodromy.errors import InputError
from newton_monodromy.ehrhart.polynomials import PuiseuxPolynomial
from newton_monodromy.newton.polynomial import SparsePolynomial
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity

Token = namedtuple("Token", ["kind", "text", "position"])

_TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z]\d*)|(?P<op>[-+*/^]))")


def tokenize(text):
    """Splits a polynomial expression into number, name and operator tokens, remembering where each starts."""

    tokens, position = [], 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if not match:
            position += len(text[position:]) - len(text[position:].lstrip())
            raise InputError(f"unexpected character {text[position]!r} at position {position}", position)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def variable_index(name, n, position=None):
    """Maps x, y, z, w (n <= 4) or x1..xn to a 0-based index."""

    if len(name) > 1 and name[0] == "x" and name[1:].isdigit():
        index = int(name[1:]) - 1
        if 0 <= index < n:
            return index
    elif n <= len(VARIABLE_NAMES) and name in VARIABLE_NAMES[:n]:
        return VARIABLE_NAMES.index(name)
    raise InputError(f"unknown variable {name!r} for n={n}", position)


class _PolynomialParser(object):
    """Recursive descent over the token list: sum of signed terms, each a coefficient times variable powers."""

    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.current
        self.index += 1
        return token

    def _expect(self, kind, text=None):
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text or "end of input"
            raise InputError(f"expected {wanted} at position {token.position}, found {found!r}", token.position)
        return self._advance()

    def parse(self):
        terms = {}
        sign = 1
        if self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self._advance().text == "-" else 1
        while True:
            exponent, coefficient = self._term()
            terms[exponent] = terms.get(exponent, Fraction(0)) + sign * coefficient
            token = self.current
            if token.kind == "end":
                break
            if token.kind != "op" or token.text not in "+-":
                raise InputError(f"expected + or - at position {token.position}, found {token.text!r}", token.position)
            sign = -1 if self._advance().text == "-" else 1
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            raise InputError("zero polynomial", 0)
        return SparsePolynomial.from_terms(self.n, terms)

    def _term(self):
        start = self.current.position
        coefficient = Fraction(1)
        exponent = [0] * self.n
        seen_factor = False
        if self.current.kind == "number":
            coefficient = Fraction(int(self._advance().text))
            if self.current.kind == "op" and self.current.text == "/":
                self._advance()
                denominator = int(self._expect("number").text)
                if denominator == 0:
                    raise InputError(f"zero denominator at position {start}", start)
                coefficient /= denominator
            seen_factor = True
        while True:
            if self.current.kind == "op" and self.current.text == "*":
                self._advance()
                if self.current.kind != "name":
                    self._expect("name")
            if self.current.kind != "name":
                break
            token = self._advance()
            power = 1
            if self.current.kind == "op" and self.current.text == "^":
                self._advance()
                if self.current.kind == "op" and self.current.text == "-":
                    raise InputError(f"negative exponent at position {self.current.position}", self.current.position)
                power = int(self._expect("number").text)
            exponent[variable_index(token.text, self.n, token.position)] += power
            seen_factor = True
        if not seen_factor:
            found = self.current.text or "end of input"
            raise InputError(f"expected a term at position {self.current.position}, found {found!r}", self.current.position)
        return tuple(exponent), coefficient


def parse_polynomial(text, n):
    """Parses an expression such as "x^2 + y^3" or "2*x1*x2^3 - x1" into a SparsePolynomial in n variables."""

    if n < 1:
        raise InputError("the number of variables must be positive")
    return _PolynomialParser(text, n).parse()


_CYCLOTOMIC_FACTOR = re.compile(r"\(1-t(?:\^(\d+))?\)(?:\^\{?(-?\d+)\}?)?")


def parse_cyclotomic(source):
    """Reads a product of (1-t^d)^e from its text form or from the machine list of {"d", "exp"} entries."""

    if isinstance(source, (list, tuple)):
        return CyclotomicProduct.from_pairs((int(item["d"]), int(item["exp"])) for item in source)
    text = re.sub(r"\s+", "", source)
    if text == "1":
        return CyclotomicProduct()
    pairs, position = [], 0
    while position < len(text):
        match = _CYCLOTOMIC_FACTOR.match(text, position)
        if not match:
            raise InputError(f"cannot read a cyclotomic factor at position {position} of {source!r}", position)
        pairs.append((int(match.group(1) or 1), int(match.group(2) or 1)))
        position = match.end()
    return CyclotomicProduct.from_pairs(pairs)


_PUISEUX_TERM = re.compile(r"([+-]?)(?:(\d+)\*?)?(?:t(?:\^\{?(-?\d+(?:/\d+)?)\}?)?)?")


def parse_puiseux(source):
    """Reads a Puiseux polynomial from text like "t^{1/4} + t^{7/4}" or from the machine list of exponent entries."""

    if isinstance(source, (list, tuple)):
        return PuiseuxPolynomial({Fraction(item["exponent"]): int(item["coefficient"]) for item in source})
    text = re.sub(r"\s+", "", source)
    if text == "0":
        return PuiseuxPolynomial.zero()
    result, position = PuiseuxPolynomial.zero(), 0
    while position < len(text):
        match = _PUISEUX_TERM.match(text, position)
        sign, count, exponent = match.groups()
        has_t = "t" in match.group(0)
        if match.end() == position or (not count and not has_t):
            raise InputError(f"cannot read a Puiseux term at position {position} of {source!r}", position)
        if position and not sign:
            raise InputError(f"missing + or - at position {position} of {source!r}", position)
        value = (-1 if sign == "-" else 1) * int(count or 1)
        alpha = Fraction(exponent) if exponent else Fraction(int(has_t))
        result = result + PuiseuxPolynomial({alpha: value})
        position = match.end()
    return result


def parse_root_list(text):
    """Comma separated root-of-unity classes "k/d"."""

    return [RootOfUnity.from_string(item) for item in text.split(",") if item.strip()]
