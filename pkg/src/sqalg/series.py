"""Integer rational functions in ``t`` and their power series expansions.

Accepted syntax: integers, ``t``, ``+``, ``-``, ``*``, ``/``, ``^`` with a
non-negative integer exponent, parentheses, and implicit multiplication by
juxtaposition, so ``(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)`` parses as written.
"""

from __future__ import annotations

import re
from typing import List, Sequence, Tuple

from .errors import ParseError

IntPoly = List[int]


def _trim(p: Sequence[int]) -> IntPoly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_pow(a: Sequence[int], k: int) -> IntPoly:
    out: IntPoly = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def expand(numerator: Sequence[int], denominator: Sequence[int], max_degree: int) -> List[int]:
    """Coefficients ``0..max_degree`` of ``numerator / denominator`` as a power series over Z."""
    numerator, denominator = list(numerator), list(denominator)
    while len(denominator) > 1 and denominator[0] == 0 and (not numerator or numerator[0] == 0):
        denominator.pop(0)
        if numerator:
            numerator.pop(0)
    if not denominator or denominator[0] not in (1, -1):
        raise ValueError("denominator must have constant term +-1 to expand over the integers")
    c0 = denominator[0]
    out = [0] * (max_degree + 1)
    for n in range(max_degree + 1):
        acc = numerator[n] if n < len(numerator) else 0
        for k in range(1, min(n, len(denominator) - 1) + 1):
            acc -= denominator[k] * out[n - k]
        out[n] = acc * c0
    return out


def product_series(numerator_degrees: Sequence[int], denominator_degrees: Sequence[int],
                   max_degree: int) -> List[int]:
    """Expansion of ``prod(1 - t^a) / prod(1 - t^b)``."""
    num: IntPoly = [1]
    for a in numerator_degrees:
        num = poly_mul(num, [1] + [0] * (a - 1) + [-1])
    den: IntPoly = [1]
    for b in denominator_degrees:
        den = poly_mul(den, [1] + [0] * (b - 1) + [-1])
    return expand(num, den, max_degree)


class _SeriesParser:
    _TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>t)|(?P<op>[-+*/^()]))")

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            mt = self._TOKEN.match(text, pos)
            if not mt:
                raise ParseError("unexpected character in series", text, pos)
            kind = mt.lastgroup
            self.tokens.append((kind, mt.group(kind), mt.start(kind)))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Tuple[IntPoly, IntPoly]:
        r = self.sum()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", self.text, pos)
        return r

    def sum(self):
        num, den = self.product()
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            n2, d2 = self.product()
            num = poly_add(poly_mul(num, d2), [sign * c for c in poly_mul(n2, den)])
            den = poly_mul(den, d2)
        return num, den

    def product(self):
        num, den = self.unary()
        while True:
            kind, value, _ = self.peek()
            if value == "/":
                self.take()
                n2, d2 = self.unary()
                if n2 == [0]:
                    raise ParseError("division by zero", self.text, self.peek()[2])
                num, den = poly_mul(num, d2), poly_mul(den, n2)
            elif value == "*" or value == "(" or kind in ("int", "var"):
                if value == "*":
                    self.take()
                n2, d2 = self.unary()
                num, den = poly_mul(num, n2), poly_mul(den, d2)
            else:
                return num, den

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            num, den = self.unary()
            return [-c for c in num], den
        return self.power()

    def power(self):
        num, den = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise ParseError("expected integer exponent", self.text, pos)
            k = int(value)
            num, den = poly_pow(num, k), poly_pow(den, k)
        return num, den

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return [int(value)], [1]
        if kind == "var":
            return [0, 1], [1]
        if value == "(":
            r = self.sum()
            kind, value, pos = self.take()
            if value != ")":
                raise ParseError("expected ')'", self.text, pos)
            return r
        raise ParseError(f"unexpected {value or 'end of input'!r}", self.text, pos)


def parse_series(text: str) -> Tuple[IntPoly, IntPoly]:
    """Parse a rational function in ``t``; returns ``(numerator, denominator)`` coefficient lists."""
    if not text.strip():
        raise ParseError("empty series", text, 0)
    return _SeriesParser(text).parse()


def series_coefficients(text: str, max_degree: int) -> List[int]:
    num, den = parse_series(text)
    return expand(num, den, max_degree)
