"""Sparse multivariate polynomials over GF(2).

A polynomial is a frozen set of exponent tuples: with coefficients in the
two-element field a term is either present or absent, so addition is the
symmetric difference of term sets.  Every polynomial belongs to a
:class:`PolyRing`, an ordered list of graded generators.  Generators carry a
cohomological degree and an auxiliary weight; both gradings extend additively
to monomials.

Textual form (parsed and printed)::

    w2'^3*w2''^2*w3' + w2'*w2''^4*w3'

``0`` is the zero polynomial and ``1`` the empty monomial.  Generator names
may end in ASCII apostrophes.  The parser also accepts parentheses and
``(expr)^k`` as a convenience.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    BoundExceeded,
    NotDivisible,
    NotHomogeneous,
    ParseError,
    RingMismatch,
    UnknownGenerator,
)

Monomial = Tuple[int, ...]

DEFAULT_DEGREE_CAP = 16384


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    weight: int = 0

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")
        if self.degree < 1:
            raise ValueError(f"generator {self.name} must have degree >= 1")
        if self.weight < 0:
            raise ValueError(f"generator {self.name} must have weight >= 0")


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*")


def grevlex_key(degrees: Sequence[int], m: Monomial):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial).

    Degree is the weighted (cohomological) degree; ties are broken by the last
    differing exponent, a smaller exponent on a later generator being larger.
    """
    return (sum(e * d for e, d in zip(m, degrees)), tuple(-e for e in reversed(m)))


class PolyRing:
    """Polynomial ring ``GF(2)[g_1, ..., g_n]`` over graded generators.

    The ring is a value: two rings with the same generator list compare equal,
    so polynomials built through different presentations over the same
    generators can be combined.
    """

    def __init__(self, generators: Iterable[Generator], degree_cap: int = DEFAULT_DEGREE_CAP):
        self.generators: Tuple[Generator, ...] = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.names: Tuple[str, ...] = tuple(names)
        self.degrees: Tuple[int, ...] = tuple(g.degree for g in self.generators)
        self.weights: Tuple[int, ...] = tuple(g.weight for g in self.generators)
        self.index: Dict[str, int] = {n: i for i, n in enumerate(names)}
        self.degree_cap = degree_cap
        self.ngens = len(names)
        self._zero = Poly(self, frozenset())
        self._one = Poly(self, frozenset([(0,) * self.ngens]))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"PolyRing({gens})"

    # construction

    def zero(self) -> "Poly":
        return self._zero

    def one(self) -> "Poly":
        return self._one

    def gen(self, name: str) -> "Poly":
        try:
            i = self.index[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None
        e = [0] * self.ngens
        e[i] = 1
        return Poly(self, frozenset([tuple(e)]))

    def gens(self) -> List["Poly"]:
        return [self.gen(n) for n in self.names]

    def monomial(self, exponents: Sequence[int]) -> "Poly":
        m = self.check_monomial(exponents)
        return Poly(self, frozenset([m]))

    def from_terms(self, terms: Iterable[Sequence[int]]) -> "Poly":
        """Build a polynomial from exponent vectors; repeated vectors cancel in pairs."""
        acc = set()
        for t in terms:
            acc ^= {self.check_monomial(t)}
        return Poly(self, frozenset(acc))

    def check_monomial(self, exponents: Sequence[int]) -> Monomial:
        m = tuple(int(e) for e in exponents)
        if len(m) != self.ngens:
            raise ValueError(f"monomial {m} has {len(m)} exponents, ring has {self.ngens} generators")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        if self.mono_degree(m) > self.degree_cap:
            raise BoundExceeded(f"monomial degree exceeds cap {self.degree_cap}")
        return m

    def parse(self, text: str) -> "Poly":
        return _Parser(self, text).parse()

    # gradings

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def mono_weight(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def monomials(self, degree: int, weight: Optional[int] = None) -> List[Monomial]:
        """All exponent vectors of the given degree (and weight), largest first in grevlex."""
        if degree < 0:
            return []
        out: List[Monomial] = []
        n = self.ngens
        degs, wts = self.degrees, self.weights

        def rec(i, left, wleft, acc):
            if i == n:
                if left == 0 and (weight is None or wleft == 0):
                    out.append(tuple(acc))
                return
            d = degs[i]
            for e in range(left // d + 1):
                if weight is not None and e * wts[i] > wleft:
                    break
                acc.append(e)
                rec(i + 1, left - e * d, wleft - e * wts[i] if weight is not None else 0, acc)
                acc.pop()

        rec(0, degree, weight if weight is not None else 0, [])
        out.sort(key=self.sort_key, reverse=True)
        return out

    def sort_key(self, m: Monomial):
        return grevlex_key(self.degrees, m)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Poly:
    """Immutable polynomial over GF(2); ``terms`` is the set of present monomials."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: frozenset):
        self.ring = ring
        self.terms = terms

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.one() if other % 2 else self.ring.zero()
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Poly(self.ring, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other % 2 else self.ring.zero()
        if self._check(other) is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        ring = self.ring
        if self.max_degree() + other.max_degree() > ring.degree_cap:
            raise BoundExceeded(f"product degree exceeds cap {ring.degree_cap}")
        if len(self.terms) == 1 and len(other.terms) == 1:
            (a,), (b,) = self.terms, other.terms
            return Poly(ring, frozenset([tuple(x + y for x, y in zip(a, b))]))
        acc = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Poly(ring, frozenset(acc))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.frobenius()
        return result

    def frobenius(self, times: int = 1) -> "Poly":
        """Raise to the power ``2**times``; in characteristic 2 this doubles exponents termwise."""
        f = 1 << times
        if self.max_degree() * f > self.ring.degree_cap:
            raise BoundExceeded(f"power degree exceeds cap {self.ring.degree_cap}")
        return Poly(self.ring, frozenset(tuple(e * f for e in m) for m in self.terms))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == (self.ring.one().terms if other % 2 else frozenset())
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Monomial]:
        return sorted(self.terms, key=self.ring.sort_key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.ring.format_monomial(m) for m in self.sorted_terms())

    def __repr__(self):
        return f"Poly({str(self)!r})"

    # gradings

    def max_degree(self) -> int:
        return max((self.ring.mono_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({self.ring.mono_degree(m) for m in self.terms}) <= 1

    def degree(self) -> Optional[int]:
        """Common degree of a homogeneous polynomial, ``None`` for zero."""
        degs = {self.ring.mono_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise NotHomogeneous(f"{self} has terms in degrees {sorted(degs)}")
        return degs.pop()

    def degree_components(self) -> Dict[int, "Poly"]:
        return self._split(self.ring.mono_degree)

    def weight_components(self) -> Dict[int, "Poly"]:
        return self._split(self.ring.mono_weight)

    def _split(self, grading) -> Dict[int, "Poly"]:
        parts: Dict[int, set] = {}
        for m in self.terms:
            parts.setdefault(grading(m), set()).add(m)
        return {k: Poly(self.ring, frozenset(v)) for k, v in sorted(parts.items())}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> Monomial:
        return max(self.terms, key=self.ring.sort_key)

    def divide_exact(self, m) -> "Poly":
        """Return ``q`` with ``q * m == self`` for a monomial ``m`` (tuple or one-term Poly)."""
        if isinstance(m, Poly):
            self._check(m)
            if len(m.terms) != 1:
                raise ValueError("divisor must be a single monomial")
            (m,) = m.terms
        out = []
        for t in self.terms:
            q = tuple(a - b for a, b in zip(t, m))
            if any(e < 0 for e in q):
                raise NotDivisible(f"{self.ring.format_monomial(t)} is not divisible by "
                                   f"{self.ring.format_monomial(m)}")
            out.append(q)
        return Poly(self.ring, frozenset(out))

    def only_even_exponents(self) -> bool:
        return all(e % 2 == 0 for m in self.terms for e in m)


class _Parser:
    _TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)|(?P<int>\d+)|(?P<op>[-+*^()]))")

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            mt = self._TOKEN.match(text, pos)
            if not mt:
                raise ParseError("unexpected character", text, pos)
            kind = mt.lastgroup
            start = mt.start(kind)
            self.tokens.append((kind, mt.group(kind), start))
            pos = mt.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        p = self._expr()
        kind, value, pos = self._peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", self.text, pos)
        return p

    def _expr(self) -> Poly:
        p = self._term()
        while self._peek()[1] in ("+", "-"):
            self._take()
            p = p + self._term()
        return p

    def _term(self) -> Poly:
        p = self._factor()
        while self._peek()[1] == "*":
            self._take()
            p = p * self._factor()
        return p

    def _factor(self) -> Poly:
        base = self._atom()
        if self._peek()[1] == "^":
            self._take()
            kind, value, pos = self._take()
            if kind != "int":
                raise ParseError("expected integer exponent", self.text, pos)
            base = base ** int(value)
        return base

    def _atom(self) -> Poly:
        kind, value, pos = self._take()
        if kind == "name":
            if value not in self.ring.index:
                raise UnknownGenerator(f"unknown generator {value!r}", self.text, pos)
            return self.ring.gen(value)
        if kind == "int":
            if value not in ("0", "1"):
                raise ParseError("only the constants 0 and 1 exist over GF(2)", self.text, pos)
            return self.ring.one() if value == "1" else self.ring.zero()
        if value == "(":
            p = self._expr()
            kind, value, pos = self._take()
            if value != ")":
                raise ParseError("expected ')'", self.text, pos)
            return p
        raise ParseError(f"unexpected {value or 'end of input'!r}", self.text, pos)
