"""Milnor primitives ``Q_m`` and the BSO(3) recurrence built from them.

Two independent evaluations of ``Q_m`` are provided.  :func:`q_recursive`
unfolds ``Q_0 = Sq^1``, ``Q_m = Sq^(2^m) Q_(m-1) + Q_(m-1) Sq^(2^m)`` and is
the definitional oracle.  :func:`q_derivation` takes generator values from the
oracle once and extends them by the Leibniz rule; it is the fast path.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .builtins import builtin_homs, get_presentation
from .errors import BoundExceeded, NotHomogeneous
from .poly import Poly, PolyRing
from .steenrod import AlgebraPresentation, RingHom

DEFAULT_MAX_M = 12

_lock = threading.Lock()
_gen_cache: "weakref.WeakKeyDictionary[AlgebraPresentation, Dict[Tuple[int, int], Poly]]" = \
    weakref.WeakKeyDictionary()


def _check_m(m: int, max_m: int):
    if m < 0:
        raise ValueError("Milnor operations are indexed by m >= 0")
    if m > max_m:
        raise BoundExceeded(f"Q_{m} exceeds the configured bound m <= {max_m}")


def q_recursive(m: int, p: Poly, algebra: AlgebraPresentation, max_m: int = DEFAULT_MAX_M) -> Poly:
    """``Q_m p`` straight from the commutator recursion."""
    _check_m(m, max_m)
    if p and not p.is_homogeneous():
        raise NotHomogeneous(f"Q_{m} expects a homogeneous polynomial, got {p}")
    return _q_rec(m, p, algebra)


def _q_rec(m: int, p: Poly, algebra: AlgebraPresentation) -> Poly:
    if not p:
        return p
    if m == 0:
        return algebra.sq(1, p)
    k = 1 << m
    out = algebra.sq(k, _q_rec(m - 1, p, algebra))
    if p.max_degree() >= k:
        out = out + _q_rec(m - 1, algebra.sq(k, p), algebra)
    return out


def q_generator(m: int, index: int, algebra: AlgebraPresentation, max_m: int = DEFAULT_MAX_M) -> Poly:
    """Cached ``Q_m`` of the generator at position ``index``."""
    _check_m(m, max_m)
    cache = _gen_cache.get(algebra)
    if cache is None:
        with _lock:
            cache = _gen_cache.setdefault(algebra, {})
    hit = cache.get((m, index))
    if hit is None:
        hit = _q_rec(m, algebra.gen(algebra.ring.names[index]), algebra)
        cache[(m, index)] = hit
    return hit


def q_derivation(m: int, p: Poly, algebra: AlgebraPresentation, max_m: int = DEFAULT_MAX_M) -> Poly:
    """``Q_m p`` via the Leibniz rule from cached generator values."""
    _check_m(m, max_m)
    if p.ring != algebra.ring:
        raise ValueError(f"{p} is not over {algebra.name}")
    ring = algebra.ring
    acc = set()
    for mono in p.terms:
        for i, e in enumerate(mono):
            if e & 1:
                qg = q_generator(m, i, algebra, max_m)
                if not qg:
                    continue
                rest = list(mono)
                rest[i] -= 1
                acc ^= (ring.monomial(rest) * qg).terms
    return Poly(ring, frozenset(acc))


def q(m: int, p: Poly, algebra: AlgebraPresentation, max_m: int = DEFAULT_MAX_M) -> Poly:
    return q_derivation(m, p, algebra, max_m)


def d_operator(m: int, p: Poly, algebra: Optional[AlgebraPresentation] = None,
               restriction: Optional[RingHom] = None, method: str = "derivation",
               max_m: int = DEFAULT_MAX_M) -> Poly:
    """``Q_m x + Bi(w2^(2^(m-1))) Q_(m-1) x + Bi(w3^(2^(m-1))) Q_(m-2) x`` over B(Z/2)^2.

    ``restriction`` defaults to the built-in ``Bi``; pass a corrupted copy to
    run negative controls.
    """
    if m < 2:
        raise ValueError("D_m is defined for m >= 2")
    algebra = algebra or get_presentation("BZ2xBZ2")
    restriction = restriction or builtin_homs()["Bi"]
    qf = q_derivation if method == "derivation" else q_recursive
    half = 1 << (m - 1)
    src = restriction.source
    c2 = restriction(src.gen("w2") ** half)
    c3 = restriction(src.gen("w3") ** half)
    return qf(m, p, algebra, max_m) + c2 * qf(m - 1, p, algebra, max_m) + c3 * qf(m - 2, p, algebra, max_m)


@dataclass(frozen=True)
class PolyMatrix2x2:
    a11: Poly
    a12: Poly
    a21: Poly
    a22: Poly

    def __matmul__(self, other: "PolyMatrix2x2") -> "PolyMatrix2x2":
        return PolyMatrix2x2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def entries(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return (self.a11, self.a12, self.a21, self.a22)

    def rows(self):
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


def _bso3_ring() -> PolyRing:
    return get_presentation("BSO3").ring


def a_factor(k: int) -> PolyMatrix2x2:
    """``[[w2^(2^(k-1)), w3^(2^(k-1))], [1, 0]]``."""
    r = _bso3_ring()
    half = 1 << (k - 1)
    return PolyMatrix2x2(r.gen("w2") ** half, r.gen("w3") ** half, r.one(), r.zero())


@lru_cache(maxsize=None)
def a_matrix(m: int) -> PolyMatrix2x2:
    """``A_m = factor(m) @ factor(m-1) @ ... @ factor(2)``, built incrementally."""
    if m < 2:
        raise ValueError("A_m is defined for m >= 2")
    if m == 2:
        return a_factor(2)
    return a_factor(m) @ a_matrix(m - 1)


def f_polys(m: int) -> Tuple[Poly, Poly]:
    """``(f_{m,1}, f_{m,0})``, the top row of ``A_m``."""
    a = a_matrix(m)
    return a.a11, a.a12


def g_poly(m: int) -> Poly:
    """``f_{m,0} / w3^2``; raises NotDivisible if the quotient does not exist."""
    _, f0 = f_polys(m)
    return f0.divide_exact(_bso3_ring().gen("w3") ** 2)
