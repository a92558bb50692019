"""Unstable algebras over the mod 2 Steenrod algebra, given as data.

An :class:`AlgebraPresentation` is a polynomial ring with a table of
``Sq^i(g)`` for every generator ``g`` and ``0 <= i <= deg g``, plus an optional
list of homogeneous relations.  Squares of arbitrary polynomials follow from
the Cartan formula, evaluated as a degree-filtered product of total squares:
``Sq(g^e) = prod_j Sq(g)^(2^j)`` over the binary digits of ``e``, where each
factor ``Sq(g)^(2^j)`` is just ``Sq(g)`` with exponents and degree increments
scaled by ``2^j``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .checks import CheckResult
from .errors import PresentationError, RingMismatch
from .poly import Generator, Monomial, Poly, PolyRing

PolyLike = Union[Poly, str, None]


class AlgebraPresentation:
    """Polynomial ring plus Steenrod square table and defining relations.

    ``sq`` maps a generator name to a list indexed by ``i`` giving
    ``Sq^i(g)`` as a Poly or a polynomial string.  Missing entries past the end
    are zero; ``None`` at index 0 or at index ``deg g`` (or a list too short to
    reach them) is filled by ``Sq^0 g = g`` and ``Sq^{deg g} g = g^2``.
    """

    def __init__(
        self,
        name: str,
        generators: Sequence[Generator],
        sq: Mapping[str, Sequence[PolyLike]],
        relations: Iterable[PolyLike] = (),
        validate: bool = True,
        ring: Optional[PolyRing] = None,
    ):
        self.name = name
        self.ring = ring if ring is not None else PolyRing(generators)
        unknown = set(sq) - set(self.ring.names)
        if unknown:
            raise PresentationError(f"{name}: Sq table names unknown generators {sorted(unknown)}")
        table: Dict[str, Tuple[Poly, ...]] = {}
        for g in self.ring.generators:
            given = list(sq.get(g.name, []))
            if len(given) > g.degree + 1:
                extra = [self._coerce(p) for p in given[g.degree + 1:]]
                if any(extra):
                    raise PresentationError(f"{name}: Sq^i {g.name} must vanish for i > {g.degree}")
                given = given[: g.degree + 1]
            given += [None] * (g.degree + 1 - len(given))
            x = self.ring.gen(g.name)
            entries = []
            for i, p in enumerate(given):
                if p is None:
                    if i == 0:
                        p = x
                    elif i == g.degree:
                        p = x * x
                    else:
                        p = self.ring.zero()
                entries.append(self._coerce(p))
            table[g.name] = tuple(entries)
        self.sq_table: Dict[str, Tuple[Poly, ...]] = table
        self.relations: Tuple[Poly, ...] = tuple(self._coerce(r) for r in relations)
        # per generator index: (increment, exponent vector) pairs sorted by increment
        self._factors = [
            sorted((i, m) for i, p in enumerate(table[g.name]) for m in p.terms)
            for g in self.ring.generators
        ]
        self._sq_cache: Dict[Tuple[int, Monomial], frozenset] = {}
        if validate:
            self.validate()

    def _coerce(self, p: PolyLike) -> Poly:
        if isinstance(p, str):
            return self.ring.parse(p)
        if isinstance(p, Poly):
            if p.ring != self.ring:
                raise RingMismatch(f"{self.name}: polynomial {p} is over another ring")
            return p
        raise TypeError(f"expected Poly or str, got {type(p).__name__}")

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, {list(self.ring.names)}, {len(self.relations)} relations)"

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self.ring.generators

    def is_free(self) -> bool:
        return not self.relations

    def gen(self, name: str) -> Poly:
        return self.ring.gen(name)

    def parse(self, text: str) -> Poly:
        return self.ring.parse(text)

    # validation

    def problems(self) -> List[str]:
        """Every violated structural invariant, as human-readable strings."""
        out = []
        for g in self.ring.generators:
            x = self.ring.gen(g.name)
            entries = self.sq_table[g.name]
            if entries[0] != x:
                out.append(f"Sq^0 {g.name} = {entries[0]}, expected {g.name}")
            if entries[g.degree] != x * x:
                out.append(f"Sq^{g.degree} {g.name} = {entries[g.degree]}, expected {g.name}^2")
            for i, p in enumerate(entries):
                if p and (not p.is_homogeneous() or p.degree() != g.degree + i):
                    out.append(f"Sq^{i} {g.name} = {p} is not homogeneous of degree {g.degree + i}")
        for r in self.relations:
            if not r:
                out.append("zero relation")
            elif not r.is_homogeneous():
                out.append(f"relation {r} is not homogeneous in degree")
            elif len(r.weight_components()) > 1:
                out.append(f"relation {r} is not homogeneous in weight")
        return out

    def validate(self):
        bad = self.problems()
        if bad:
            raise PresentationError(f"{self.name}: " + "; ".join(bad))

    # Steenrod squares

    def sq(self, i: int, p: Poly) -> Poly:
        """``Sq^i p`` computed through the Cartan formula."""
        if p.ring != self.ring:
            raise RingMismatch(f"{p} is not over {self.name}")
        if i < 0:
            raise ValueError("negative square")
        if i == 0:
            return p
        acc = set()
        for m in p.terms:
            acc ^= self._sq_monomial(i, m)
        return Poly(self.ring, frozenset(acc))

    def total_sq(self, p: Poly) -> Poly:
        out = self.ring.zero()
        for i in range(p.max_degree() + 1):
            out = out + self.sq(i, p)
        return out

    def _sq_monomial(self, i: int, m: Monomial) -> frozenset:
        key = (i, m)
        hit = self._sq_cache.get(key)
        if hit is not None:
            return hit
        degs = self.ring.degrees
        if i > self.ring.mono_degree(m):
            res = frozenset()
        else:
            # (largest possible increment, generator, bit) for each Frobenius factor
            factors = []
            for g, e in enumerate(m):
                j = 0
                while e:
                    if e & 1:
                        factors.append((degs[g] << j, g, j))
                    e >>= 1
                    j += 1
            factors.sort(reverse=True)
            remaining = sum(f[0] for f in factors)
            state = {(0,) * len(m): 0}
            for top, g, j in factors:
                remaining -= top
                nxt: Dict[Monomial, int] = {}
                table = self._factors[g]
                for ex, inc in state.items():
                    for tinc, tex in table:
                        ni = inc + (tinc << j)
                        if ni > i:
                            break
                        if ni + remaining < i:
                            continue
                        ne = tuple(a + (b << j) for a, b in zip(ex, tex))
                        if ne in nxt:
                            del nxt[ne]
                        else:
                            nxt[ne] = ni
                state = nxt
            res = frozenset(ex for ex, inc in state.items() if inc == i)
        self._sq_cache[key] = res
        return res

    # derived presentations

    def with_sq_entry(self, gen: str, i: int, value: PolyLike, name: Optional[str] = None) -> "AlgebraPresentation":
        """Copy with one table entry replaced; the copy is not validated."""
        sq = {g: list(v) for g, v in self.sq_table.items()}
        sq[gen][i] = self._coerce(value) if value is not None else self.ring.zero()
        return AlgebraPresentation(name or self.name, self.ring.generators, sq, self.relations,
                                   validate=False, ring=self.ring)

    def with_relations(self, relations: Iterable[PolyLike], name: Optional[str] = None) -> "AlgebraPresentation":
        return AlgebraPresentation(name or self.name, self.ring.generators, self.sq_table, relations,
                                   validate=False, ring=self.ring)

    def free(self, name: Optional[str] = None) -> "AlgebraPresentation":
        return self.with_relations((), name=name or f"{self.name}_free")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": [{"name": g.name, "degree": g.degree, "weight": g.weight}
                           for g in self.ring.generators],
            "sq": {g: [str(p) for p in v] for g, v in self.sq_table.items()},
            "relations": [str(r) for r in self.relations],
        }


def sq(i: int, p: Poly, algebra: AlgebraPresentation) -> Poly:
    return algebra.sq(i, p)


def total_sq(p: Poly, algebra: AlgebraPresentation) -> Poly:
    return algebra.total_sq(p)


def tensor(name: str, parts: Sequence[Tuple[AlgebraPresentation, Mapping[str, str]]],
           order: Optional[Sequence[str]] = None, weights: Optional[Mapping[str, int]] = None,
           relations: Iterable[str] = ()) -> AlgebraPresentation:
    """Tensor product of presentations with renamed generators and factorwise squares.

    ``parts`` pairs each factor with a rename map old-name -> new-name;
    ``order`` optionally rearranges the combined generator list.
    """
    gens: Dict[str, Generator] = {}
    moved: List[Tuple[AlgebraPresentation, Mapping[str, str]]] = []
    for alg, rename in parts:
        for g in alg.generators:
            new = rename[g.name]
            w = weights.get(new, g.weight) if weights else g.weight
            gens[new] = Generator(new, g.degree, w)
        moved.append((alg, rename))
    names = list(order) if order is not None else list(gens)
    if sorted(names) != sorted(gens):
        raise PresentationError(f"{name}: order {names} does not list exactly {sorted(gens)}")
    ring = PolyRing([gens[n] for n in names])
    sq_tab: Dict[str, List[Poly]] = {}
    for alg, rename in moved:
        perm = [ring.index[rename[n]] for n in alg.ring.names]

        def move(p: Poly, perm=perm) -> Poly:
            terms = []
            for m in p.terms:
                e = [0] * ring.ngens
                for k, x in zip(perm, m):
                    e[k] = x
                terms.append(tuple(e))
            return Poly(ring, frozenset(terms))

        for g in alg.generators:
            sq_tab[rename[g.name]] = [move(p) for p in alg.sq_table[g.name]]
    return AlgebraPresentation(name, ring.generators, sq_tab, relations, ring=ring)


class RingHom:
    """Graded ring homomorphism given by generator images."""

    def __init__(self, name: str, source: AlgebraPresentation, target: AlgebraPresentation,
                 images: Mapping[str, PolyLike], weight_preserving: bool = False, validate: bool = True):
        self.name = name
        self.source = source
        self.target = target
        self.weight_preserving = weight_preserving
        missing = [g for g in source.ring.names if g not in images]
        if missing:
            raise PresentationError(f"{name}: no image for generators {missing}")
        self.images: Dict[str, Poly] = {}
        for g, img in images.items():
            if g not in source.ring.index:
                raise PresentationError(f"{name}: {g} is not a generator of {source.name}")
            self.images[g] = target.parse(img) if isinstance(img, str) else img
        self._img_list = [self.images[g] for g in source.ring.names]
        self._pow_cache: Dict[Tuple[int, int], Poly] = {}
        if validate:
            bad = self.problems()
            if bad:
                raise PresentationError(f"{name}: " + "; ".join(bad))

    def __repr__(self):
        return f"RingHom({self.name!r}: {self.source.name} -> {self.target.name})"

    def problems(self) -> List[str]:
        out = []
        for g in self.source.generators:
            img = self.images[g.name]
            if img.ring != self.target.ring:
                out.append(f"image of {g.name} is not over {self.target.name}")
                continue
            if img and (not img.is_homogeneous() or img.degree() != g.degree):
                out.append(f"image of {g.name} is not homogeneous of degree {g.degree}")
            if self.weight_preserving and any(self.target.ring.mono_weight(m) != g.weight for m in img.terms):
                out.append(f"image {img} of {g.name} does not have weight {g.weight}")
        return out

    def _power(self, k: int, e: int) -> Poly:
        key = (k, e)
        hit = self._pow_cache.get(key)
        if hit is None:
            hit = self._img_list[k] ** e
            self._pow_cache[key] = hit
        return hit

    def __call__(self, p: Poly) -> Poly:
        if p.ring != self.source.ring:
            raise RingMismatch(f"{p} is not over {self.source.name}")
        out = set()
        for m in p.terms:
            t = self.target.ring.one()
            for k, e in enumerate(m):
                if e:
                    t = t * self._power(k, e)
                    if not t:
                        break
            out ^= t.terms
        return Poly(self.target.ring, frozenset(out))

    apply = __call__

    def with_image(self, gen: str, value: PolyLike, name: Optional[str] = None) -> "RingHom":
        imgs = dict(self.images)
        imgs[gen] = value
        return RingHom(name or self.name, self.source, self.target, imgs,
                       weight_preserving=self.weight_preserving, validate=False)


def apply_hom(f: RingHom, p: Poly) -> Poly:
    return f(p)


def identity_hom(alg: AlgebraPresentation) -> RingHom:
    return RingHom(f"id_{alg.name}", alg, alg, {g: alg.gen(g) for g in alg.ring.names})


def check_sq_equivariance(f: RingHom, max_degree: int = 0, ops: Optional[Sequence[int]] = None) -> CheckResult:
    """Check ``Sq^i f(x) == f(Sq^i x)`` on generators, then on all monomials up to ``max_degree``.

    ``ops`` restricts the squares compared (e.g. ``[1]`` for Bockstein compatibility only).
    """
    src, tgt = f.source, f.target
    checked = 0
    candidates: List[Poly] = [src.gen(n) for n in src.ring.names]
    seen = {m for c in candidates for m in c.terms}
    for d in range(1, max_degree + 1):
        for m in src.ring.monomials(d):
            if m not in seen:
                candidates.append(src.ring.monomial(m))
    for x in candidates:
        fx = f(x)
        for i in range(1, x.max_degree() + 1):
            if ops is not None and i not in ops:
                continue
            lhs = tgt.sq(i, fx)
            rhs = f(src.sq(i, x))
            checked += 1
            if lhs != rhs:
                return CheckResult(False, checked,
                                   f"Sq^{i}({f.name}({x})) = {lhs} but {f.name}(Sq^{i} {x}) = {rhs}",
                                   {"element": str(x), "i": i})
    return CheckResult(True, checked)


def check_sq1_sq1(alg: AlgebraPresentation, max_degree: int) -> CheckResult:
    """``Sq^1 Sq^1 = 0`` on every monomial of degree at most ``max_degree``."""
    checked = 0
    for d in range(1, max_degree + 1):
        for m in alg.ring.monomials(d):
            x = alg.ring.monomial(m)
            y = alg.sq(1, alg.sq(1, x))
            checked += 1
            if y:
                return CheckResult(False, checked, f"Sq^1 Sq^1 ({x}) = {y}", {"element": str(x)})
    return CheckResult(True, checked)


def check_instability(alg: AlgebraPresentation, max_i: int = 8) -> CheckResult:
    """Generator-level instability: ``Sq^{deg g} g = g^2`` and ``Sq^i g = 0`` above it."""
    checked = 0
    for g in alg.generators:
        x = alg.gen(g.name)
        checked += 1
        if alg.sq(g.degree, x) != x * x:
            return CheckResult(False, checked, f"Sq^{g.degree} {g.name} != {g.name}^2")
        for i in range(g.degree + 1, g.degree + max_i + 1):
            checked += 1
            if alg.sq(i, x):
                return CheckResult(False, checked, f"Sq^{i} {g.name} != 0")
    return CheckResult(True, checked)


def presentation_from_json(data: Union[dict, str, Path], name: Optional[str] = None,
                           validate: bool = True) -> AlgebraPresentation:
    """Load an algebra definition: ``{generators: [...], sq: {...}, relations: [...]}``.

    ``data`` is a parsed dict, a JSON string, or a path to a JSON file.  Each
    ``sq`` value is a list indexed by ``i`` (``null`` entries auto-filled) or
    an object mapping ``"i"`` to a polynomial string.
    """
    if isinstance(data, Path) or (isinstance(data, str) and not data.lstrip().startswith(("{", "["))):
        path = Path(data)
        data = json.loads(path.read_text())
        name = name or data.get("name") or path.stem
    elif isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise PresentationError("algebra definition must be a JSON object")
    try:
        gens = [Generator(g["name"], int(g["degree"]), int(g.get("weight", 0))) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PresentationError(f"bad generator list: {exc}") from exc
    sq_raw = data.get("sq", {})
    sq_map: Dict[str, List[PolyLike]] = {}
    for g, v in sq_raw.items():
        if isinstance(v, dict):
            top = max((int(k) for k in v), default=0)
            lst: List[PolyLike] = [None] * (top + 1)
            for k, p in v.items():
                lst[int(k)] = p
            sq_map[g] = lst
        else:
            sq_map[g] = list(v)
    return AlgebraPresentation(name or data.get("name", "custom"), gens, sq_map, data.get("relations", []),
                               validate=validate)
