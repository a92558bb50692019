"""Built-in presentations: BSO(3), B(Z/2)^2, BSO(3)^3, the quotients M and N, and phi's target.

Generator orders are chosen so the canonical printed form lists ``w2``-type
factors before ``w3``-type ones, e.g. ``w2'^3*w2''^2*w3'``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Mapping, Optional

from .errors import PresentationError
from .poly import Generator
from .steenrod import AlgebraPresentation, RingHom, tensor

PRIMES = ("'", "''", "'''")

REL_D5 = "w2'*w3'' + w2''*w3'"
REL_D9 = "w3'*w3''^2 + w3''*w3'^2"

ALIASES = {"M_presentation": "M", "N_presentation": "N", "BZ2^2": "BZ2xBZ2"}


def bso3() -> AlgebraPresentation:
    return AlgebraPresentation(
        "BSO3",
        [Generator("w2", 2, 0), Generator("w3", 3, 1)],
        {"w2": [None, "w3", None], "w3": [None, "0", "w2*w3", None]},
    )


def bz2xbz2() -> AlgebraPresentation:
    return AlgebraPresentation("BZ2xBZ2", [Generator("s1", 1), Generator("s2", 1)], {})


def _copies(base: AlgebraPresentation, n: int, name: str, relations=()):
    parts = [(base, {g: g + PRIMES[k] for g in base.ring.names}) for k in range(n)]
    order = [g + PRIMES[k] for g in base.ring.names for k in range(n)]
    return tensor(name, parts, order=order, relations=relations)


def bso3_cubed(base: Optional[AlgebraPresentation] = None) -> AlgebraPresentation:
    return _copies(base or bso3(), 3, "BSO3_cubed")


def m_presentation(base: Optional[AlgebraPresentation] = None) -> AlgebraPresentation:
    return _copies(base or bso3(), 2, "M", relations=[REL_D5])


def n_presentation(base: Optional[AlgebraPresentation] = None) -> AlgebraPresentation:
    return _copies(base or bso3(), 2, "N", relations=[REL_D5, REL_D9])


def phi_target() -> AlgebraPresentation:
    # Sq^1 w2' = t1*w2' is the unique choice making phi commute with Sq^1;
    # phi does not commute with Sq^2, and nothing downstream needs it to.
    return AlgebraPresentation(
        "PHI_TARGET",
        [Generator("w2'", 2, 0), Generator("w2''", 2, 0), Generator("t1", 1, 1)],
        {"w2'": [None, "t1*w2'", None], "w2''": [None, "t1*w2''", None]},
    )


@lru_cache(maxsize=None)
def _builtin() -> Dict[str, AlgebraPresentation]:
    return {
        "BSO3": bso3(),
        "BZ2xBZ2": bz2xbz2(),
        "BSO3_cubed": bso3_cubed(),
        "M": m_presentation(),
        "N": n_presentation(),
        "PHI_TARGET": phi_target(),
    }


def builtin_presentations() -> Dict[str, AlgebraPresentation]:
    """Fresh dict of the validated built-in presentations (the values are shared and immutable)."""
    return dict(_builtin())


def get_presentation(name: str) -> AlgebraPresentation:
    algs = _builtin()
    key = ALIASES.get(name, name)
    if key not in algs:
        raise PresentationError(f"unknown built-in algebra {name!r}; choose from {sorted(algs)}")
    return algs[key]


def builtin_homs(algebras: Optional[Mapping[str, AlgebraPresentation]] = None,
                 validate: bool = True) -> Dict[str, RingHom]:
    """Restriction to B(Z/2)^2 (``Bi``), ``phi`` and the factor inclusions ``Bpi1..3`` / ``Bpi{1,2}_{M,N}``."""
    a = dict(algebras) if algebras is not None else _builtin()
    bso, bz, cubed, m, n, tgt = (a[k] for k in ("BSO3", "BZ2xBZ2", "BSO3_cubed", "M", "N", "PHI_TARGET"))
    homs = {
        "Bi": RingHom("Bi", bso, bz, {"w2": "s1^2 + s1*s2 + s2^2", "w3": "s1^2*s2 + s1*s2^2"},
                      validate=validate),
        "phi": RingHom("phi", m, tgt, {"w2'": "w2'", "w3'": "t1*w2'", "w2''": "w2''", "w3''": "t1*w2''"},
                       weight_preserving=True, validate=validate),
    }
    for k in range(3):
        homs[f"Bpi{k + 1}"] = RingHom(f"Bpi{k + 1}", bso, cubed,
                                      {g: g + PRIMES[k] for g in bso.ring.names}, validate=validate)
    for k in range(2):
        for tag, alg in (("M", m), ("N", n)):
            homs[f"Bpi{k + 1}_{tag}"] = RingHom(f"Bpi{k + 1}_{tag}", bso, alg,
                                                {g: g + PRIMES[k] for g in bso.ring.names}, validate=validate)
    return homs
