"""Dense GF(2) linear algebra on Python ints used as bit rows."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence


def rank(rows: Sequence[int]) -> int:
    return len(echelon(rows))


def echelon(rows: Sequence[int]) -> Dict[int, int]:
    """Reduce rows to echelon form, keyed by pivot bit (the highest set bit)."""
    basis: Dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p in basis:
                r ^= basis[p]
            else:
                basis[p] = r
                break
    return basis


def in_span(vec: int, basis: Dict[int, int]) -> bool:
    while vec:
        p = vec.bit_length() - 1
        if p not in basis:
            return False
        vec ^= basis[p]
    return True


def kernel_vector(rows: Sequence[int]) -> Optional[int]:
    """A nonzero bitmask ``c`` over row indices with ``XOR_{i in c} rows[i] == 0``, or None.

    A ``None`` result means the rows are linearly independent.
    """
    basis: Dict[int, tuple] = {}
    for i, r in enumerate(rows):
        combo = 1 << i
        while r:
            p = r.bit_length() - 1
            if p in basis:
                br, bc = basis[p]
                r ^= br
                combo ^= bc
            else:
                basis[p] = (r, combo)
                break
        else:
            return combo
    return None


def indices(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
