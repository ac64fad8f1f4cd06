"""Pure-Python bitset kernels.

Graphs are manipulated here as tuples of integer bit rows: rows[i] is the
neighbourhood mask of the vertex at position i, diagonal always zero.
These functions are the hot inner loops of orbit enumeration, vertex-minor
search and the rank-width dynamic program; _ckernels provides a compiled
drop-in for widths up to 64, this module works at any width.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["lc_rows", "pivot_rows", "gf2_rank", "induced_rows"]

BACKEND_NAME = "python"


def lc_rows(rows: Sequence[int], v: int) -> tuple[int, ...]:
    """Complement the induced subgraph on the neighbourhood of position v."""
    rv = rows[v]
    out = list(rows)
    nb = rv
    while nb:
        low = nb & -nb
        i = low.bit_length() - 1
        # XOR with v's row toggles exactly the pairs inside N(v); the
        # diagonal bit switched on by the XOR is cleared again.
        out[i] = (out[i] ^ rv) & ~low
        nb ^= low
    return tuple(out)


def pivot_rows(rows: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Pivot on the edge {u, v}: complement at v, then u, then v."""
    return lc_rows(lc_rows(lc_rows(rows, v), u), v)


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of the given bit rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            hi = cur.bit_length() - 1
            p = pivots.get(hi)
            if p is None:
                pivots[hi] = cur
                rank += 1
                break
            cur ^= p
    return rank


def induced_rows(rows: Sequence[int], keep: Sequence[int]) -> tuple[int, ...]:
    """Restrict rows to the given positions, compacting columns in order."""
    out = []
    for i in keep:
        r = rows[i]
        m = 0
        for j, k in enumerate(keep):
            m |= ((r >> k) & 1) << j
        out.append(m)
    return tuple(out)
