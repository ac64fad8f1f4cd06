"""GF(2) linear algebra on bitset rows.

A BitMatrix stores each row as an integer mask, bit j of a row being the
entry in column j.  cut_rank is the connectivity function used throughout:
the rank of the bipartite adjacency block between a vertex subset and its
complement, which also equals the base-2 logarithm of the Schmidt rank of
the corresponding graph state across that cut.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import _kernels as kernels
from .errors import GraphError
from .graph import Graph

__all__ = [
    "BitMatrix",
    "rank_gf2",
    "cut_rank",
    "matvec_gf2",
    "null_space_gf2",
    "inverse_gf2",
]


@dataclass(frozen=True)
class BitMatrix:
    """Rectangular matrix over GF(2); rows are integer bit masks."""

    rows: tuple[int, ...]
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise GraphError("matrix width must be nonnegative")
        for r in self.rows:
            if r < 0 or r >> self.width:
                raise GraphError("row has bits outside the matrix width")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], width: int | None = None) -> "BitMatrix":
        """Build from lists of 0/1 entries, column j becoming bit j."""
        if width is None:
            width = max((len(r) for r in rows), default=0)
        masks = []
        for r in rows:
            if len(r) != width:
                raise GraphError("rows must all have the same length")
            m = 0
            for j, x in enumerate(r):
                if x not in (0, 1):
                    raise GraphError(f"matrix entries must be 0 or 1, got {x!r}")
                m |= x << j
            masks.append(m)
        return cls(tuple(masks), width)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.width)] for r in self.rows]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.width)


def rank_gf2(m: BitMatrix) -> int:
    """Rank over GF(2); 0 for an empty matrix."""
    return kernels.gf2_rank(m.rows)


def cut_rank(g: Graph, side: Iterable[int]) -> int:
    """Rank of the adjacency block between `side` and its complement.

    Symmetric in the two sides and 0 for the empty or full vertex set.
    """
    positions = {g.position(v) for v in side}
    n = g.n
    comp_mask = 0
    for j in range(n):
        if j not in positions:
            comp_mask |= 1 << j
    rows = [g.adjacency_rows[i] & comp_mask for i in sorted(positions)]
    return kernels.gf2_rank(rows)


def matvec_gf2(rows: Sequence[int], vec: int) -> int:
    """Matrix-vector product over GF(2); bit i of the result is <row_i, vec>."""
    out = 0
    for i, r in enumerate(rows):
        out |= ((r & vec).bit_count() & 1) << i
    return out


def inverse_gf2(rows: Sequence[int], width: int) -> list[int]:
    """Inverse of a square matrix over GF(2), or ValueError when singular."""
    n = len(rows)
    if n != width:
        raise ValueError("inverse needs a square matrix")
    # Gauss-Jordan on rows augmented with identity in the high bits
    aug = [rows[i] | (1 << (width + i)) for i in range(n)]
    low = (1 << width) - 1
    for col in range(width):
        pivot = None
        for i in range(col, n):
            if (aug[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for i in range(n):
            if i != col and (aug[i] >> col) & 1:
                aug[i] ^= aug[col]
    return [row >> width for row in aug]


def null_space_gf2(rows: Sequence[int], width: int) -> list[int]:
    """Basis of the right null space, each vector as a bit mask."""
    pivots: dict[int, int] = {}
    for row in rows:
        cur = row
        while cur:
            hi = cur.bit_length() - 1
            if hi in pivots:
                cur ^= pivots[hi]
            else:
                pivots[hi] = cur
                break
    # full reduction, lowest pivot column first, so every stored row ends up
    # with its pivot bit plus free-column bits only
    for col in sorted(pivots):
        r0 = pivots[col]
        for c2, r2 in pivots.items():
            if c2 != col and (r2 >> col) & 1:
                pivots[c2] = r2 ^ r0
    basis = []
    for col in range(width):
        if col in pivots:
            continue
        vec = 1 << col
        for pcol, prow in pivots.items():
            if (prow >> col) & 1:
                vec |= 1 << pcol
        basis.append(vec)
    return basis
