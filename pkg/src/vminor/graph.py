"""Immutable simple graphs over integer labels with bitset adjacency.

The vertex set is any finite set of nonnegative integers; positions inside
the bit rows follow the sorted label order.  All rewrite operations (local
complementation, pivot, deletion) return new Graph values, so graphs can be
shared freely between threads and used as dictionary keys.

A sequence of local complementations is represented as a plain tuple of
vertex labels, applied first entry first.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Sequence

from . import _kernels as kernels
from .errors import GraphError, ParseError

__all__ = ["Graph", "LCSequence", "parse_graph", "format_graph"]

LCSequence = tuple[int, ...]


class Graph:
    """Undirected simple graph; vertices are nonnegative integer labels."""

    __slots__ = ("_labels", "_rows", "_pos")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
    ):
        label_set = set()
        for v in vertices:
            _check_label(v)
            label_set.add(v)
        edge_list = []
        for u, v in edges:
            _check_label(u)
            _check_label(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            label_set.add(u)
            label_set.add(v)
            edge_list.append((u, v))
        labels = tuple(sorted(label_set))
        pos = {v: i for i, v in enumerate(labels)}
        rows = [0] * len(labels)
        for u, v in edge_list:
            rows[pos[u]] |= 1 << pos[v]
            rows[pos[v]] |= 1 << pos[u]
        self._labels = labels
        self._rows = tuple(rows)
        self._pos = pos

    @classmethod
    def _make(cls, labels: tuple[int, ...], rows: tuple[int, ...]) -> "Graph":
        """Trusted constructor from sorted labels and consistent bit rows."""
        g = object.__new__(cls)
        g._labels = labels
        g._rows = rows
        g._pos = {v: i for i, v in enumerate(labels)}
        return g

    # ------------------------------------------------------------------
    # structure generators

    @classmethod
    def empty(cls, vertices: Iterable[int]) -> "Graph":
        return cls(vertices=vertices)

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        return cls(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]])

    @classmethod
    def path(cls, vertices: Sequence[int]) -> "Graph":
        """Path visiting the given vertices in the given order."""
        return cls(vertices, list(zip(vertices, vertices[1:])))

    @classmethod
    def cycle(cls, vertices: Sequence[int]) -> "Graph":
        if len(vertices) < 3:
            raise GraphError("a cycle needs at least three vertices")
        edges = list(zip(vertices, vertices[1:])) + [(vertices[-1], vertices[0])]
        return cls(vertices, edges)

    @classmethod
    def star(cls, center: int, leaves: Iterable[int]) -> "Graph":
        return cls([center], [(center, leaf) for leaf in leaves])

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def adjacency_rows(self) -> tuple[int, ...]:
        """Bit rows in sorted-label position order (row i = mask of N(i))."""
        return self._rows

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i, r in enumerate(self._rows):
            m = r >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((self._labels[i], self._labels[j]))
                m >>= 1
                j += 1
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        """Index of label v in sorted order; raises for unknown vertices."""
        try:
            return self._pos[v]
        except KeyError:
            raise GraphError(f"vertex not in graph: {v!r}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self._rows[self.position(v)]
        out = []
        while m:
            low = m & -m
            out.append(self._labels[low.bit_length() - 1])
            m ^= low
        return tuple(out)

    def degree(self, v: int) -> int:
        return self._rows[self.position(v)].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[self.position(u)] >> self.position(v) & 1)

    # ------------------------------------------------------------------
    # rewrite operations

    def local_complement(self, v: int) -> "Graph":
        """Complement the induced subgraph on the neighbourhood of v."""
        i = self.position(v)
        return Graph._make(self._labels, kernels.lc_rows(self._rows, i))

    def pivot(self, u: int, v: int) -> "Graph":
        """Pivot on the edge {u, v}; composition of three complementations."""
        iu, iv = self.position(u), self.position(v)
        if not (self._rows[iu] >> iv) & 1:
            raise GraphError(f"pivot requires an edge: {u} and {v} are not adjacent")
        return Graph._make(self._labels, kernels.pivot_rows(self._rows, iu, iv))

    def canonical_pivot(self, v: int) -> "Graph":
        """Pivot on {v, min N(v)}; identity when v is isolated."""
        i = self.position(v)
        row = self._rows[i]
        if row == 0:
            return self
        u = self._labels[(row & -row).bit_length() - 1]
        return self.pivot(v, u)

    def delete_vertex(self, v: int) -> "Graph":
        i = self.position(v)
        keep = [j for j in range(len(self._labels)) if j != i]
        labels = self._labels[:i] + self._labels[i + 1 :]
        return Graph._make(labels, kernels.induced_rows(self._rows, keep))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(self.position(v) for v in set(vertices))
        labels = tuple(self._labels[j] for j in keep)
        return Graph._make(labels, kernels.induced_rows(self._rows, keep))

    def apply_sequence(self, sequence: Iterable[int]) -> "Graph":
        """Apply local complementations left to right."""
        rows = self._rows
        for v in sequence:
            rows = kernels.lc_rows(rows, self.position(v))
        return Graph._make(self._labels, rows)

    # ------------------------------------------------------------------
    # queries

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        n = len(self._labels)
        seen = 0
        comps = []
        for i in range(n):
            if (seen >> i) & 1:
                continue
            comp = 1 << i
            frontier = 1 << i
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    low = m & -m
                    nxt |= self._rows[low.bit_length() - 1]
                    m ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(tuple(self._labels[j] for j in range(n) if (comp >> j) & 1))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def canonical_hash(self) -> str:
        """Deterministic digest; equal graphs hash equal across runs."""
        h = hashlib.sha256()
        h.update(b"V")
        for v in self._labels:
            h.update(str(v).encode())
            h.update(b",")
        h.update(b"E")
        for u, v in self.edges:
            h.update(f"{u}-{v};".encode())
        return h.hexdigest()

    def validate(self) -> None:
        """Check structural invariants; raises GraphError on violation."""
        labels = self._labels
        if list(labels) != sorted(set(labels)):
            raise GraphError("vertex labels must be distinct and sorted")
        for v in labels:
            _check_label(v)
        n = len(labels)
        if len(self._rows) != n:
            raise GraphError("row count does not match vertex count")
        for i, r in enumerate(self._rows):
            if r >> n:
                raise GraphError("adjacency row has bits outside the vertex range")
            if (r >> i) & 1:
                raise GraphError(f"self-loop at vertex {labels[i]}")
            for j in range(n):
                if (r >> j) & 1 and not (self._rows[j] >> i) & 1:
                    raise GraphError("adjacency matrix is not symmetric")

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._labels, self._rows))

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._labels)}, edges={list(self.edges)})"


def _check_label(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise GraphError(f"vertex labels must be nonnegative integers, got {v!r}")


def parse_graph(text: str) -> Graph:
    """Parse the plain text format.

    First line is "n m"; an optional second line "V: l1 l2 ..." lists vertex
    labels (needed for isolated vertices); then m lines "u v", one edge each.
    Self-loops, repeated edges and count mismatches are rejected.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty graph description")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be nonnegative")
    body = lines[1:]
    declared: set[int] = set()
    if body and body[0].startswith("V:"):
        try:
            declared = {int(tok) for tok in body[0][2:].split()}
        except ValueError:
            raise ParseError(f"bad vertex list line: {body[0]!r}") from None
        body = body[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    seen: set[tuple[int, int]] = set()
    vertices = set(declared)
    for ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f"bad edge line: {ln!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"bad edge line: {ln!r}") from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
        vertices.add(u)
        vertices.add(v)
    if len(vertices) != n:
        raise ParseError(f"header declares {n} vertices, description has {len(vertices)}")
    try:
        return Graph(vertices, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    """Serialize a graph to the plain text format; parse_graph round-trips."""
    edges = g.edges
    lines = [f"{g.n} {len(edges)}"]
    in_edge = {u for e in edges for u in e}
    isolated = [v for v in g.vertices if v not in in_edge]
    if isolated:
        lines.append("V: " + " ".join(str(v) for v in g.vertices))
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
