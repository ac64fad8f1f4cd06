"""Rank-decompositions and exact rank-width at small scale.

A rank-decomposition hangs the vertices on the leaves of a subcubic tree;
every tree edge splits the vertices in two and is charged the GF(2) rank
of the adjacency block across the split.  Rank-width minimizes the worst
edge over all decompositions.  The exact solver is a dynamic program over
vertex subsets (split cost is the subset's cut-rank, O(3^n) subset pairs
overall) with back-pointers for the witness tree; an independent solver
enumerating all cubic leaf-labelled trees backs it in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as kernels
from .errors import GraphError, SizeLimitError
from .graph import Graph

__all__ = [
    "RankDecomposition",
    "decomposition_width",
    "rank_width_exact",
    "rank_width_by_tree_enumeration",
    "DEFAULT_WIDTH_LIMIT",
]

DEFAULT_WIDTH_LIMIT = 12


@dataclass(frozen=True)
class RankDecomposition:
    """Subcubic tree with graph vertices on its leaves.

    edges are unordered node-id pairs; leaf_map pairs each graph vertex
    with its leaf node id.
    """

    edges: tuple[tuple[int, int], ...]
    leaf_map: tuple[tuple[int, int], ...]

    def nodes(self) -> set[int]:
        out = set()
        for a, b in self.edges:
            out.add(a)
            out.add(b)
        return out

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {}
        for a, b in self.edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        return adj

    def leaf_of(self, v: int) -> int:
        for vertex, node in self.leaf_map:
            if vertex == v:
                return node
        raise GraphError(f"vertex not in decomposition: {v}")

    def validate(self, g: Graph) -> None:
        adj = self.adjacency()
        nodes = self.nodes()
        if len(nodes) < 2:
            raise GraphError("decomposition tree needs at least two nodes")
        if len(self.edges) != len(set(frozenset(e) for e in self.edges)):
            raise GraphError("decomposition tree has a repeated edge")
        if len(self.edges) != len(nodes) - 1:
            raise GraphError("decomposition tree edge count is not nodes - 1")
        seen = {next(iter(nodes))}
        stack = list(seen)
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != nodes:
            raise GraphError("decomposition tree is not connected")
        for node, nbs in adj.items():
            if len(nbs) > 3:
                raise GraphError(f"tree node {node} has degree {len(nbs)} > 3")
        leaves = {node for node, nbs in adj.items() if len(nbs) == 1}
        mapped_vertices = [v for v, _ in self.leaf_map]
        mapped_nodes = [node for _, node in self.leaf_map]
        if len(set(mapped_vertices)) != len(mapped_vertices):
            raise GraphError("leaf_map maps a vertex twice")
        if len(set(mapped_nodes)) != len(mapped_nodes):
            raise GraphError("leaf_map reuses a leaf")
        if set(mapped_vertices) != set(g.vertices):
            raise GraphError("leaf_map does not cover the graph's vertices")
        if set(mapped_nodes) != leaves:
            raise GraphError("leaf_map is not a bijection onto the tree leaves")


def decomposition_width(g: Graph, d: RankDecomposition) -> int:
    """Maximum cut-rank over the tree's edge splits."""
    d.validate(g)
    adj = d.adjacency()
    node_vertex = {node: v for v, node in d.leaf_map}
    width = 0
    for a, b in d.edges:
        side = {a}
        stack = [a]
        while stack:
            for nb in adj[stack.pop()]:
                if nb == b or nb in side:
                    continue
                side.add(nb)
                stack.append(nb)
        vertices = [node_vertex[node] for node in side if node in node_vertex]
        width = max(width, _cut_rank_fast(g, vertices))
    return width


def _cut_rank_fast(g: Graph, vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << g.position(v)
    return _cut_rank_mask(g.adjacency_rows, g.n, mask)


def _cut_rank_mask(rows, n: int, mask: int) -> int:
    comp = ~mask & ((1 << n) - 1)
    side_rows = [rows[i] & comp for i in range(n) if (mask >> i) & 1]
    return kernels.gf2_rank(side_rows)


def rank_width_exact(g: Graph, limit: int = DEFAULT_WIDTH_LIMIT
                     ) -> tuple[int, RankDecomposition | None]:
    """Rank-width with a witness decomposition achieving it.

    Subset DP: a subset's cost is the better of its two-way splits, each
    split paying the subset's own cut-rank and recursing.  Graphs with
    fewer than two vertices have width 0 and no decomposition (a tree
    needs two nodes).
    """
    n = g.n
    if n > limit:
        raise SizeLimitError(
            f"exact rank-width needs at most {limit} vertices, graph has {n}")
    if n <= 1:
        return 0, None
    rows = g.adjacency_rows
    full = (1 << n) - 1
    cutrk = [0] * (full + 1)
    for mask in range(1, full + 1):
        cutrk[mask] = _cut_rank_mask(rows, n, mask)
    dp = [0] * (full + 1)
    split = [0] * (full + 1)
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            dp[mask] = cutrk[mask]
            continue
        low = mask & -mask
        best = n + 1
        best_sub = 0
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                cand = dp[sub] if dp[sub] > dp[mask ^ sub] else dp[mask ^ sub]
                if cand < best:
                    best = cand
                    best_sub = sub
            sub = (sub - 1) & mask
        dp[mask] = max(cutrk[mask], best)
        split[mask] = best_sub
    labels = g.vertices
    edges: list[tuple[int, int]] = []
    leaf_map: list[tuple[int, int]] = []
    counter = n

    def build(mask: int) -> int:
        nonlocal counter
        if mask & (mask - 1) == 0:
            i = mask.bit_length() - 1
            leaf_map.append((labels[i], i))
            return i
        a = build(split[mask])
        b = build(mask ^ split[mask])
        node = counter
        counter += 1
        edges.append((node, a))
        edges.append((node, b))
        return node

    top = split[full]
    a = build(top)
    b = build(full ^ top)
    edges.append((a, b))
    witness = RankDecomposition(tuple(edges), tuple(sorted(leaf_map)))
    return dp[full], witness


def _cubic_trees(n: int):
    """All cubic trees with leaves 0..n-1, by iterative edge subdivision."""
    if n == 2:
        yield [(0, 1)]
        return

    def grow(edges: list[tuple[int, int]], k: int, next_node: int):
        if k == n:
            yield edges
            return
        for i in range(len(edges)):
            a, b = edges[i]
            w = next_node
            rest = edges[:i] + edges[i + 1 :]
            yield from grow(rest + [(a, w), (w, b), (w, k)], k + 1, next_node + 1)

    yield from grow([(0, 1)], 2, n)


def rank_width_by_tree_enumeration(g: Graph, limit: int = 6) -> int:
    """Independent exact solver: minimum width over every cubic tree.

    Degree-two tree nodes never help (suppressing one keeps the same edge
    splits), so scanning the (2n-5)!! cubic leaf-labelled trees covers the
    subcubic minimum.  Exponential twice over; n is capped accordingly.
    """
    n = g.n
    if n > limit:
        raise SizeLimitError(
            f"tree enumeration needs at most {limit} vertices, graph has {n}")
    if n <= 1:
        return 0
    labels = g.vertices
    best = n + 1
    for edges in _cubic_trees(n):
        d = RankDecomposition(tuple(edges),
                              tuple((labels[i], i) for i in range(n)))
        best = min(best, decomposition_width(g, d))
    return best
