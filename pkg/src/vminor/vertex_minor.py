"""Local-complementation orbits and the vertex-minor decision algorithm.

A graph h is a vertex-minor of g when some sequence of local
complementations followed by deletion of the other vertices turns g into
h on V(h) exactly.  The decision procedure branches over the three ways a
non-target vertex can leave (plain deletion, complement-then-delete,
pivot-then-delete) and bottoms out in an LC-equivalence check by orbit
search; every positive answer carries a replayable witness sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError, SizeLimitError
from .graph import Graph, LCSequence

__all__ = [
    "VMWitness",
    "DEFAULT_ORBIT_LIMIT",
    "lc_orbit",
    "lc_equivalent",
    "candidate_graphs",
    "is_vertex_minor",
    "vm_oracle_exhaustive",
    "is_qubit_minor",
    "has_ghz_minor",
    "method1_sequence",
]

DEFAULT_ORBIT_LIMIT = 10


@dataclass(frozen=True)
class VMWitness:
    """Replayable certificate: apply the sequence, keep the target vertices.

    stripped lists degree-zero target vertices that were set aside by the
    qubit-minor reduction; they take no part in the sequence check.
    """

    sequence: LCSequence
    target_vertices: tuple[int, ...]
    stripped: tuple[int, ...] = ()

    def replay(self, g: Graph) -> Graph:
        return g.apply_sequence(self.sequence).induced_subgraph(self.target_vertices)


def _check_orbit_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeLimitError(
            f"orbit search needs at most {limit} vertices, graph has {g.n}")


def lc_orbit(g: Graph, limit: int = DEFAULT_ORBIT_LIMIT) -> list[Graph]:
    """All graphs reachable by local complementations, in BFS order."""
    _check_orbit_size(g, limit)
    start = g.adjacency_rows
    seen = {start}
    queue = [start]
    out = [g]
    n = g.n
    from . import _kernels as kernels

    for rows in queue:
        for v in range(n):
            if rows[v] == 0:
                continue
            nxt = kernels.lc_rows(rows, v)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                out.append(Graph._make(g.vertices, nxt))
    return out


def lc_equivalent(g: Graph, h: Graph,
                  limit: int = DEFAULT_ORBIT_LIMIT) -> LCSequence | None:
    """Sequence m with apply_sequence(g, m) = h, or None if none exists.

    Orbit BFS with parent pointers; the returned sequence is one of the
    shortest.  Distinct vertex sets are a usage error, not a negative
    answer.
    """
    if g.vertices != h.vertices:
        raise GraphError("lc_equivalent needs two graphs on the same vertices")
    _check_orbit_size(g, limit)
    start = g.adjacency_rows
    goal = h.adjacency_rows
    if start == goal:
        return ()
    from . import _kernels as kernels

    parents: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {start: (start, -1)}
    queue = [start]
    n = g.n
    labels = g.vertices
    for rows in queue:
        for v in range(n):
            if rows[v] == 0:
                continue
            nxt = kernels.lc_rows(rows, v)
            if nxt in parents:
                continue
            parents[nxt] = (rows, v)
            if nxt == goal:
                seq: list[int] = []
                cur = nxt
                while cur != start:
                    cur, w = parents[cur]
                    seq.append(labels[w])
                return tuple(reversed(seq))
            queue.append(nxt)
    return None


def candidate_graphs(g: Graph, v: int) -> tuple[Graph, Graph, Graph]:
    """The three one-vertex-smaller graphs a vertex-minor can pass through.

    Deletion alone, complement-then-delete, pivot-then-delete; for an
    isolated v the complement and the pivot fix g, so all three coincide.
    """
    plain = g.delete_vertex(v)
    return (
        plain,
        g.local_complement(v).delete_vertex(v),
        g.canonical_pivot(v).delete_vertex(v),
    )


def _pivot_prefix(g: Graph, v: int) -> LCSequence:
    # canonical pivot on {v, u} expands to complementations at u, v, u
    u = min(g.neighbors(v))
    return (u, v, u)


def is_vertex_minor(g: Graph, h: Graph, *,
                    orbit_limit: int = DEFAULT_ORBIT_LIMIT,
                    memo: set | bool | None = None,
                    stats: dict | None = None) -> VMWitness | None:
    """Decide h < g; on success return a witness m with τ_m(g)[V(h)] = h.

    Recursive three-way branch on the smallest non-target vertex, trying
    deletion, then complement, then pivot; the base case resolves
    LC-equivalence exactly, so the witness gives equality on V(h), not
    just equivalence.  A failure memo (keyed on the current graph) prunes
    re-derived dead ends; pass a set to share it across calls with the
    same target, or False to disable.  stats["expansions"] counts visited
    nodes when a dict is supplied.
    """
    if not set(h.vertices) <= set(g.vertices):
        return None
    failed: set | None
    if memo is False:
        failed = None
    elif memo is None:
        failed = set()
    else:
        failed = memo
    target = set(h.vertices)

    def rec(cur: Graph) -> LCSequence | None:
        if stats is not None:
            stats["expansions"] = stats.get("expansions", 0) + 1
        key = (cur.vertices, cur.adjacency_rows)
        if failed is not None and key in failed:
            return None
        extra = [v for v in cur.vertices if v not in target]
        if not extra:
            seq = lc_equivalent(cur, h, orbit_limit)
            if seq is None and failed is not None:
                failed.add(key)
            return seq
        v = extra[0]
        if cur.degree(v) == 0:
            seq = rec(cur.delete_vertex(v))
            if seq is not None:
                return seq
        else:
            seq = rec(cur.delete_vertex(v))
            if seq is not None:
                return seq
            seq = rec(cur.local_complement(v).delete_vertex(v))
            if seq is not None:
                return (v,) + seq
            prefix = _pivot_prefix(cur, v)
            seq = rec(cur.canonical_pivot(v).delete_vertex(v))
            if seq is not None:
                return prefix + seq
        if failed is not None:
            failed.add(key)
        return None

    seq = rec(g)
    if seq is None:
        return None
    return VMWitness(sequence=seq, target_vertices=h.vertices)


def vm_oracle_exhaustive(g: Graph, h: Graph,
                         limit: int = DEFAULT_ORBIT_LIMIT) -> bool:
    """Decision by brute force: some orbit member induces h on V(h).

    Induced subgraphs of orbit members range over every τ_m(g)[V(h)], so
    this is the definition spelled out; independent of the branching
    algorithm and used to cross-check it.
    """
    if not set(h.vertices) <= set(g.vertices):
        return False
    goal = h.adjacency_rows
    vh = h.vertices
    for member in lc_orbit(g, limit):
        if member.induced_subgraph(vh).adjacency_rows == goal:
            return True
    return False


def is_qubit_minor(g: Graph, h: Graph, *,
                   orbit_limit: int = DEFAULT_ORBIT_LIMIT,
                   memo: set | bool | None = None) -> VMWitness | None:
    """Decide the state version of the minor relation.

    Isolated target vertices only need their qubit present: a measured
    qubit is rotated back to the free state by a local Clifford, so they
    are split off first and the rest is an ordinary vertex-minor query.
    """
    stripped = tuple(v for v in h.vertices if h.degree(v) == 0)
    if not set(stripped) <= set(g.vertices):
        return None
    core = h.induced_subgraph(v for v in h.vertices if h.degree(v) > 0)
    witness = is_vertex_minor(g, core, orbit_limit=orbit_limit, memo=memo)
    if witness is None:
        return None
    return VMWitness(sequence=witness.sequence,
                     target_vertices=witness.target_vertices,
                     stripped=stripped)


def has_ghz_minor(g: Graph, nodes, *,
                  orbit_limit: int = DEFAULT_ORBIT_LIMIT) -> VMWitness | None:
    """Witness that the fully-connected state on `nodes` is reachable."""
    nodes = tuple(sorted(set(nodes)))
    if len(nodes) < 2:
        raise GraphError("a shared state needs at least two nodes")
    missing = [v for v in nodes if v not in g]
    if missing:
        raise GraphError(f"nodes not in graph: {missing}")
    target = Graph.complete(nodes)
    return is_vertex_minor(g, target, orbit_limit=orbit_limit)


def method1_sequence(g: Graph, h: Graph, *,
                     orbit_limit: int = DEFAULT_ORBIT_LIMIT) -> LCSequence | None:
    """Witness sequence by iterated re-decision.

    Peels one non-target vertex per round, keeping whichever of the three
    candidate rewrites still has h as a vertex-minor (checked with the
    decision procedure, sharing one failure memo across rounds since the
    target never changes), then closes with the exact LC-equivalence fix.
    """
    if not set(h.vertices) <= set(g.vertices):
        return None
    failed: set = set()
    if is_vertex_minor(g, h, orbit_limit=orbit_limit, memo=failed) is None:
        return None
    target = set(h.vertices)
    cur = g
    out: list[int] = []
    while True:
        extra = [v for v in cur.vertices if v not in target]
        if not extra:
            break
        v = extra[0]
        if cur.degree(v) == 0:
            options = [((), cur.delete_vertex(v))]
        else:
            options = [
                ((), cur.delete_vertex(v)),
                ((v,), cur.local_complement(v).delete_vertex(v)),
                (_pivot_prefix(cur, v), cur.canonical_pivot(v).delete_vertex(v)),
            ]
        for prefix, cand in options:
            if is_vertex_minor(cand, h, orbit_limit=orbit_limit,
                               memo=failed) is not None:
                out.extend(prefix)
                cur = cand
                break
        else:
            raise AssertionError("positive instance lost all three branches")
    fix = lc_equivalent(cur, h, orbit_limit)
    if fix is None:
        raise AssertionError("peeled graph stopped being LC-equivalent")
    return tuple(out) + fix
