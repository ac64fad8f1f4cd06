"""Eulerian tripartitions, switchings, and the selection-based witness method.

Every tripartition of the vertex set assigns one of three directions to
each vertex.  A tripartition is Eulerian when no nonzero generated triple
fits inside it; the Eulerian ones index exactly the locally equivalent
graphs, with the all-first-part tripartition describing the graph itself.
The predicates here are direct GF(2) computations shadowing the formula
family in mslogic: membership reconstructs the generator subset from the
last two parts, the Eulerian test checks one matrix for full rank, and
the described graph reads neighbourhoods off the columns of its inverse.
Cross-checks against the brute-force formula semantics live in the tests.

Switching walks two tripartitions toward each other one vertex at a time;
the collected switch points replay as local complementations, which turns
any satisfying tripartition into a witness sequence (the selection-based
sequence method).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ConsistencyError, GraphError, SizeLimitError
from .gf2 import inverse_gf2, matvec_gf2
from .graph import Graph, LCSequence
from . import mslogic
from .mslogic import (
    SET_QUANTIFIER_LIMIT,
    build_vm_prime,
    selection_bruteforce,
    vm_vertex_variable,
)

__all__ = [
    "EulerianVector",
    "eulerian_identity",
    "is_member_triple",
    "member_triples",
    "is_eulerian",
    "eulerian_vectors",
    "graph_from_eulerian",
    "switch",
    "switching_sequence",
    "describes_minor",
    "method2_sequence",
]

_PART_NAMES = ("X_e", "Y_e", "Z_e")


@dataclass(frozen=True)
class EulerianVector:
    """Tripartition of the vertex set, one direction per vertex.

    The class only guarantees disjointness; whether the parts cover a
    given graph's vertices (and pass the Eulerian test) is checked by the
    functions that take the graph.
    """

    x_part: frozenset[int]
    y_part: frozenset[int]
    z_part: frozenset[int]

    def __init__(self, x_part, y_part, z_part):
        object.__setattr__(self, "x_part", frozenset(x_part))
        object.__setattr__(self, "y_part", frozenset(y_part))
        object.__setattr__(self, "z_part", frozenset(z_part))
        if (self.x_part & self.y_part) or (self.x_part & self.z_part) \
                or (self.y_part & self.z_part):
            raise GraphError("tripartition parts must be pairwise disjoint")

    @classmethod
    def coerce(cls, t) -> "EulerianVector":
        if isinstance(t, cls):
            return t
        x, y, z = t
        return cls(x, y, z)

    @property
    def parts(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.x_part, self.y_part, self.z_part)

    def part_of(self, v: int) -> int:
        """0, 1 or 2 for the part holding v."""
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise GraphError(f"vertex {v} is in no part")

    def move(self, v: int, part: int) -> "EulerianVector":
        """Copy with v placed in the given part."""
        sets = [set(p) for p in self.parts]
        for p in sets:
            p.discard(v)
        sets[part].add(v)
        return EulerianVector(*sets)

    def assignment(self, names: tuple[str, str, str] = _PART_NAMES) -> dict:
        return dict(zip(names, self.parts))

    def __repr__(self) -> str:
        fmt = lambda s: "{" + ", ".join(map(str, sorted(s))) + "}"
        return f"EulerianVector({fmt(self.x_part)}, {fmt(self.y_part)}, {fmt(self.z_part)})"


def eulerian_identity(g: Graph) -> EulerianVector:
    """The tripartition describing g itself: every vertex in the first part.

    Its membership matrix is the identity, so it passes the Eulerian test
    on every graph and is the canonical start of every switching walk.
    """
    return EulerianVector(g.vertices, (), ())


def _coerce_triple(g: Graph, t) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    if isinstance(t, EulerianVector):
        x, y, z = t.parts
    else:
        x, y, z = (frozenset(p) for p in t)
    allv = set(g.vertices)
    for part in (x, y, z):
        bad = part - allv
        if bad:
            raise GraphError(f"labels not in graph: {sorted(bad)}")
    if (x & y) or (x & z) or (y & z):
        raise GraphError("tripartition parts must be pairwise disjoint")
    return x, y, z


def _triple_from_mask(g: Graph, qmask: int):
    """The generated triple of one generator subset, as position masks."""
    adj = g.adjacency_rows
    xm = ym = zm = 0
    for i in range(g.n):
        odd = (adj[i] & qmask).bit_count() & 1
        if (qmask >> i) & 1:
            if odd:
                zm |= 1 << i
            else:
                ym |= 1 << i
        elif odd:
            xm |= 1 << i
    return xm, ym, zm


def _mask_of(g: Graph, part) -> int:
    mask = 0
    for v in part:
        mask |= 1 << g.position(v)
    return mask


def _labels_of(g: Graph, mask: int) -> frozenset[int]:
    labels = g.vertices
    return frozenset(labels[i] for i in range(g.n) if (mask >> i) & 1)


def is_member_triple(g: Graph, x, y, z) -> bool:
    """Whether (x, y, z) is one of the 2^n generated triples.

    The generator subset is forced to be the union of the last two parts,
    so membership is one parity recomputation and a comparison.
    """
    x, y, z = _coerce_triple(g, (x, y, z))
    qmask = _mask_of(g, y) | _mask_of(g, z)
    xm, ym, zm = _triple_from_mask(g, qmask)
    return (xm, ym, zm) == (_mask_of(g, x), _mask_of(g, y), _mask_of(g, z))


def member_triples(g: Graph):
    """All generated triples, one per generator subset, in mask order."""
    for qmask in range(1 << g.n):
        xm, ym, zm = _triple_from_mask(g, qmask)
        yield (_labels_of(g, xm), _labels_of(g, ym), _labels_of(g, zm))


def _membership_rows(g: Graph, x, y, z) -> list[int]:
    """Row v reads the direction constraint of v against a generator vector."""
    adj = g.adjacency_rows
    rows = []
    for i, v in enumerate(g.vertices):
        if v in x:
            rows.append(1 << i)
        elif v in y:
            rows.append(adj[i])
        else:
            rows.append(adj[i] ^ (1 << i))
    return rows


def is_eulerian(g: Graph, t, method: str = "linear",
                limit: int = SET_QUANTIFIER_LIMIT) -> bool:
    """Whether the tripartition t is Eulerian for g.

    Non-covering (but disjoint) triples simply fail, matching the formula;
    overlapping parts or foreign labels are usage errors.  Methods:
    "linear" checks the membership matrix for full rank, "enumerate" scans
    the 2^n generated triples for one that fits inside t, "formula"
    evaluates the brute-force logic semantics (very small graphs only).
    """
    x, y, z = _coerce_triple(g, t)
    if x | y | z != set(g.vertices):
        return False
    if method == "linear":
        rows = _membership_rows(g, x, y, z)
        from . import _kernels as kernels
        return kernels.gf2_rank(rows) == g.n
    if method == "enumerate":
        if g.n > limit:
            raise SizeLimitError(
                f"triple enumeration needs at most {limit} vertices, graph has {g.n}")
        for tx, ty, tz in member_triples(g):
            if (tx or ty or tz) and tx <= x and ty <= y and tz <= z:
                return False
        return True
    if method == "formula":
        if g.n > limit:
            raise SizeLimitError(
                f"formula evaluation needs at most {limit} vertices, graph has {g.n}")
        phi = mslogic.eul_formula(*_PART_NAMES)
        return mslogic.evaluate(g, phi, dict(zip(_PART_NAMES, (x, y, z))))
    raise ValueError(f"unknown method: {method!r}")


def _complete_vectors(g: Graph):
    """All tripartitions covering V(g), identity first, in part-code order."""
    labels = g.vertices
    for codes in itertools.product(range(3), repeat=g.n):
        parts = ([], [], [])
        for v, c in zip(labels, codes):
            parts[c].append(v)
        yield EulerianVector(*parts)


def eulerian_vectors(g: Graph, limit: int = SET_QUANTIFIER_LIMIT) -> list[EulerianVector]:
    """All Eulerian tripartitions, in deterministic enumeration order."""
    if g.n > limit:
        raise SizeLimitError(
            f"tripartition enumeration needs at most {limit} vertices, graph has {g.n}")
    return [t for t in _complete_vectors(g) if is_eulerian(g, t)]


def graph_from_eulerian(g: Graph, t, method: str = "linear",
                        limit: int = SET_QUANTIFIER_LIMIT) -> Graph:
    """The locally equivalent graph described by an Eulerian tripartition.

    For each vertex v there is exactly one generated triple that touches v
    and fits inside the tripartition away from v; the neighbours of v are
    the other vertices it touches.  The linear method reads all of them
    off the inverse of the membership matrix; "enumerate" scans generated
    triples; "formula" evaluates the adjacency formula pairwise.
    """
    x, y, z = _coerce_triple(g, t)
    if not is_eulerian(g, (x, y, z)):
        raise GraphError("tripartition is not Eulerian for this graph")
    n = g.n
    if method == "linear":
        rows = _membership_rows(g, x, y, z)
        inv = inverse_gf2(rows, n)
        adj = g.adjacency_rows
        new_rows = []
        for i in range(n):
            q = 0
            for j in range(n):
                if (inv[j] >> i) & 1:
                    q |= 1 << j
            hits = q | matvec_gf2(adj, q)
            if not (hits >> i) & 1:
                raise ConsistencyError("base triple misses its own vertex")
            new_rows.append(hits & ~(1 << i))
        for i in range(n):
            for j in range(i):
                if ((new_rows[i] >> j) & 1) != ((new_rows[j] >> i) & 1):
                    raise ConsistencyError("described adjacency is not symmetric")
        return Graph._make(g.vertices, tuple(new_rows))
    if method == "enumerate":
        if n > limit:
            raise SizeLimitError(
                f"triple enumeration needs at most {limit} vertices, graph has {g.n}")
        neigh: dict[int, frozenset[int]] = {}
        for v in g.vertices:
            found = None
            for tx, ty, tz in member_triples(g):
                hit = tx | ty | tz
                if v not in hit:
                    continue
                if tx - {v} <= x and ty - {v} <= y and tz - {v} <= z:
                    if found is not None:
                        raise ConsistencyError(f"base triple at {v} is not unique")
                    found = hit - {v}
            if found is None:
                raise ConsistencyError(f"no base triple at {v}")
            neigh[v] = found
        edges = []
        for v in g.vertices:
            for u in neigh[v]:
                if (u not in neigh) or (v not in neigh[u]):
                    raise ConsistencyError("described adjacency is not symmetric")
                if u < v:
                    edges.append((u, v))
        return Graph(g.vertices, edges)
    if method == "formula":
        if n > limit:
            raise SizeLimitError(
                f"formula evaluation needs at most {limit} vertices, graph has {g.n}")
        used = set(_PART_NAMES) | {"u", "v"}
        phi = mslogic.adj_formula("u", "v", *_PART_NAMES, used=used)
        base = dict(zip(_PART_NAMES, (x, y, z)))
        edges = []
        vs = g.vertices
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                if mslogic.evaluate(g, phi, {**base, "u": a, "v": b}):
                    edges.append((a, b))
        return Graph(vs, edges)
    raise ValueError(f"unknown method: {method!r}")


def switch(g: Graph, t, v: int) -> EulerianVector:
    """The unique other Eulerian tripartition differing from t only at v."""
    t = EulerianVector.coerce(t)
    if not is_eulerian(g, t):
        raise GraphError("switching starts from an Eulerian tripartition")
    cur = t.part_of(v)
    passing = [t.move(v, p) for p in range(3)
               if p != cur and is_eulerian(g, t.move(v, p))]
    if len(passing) != 1:
        raise ConsistencyError(
            f"expected exactly one switch of {v}, found {len(passing)}")
    return passing[0]


def switching_sequence(g: Graph, t) -> LCSequence:
    """Switch points taking the identity tripartition to t.

    Walks the two tripartitions toward each other one vertex at a time;
    at each disagreeing vertex at least one side can switch into
    agreement because four values cannot all differ in a three-element
    alphabet.  The identity-side points followed by the reversed
    target-side points replay as local complementations producing the
    described graph, with at most two entries per vertex.
    """
    target = EulerianVector.coerce(t)
    if not is_eulerian(g, target):
        raise GraphError("switching walk needs an Eulerian tripartition")
    b = eulerian_identity(g)
    c = target
    m1: list[int] = []
    m2: list[int] = []
    for v in g.vertices:
        if b.part_of(v) == c.part_of(v):
            continue
        bs = switch(g, b, v)
        if bs.part_of(v) == c.part_of(v):
            b = bs
            m1.append(v)
            continue
        cs = switch(g, c, v)
        if cs.part_of(v) == b.part_of(v):
            c = cs
            m2.append(v)
            continue
        b, c = bs, switch(g, c, v)
        m1.append(v)
        m2.append(v)
        if b.part_of(v) != c.part_of(v):
            raise ConsistencyError("switch walk failed to converge at a vertex")
    if b != c:
        raise ConsistencyError("switch walk ended on different tripartitions")
    return tuple(m1) + tuple(reversed(m2))


def describes_minor(g: Graph, t, h: Graph) -> bool:
    """Whether the described graph induces h on V(h)."""
    if not set(h.vertices) <= set(g.vertices):
        return False
    return graph_from_eulerian(g, t).induced_subgraph(h.vertices) == h


def method2_sequence(g: Graph, h: Graph, *, method: str = "linear",
                     limit: int = SET_QUANTIFIER_LIMIT) -> LCSequence | None:
    """Witness sequence by tripartition selection plus a switching walk.

    Scans tripartitions for one whose described graph induces h, then
    replays the switching walk to it.  The linear method enumerates the
    3^n tripartitions with the algebraic predicates; "formula" runs the
    brute-force selection solver on the open vertex-minor formula (tiny
    graphs only) and reads the tripartition out of the assignment.
    """
    if not set(h.vertices) <= set(g.vertices):
        return None
    if method == "linear":
        if g.n > limit:
            raise SizeLimitError(
                f"tripartition scan needs at most {limit} vertices, graph has {g.n}")
        for t in _complete_vectors(g):
            if not is_eulerian(g, t):
                continue
            if graph_from_eulerian(g, t).induced_subgraph(h.vertices) == h:
                return _checked_walk(g, t, h)
        return None
    if method == "formula":
        phi = build_vm_prime(h)
        # targets below two vertices have no adjacency constraints, so
        # their vertex variables never occur in the formula
        free = mslogic.free_variables(phi)
        partial = {vm_vertex_variable(v): v for v in h.vertices
                   if vm_vertex_variable(v) in free}
        got = selection_bruteforce(g, phi, partial, limit=limit)
        if got is None:
            return None
        t = EulerianVector(got["X_e"], got["Y_e"], got["Z_e"])
        return _checked_walk(g, t, h)
    raise ValueError(f"unknown method: {method!r}")


def _checked_walk(g: Graph, t: EulerianVector, h: Graph) -> LCSequence:
    m = switching_sequence(g, t)
    if g.apply_sequence(m).induced_subgraph(h.vertices) != h:
        raise ConsistencyError("switching walk does not replay to the target")
    return m
