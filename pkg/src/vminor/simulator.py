"""Dense statevector oracle for graph states.

Everything the graph-rewrite layer claims is checked here against actual
quantum states: stabilizer fixed points, the complementation Clifford,
measurement projectors with their corrections, Schmidt ranks across cuts.
Qubits follow ascending vertex label; basis index bit i belongs to the
i-th smallest label (big-endian).  Amplitudes of an n-qubit graph state
are 2^(-n/2) times a sign counting edges inside the support, so exact
assertions are safe at tight tolerances for every size this module
accepts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, GraphError, SizeLimitError
from .graph import Graph

__all__ = [
    "StateVector",
    "SIMULATOR_LIMIT",
    "graph_state",
    "computational_ket",
    "apply_single_qubit",
    "apply_pauli",
    "apply_local_clifford_Uv",
    "apply_clifford_stage",
    "stabilizer_holds",
    "project_measure",
    "equal_up_to_global_phase",
    "factor_out_measured",
    "embed_with_fixed_bits",
    "single_qubit_cliffords",
    "find_local_clifford_match",
    "verify_measurement_rule",
    "RuleReport",
    "schmidt_rank_log2",
    "verification_suite",
]

SIMULATOR_LIMIT = 12

_EXACT_TOL = 1e-12
_STRUCT_TOL = 1e-9
_RANK_TOL = 1e-8

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)

_PAULI = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}

# exp(-i pi/4 X) and exp(+i pi/4 Z), the two factors of the
# complementation Clifford
_SQRT_MINUS_IX = (np.cos(np.pi / 4) * _I2 - 1j * np.sin(np.pi / 4) * _X)
_SQRT_PLUS_IZ = np.diag(np.exp([1j * np.pi / 4, -1j * np.pi / 4]))


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over computational basis states of named qubits."""

    amplitudes: np.ndarray
    qubit_order: tuple[int, ...]

    def __post_init__(self):
        n = len(self.qubit_order)
        if self.amplitudes.shape != (1 << n,):
            raise GraphError("amplitude count must be 2^(number of qubits)")
        if tuple(sorted(self.qubit_order)) != self.qubit_order:
            raise GraphError("qubit_order must be ascending")

    @property
    def n(self) -> int:
        return len(self.qubit_order)

    def axis_of(self, v: int) -> int:
        try:
            return self.qubit_order.index(v)
        except ValueError:
            raise GraphError(f"qubit not in state: {v}") from None

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        nrm = self.norm()
        if nrm == 0.0:
            raise ConsistencyError("cannot normalize the zero vector")
        return StateVector(self.amplitudes / nrm, self.qubit_order)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n)


def graph_state(g: Graph, limit: int = SIMULATOR_LIMIT) -> StateVector:
    """The state with a plus on every vertex and a controlled phase per edge."""
    n = g.n
    if n > limit:
        raise SizeLimitError(
            f"statevector needs at most {limit} qubits, graph has {n}")
    amp = np.full(1 << n, 2.0 ** (-n / 2), dtype=complex)
    idx = np.arange(1 << n)
    for a, b in g.edges:
        ia, ib = g.position(a), g.position(b)
        both = ((idx >> (n - 1 - ia)) & 1) & ((idx >> (n - 1 - ib)) & 1)
        amp[both == 1] *= -1.0
    return StateVector(amp, g.vertices)


def computational_ket(bits: dict[int, int]) -> StateVector:
    """Product state |bits⟩ over the given labels."""
    order = tuple(sorted(bits))
    n = len(order)
    index = 0
    for i, v in enumerate(order):
        if bits[v]:
            index |= 1 << (n - 1 - i)
    amp = np.zeros(1 << n, dtype=complex)
    amp[index] = 1.0
    return StateVector(amp, order)


def apply_single_qubit(state: StateVector, v: int, mat: np.ndarray) -> StateVector:
    axis = state.axis_of(v)
    tens = state.tensor()
    moved = np.moveaxis(tens, axis, 0)
    out = np.tensordot(mat, moved, axes=([1], [0]))
    out = np.moveaxis(out, 0, axis)
    return StateVector(out.reshape(-1).copy(), state.qubit_order)


def apply_pauli(state: StateVector, ops: dict[int, str]) -> StateVector:
    for v, name in ops.items():
        if name != "I":
            state = apply_single_qubit(state, v, _PAULI[name])
    return state


def apply_local_clifford_Uv(state: StateVector, g: Graph, v: int) -> StateVector:
    """The complementation Clifford at v for the current graph g."""
    if state.qubit_order != g.vertices:
        raise GraphError("state and graph qubits differ")
    out = apply_single_qubit(state, v, _SQRT_MINUS_IX)
    for u in g.neighbors(v):
        out = apply_single_qubit(out, u, _SQRT_PLUS_IZ)
    return out


def apply_clifford_stage(state: StateVector, g: Graph, sequence) -> tuple[StateVector, Graph]:
    """Fold the complementation Clifford along a sequence, tracking the graph."""
    cur = g
    for v in sequence:
        state = apply_local_clifford_Uv(state, cur, v)
        cur = cur.local_complement(v)
    return state, cur


def stabilizer_holds(state: StateVector, g: Graph, v: int,
                     tol: float = _EXACT_TOL) -> bool:
    """Whether X at v with Z on its neighbourhood fixes the state exactly."""
    ops = {v: "X"}
    for u in g.neighbors(v):
        ops[u] = "Z"
    moved = apply_pauli(state, ops)
    return bool(np.max(np.abs(moved.amplitudes - state.amplitudes)) <= tol)


_BASIS_KETS = {
    ("Z", 0): np.array([1, 0], dtype=complex),
    ("Z", 1): np.array([0, 1], dtype=complex),
    ("X", 0): np.array([1, 1], dtype=complex) / np.sqrt(2),
    ("X", 1): np.array([1, -1], dtype=complex) / np.sqrt(2),
    ("Y", 0): np.array([1, 1j], dtype=complex) / np.sqrt(2),
    ("Y", 1): np.array([1, -1j], dtype=complex) / np.sqrt(2),
}


def project_measure(state: StateVector, v: int, basis: str,
                    outcome: int) -> tuple[StateVector, float]:
    """Apply the rank-one projector; returns the unnormalized state and its
    probability (the squared norm)."""
    if basis not in ("X", "Y", "Z"):
        raise GraphError(f"unknown basis: {basis!r}")
    if outcome not in (0, 1):
        raise GraphError(f"outcome must be 0 or 1, got {outcome!r}")
    ket = _BASIS_KETS[(basis, outcome)]
    proj = np.outer(ket, ket.conj())
    out = apply_single_qubit(state, v, proj)
    prob = float(np.vdot(out.amplitudes, out.amplitudes).real)
    return out, prob


def equal_up_to_global_phase(a: StateVector, b: StateVector,
                             tol: float = _STRUCT_TOL) -> bool:
    if a.qubit_order != b.qubit_order:
        return False
    na, nb = a.norm(), b.norm()
    if na == 0.0 or nb == 0.0:
        return na == nb
    overlap = abs(np.vdot(a.amplitudes, b.amplitudes)) / (na * nb)
    return bool(overlap >= 1.0 - tol)


def factor_out_measured(state: StateVector, v: int, outcome: int,
                        tol: float = _STRUCT_TOL) -> StateVector:
    """Drop a qubit resting in a computational basis state."""
    axis = state.axis_of(v)
    tens = np.moveaxis(state.tensor(), axis, 0)
    keep = tens[outcome].reshape(-1).copy()
    other = tens[1 - outcome].reshape(-1)
    total = state.norm()
    if total == 0.0 or np.linalg.norm(other) > tol * total:
        raise ConsistencyError(
            f"qubit {v} is not in the computational state {outcome}")
    order = tuple(u for u in state.qubit_order if u != v)
    return StateVector(keep, order)


def embed_with_fixed_bits(state: StateVector, fixed: dict[int, int],
                          full_order: tuple[int, ...]) -> StateVector:
    """Tensor the state with computational kets on the fixed labels,
    laid out in the ascending order of full_order."""
    if set(state.qubit_order) | set(fixed) != set(full_order) \
            or set(state.qubit_order) & set(fixed):
        raise GraphError("fixed bits must complement the state's qubits")
    n = len(full_order)
    small_pos = {v: i for i, v in enumerate(state.qubit_order)}
    amp = np.zeros(1 << n, dtype=complex)
    k = len(small_pos)
    for idx_small in range(1 << k):
        idx = 0
        for i, v in enumerate(full_order):
            if v in fixed:
                bit = fixed[v]
            else:
                bit = (idx_small >> (k - 1 - small_pos[v])) & 1
            idx |= bit << (n - 1 - i)
        amp[idx] = state.amplitudes[idx_small]
    return StateVector(amp, tuple(full_order))


def single_qubit_cliffords() -> list[np.ndarray]:
    """The 24 phase-normalized single-qubit Clifford unitaries."""

    def canon(m: np.ndarray) -> bytes:
        flat = m.reshape(-1)
        k = np.argmax(np.abs(flat) > 1e-9)
        m = m * (abs(flat[k]) / flat[k])
        # + 0.0 folds negative zeros, which hash differently
        return (np.round(m, 9) + 0.0).tobytes()

    gates = [_H, _S]
    seen = {canon(_I2): _I2}
    queue = [_I2]
    while queue:
        cur = queue.pop()
        for gmat in gates:
            nxt = gmat @ cur
            key = canon(nxt)
            if key not in seen:
                seen[key] = nxt
                queue.append(nxt)
    group = list(seen.values())
    if len(group) != 24:
        raise ConsistencyError(f"Clifford closure found {len(group)} elements")
    return group


def _phase_canonical_bytes(vec: np.ndarray, decimals: int = 6) -> bytes:
    flat = vec / np.linalg.norm(vec)
    k = int(np.argmax(np.abs(flat) > 1e-7))
    z = flat[k]
    flat = flat * (abs(z) / z)
    return (np.round(flat, decimals) + 0.0).tobytes()


def find_local_clifford_match(got: StateVector, want: StateVector,
                              qubits) -> dict[int, np.ndarray] | None:
    """Single-qubit Cliffords on the given qubits taking want to got, up to
    global phase; meet-in-the-middle over the two halves of the qubit list."""
    qubits = list(qubits)
    if got.qubit_order != want.qubit_order:
        return None
    if not qubits:
        return {} if equal_up_to_global_phase(got, want) else None
    group = single_qubit_cliffords()
    half = len(qubits) // 2
    left, right = qubits[:half], qubits[half:]

    def products(side):
        for combo in itertools.product(range(24), repeat=len(side)):
            yield combo

    # (prod_left C_u)† got  ==  (prod_right C_u) want, up to phase
    table: dict[bytes, tuple[int, ...]] = {}
    for combo in products(left):
        vec = got
        for u, ci in zip(left, combo):
            vec = apply_single_qubit(vec, u, group[ci].conj().T)
        table.setdefault(_phase_canonical_bytes(vec.amplitudes), combo)
    for combo in products(right):
        vec = want
        for u, ci in zip(right, combo):
            vec = apply_single_qubit(vec, u, group[ci])
        key = _phase_canonical_bytes(vec.amplitudes)
        if key not in table:
            continue
        lcombo = table[key]
        match = {u: group[ci] for u, ci in zip(left, lcombo)}
        match.update({u: group[ci] for u, ci in zip(right, combo)})
        # hashing rounds; confirm on the actual vectors
        check = want
        for u, mat in match.items():
            check = apply_single_qubit(check, u, mat)
        if equal_up_to_global_phase(check, got):
            return match
    return None


@dataclass(frozen=True)
class RuleReport:
    """Outcome of one measurement-rule verification."""

    graph: Graph
    vertex: int
    basis: str
    ok: bool
    detail: str


def verify_measurement_rule(g: Graph, v: int, basis: str) -> RuleReport:
    """Check one projective measurement against its graph rewrite.

    Z is exact: the projected state must be the outcome ket tensored with
    the deleted graph's state, with Z corrections on the neighbourhood for
    the minus outcome and amplitude 2^(-1/2).  Y and X compare the rest of
    the system with the rewritten graph's state up to single-qubit
    Cliffords found by search.  For Y those sit on the former neighbours
    of v; for X the minus outcome also reaches the pivot partner's
    neighbours, so the support widens to N(v) with N(min N(v)) joined in.
    """
    if basis not in ("X", "Y", "Z"):
        raise GraphError(f"unknown basis: {basis!r}")
    state = graph_state(g)
    neighbors = g.neighbors(v)
    support = neighbors
    if basis == "Z":
        rewritten = g.delete_vertex(v)
    elif basis == "Y":
        rewritten = g.local_complement(v).delete_vertex(v)
    else:
        rewritten = g.canonical_pivot(v).delete_vertex(v)
        if neighbors:
            partner = min(neighbors)
            support = tuple(sorted(set(neighbors)
                                   | set(g.neighbors(partner)) - {v}))
    base = graph_state(rewritten)
    # X on an isolated vertex is deterministic: X_v is itself a stabilizer
    deterministic = basis == "X" and not neighbors
    for outcome in (0, 1):
        post, prob = project_measure(state, v, basis, outcome)
        expected_prob = (1.0 - outcome) if deterministic else 0.5
        if abs(prob - expected_prob) > _STRUCT_TOL:
            return RuleReport(g, v, basis, False,
                              f"outcome {outcome} has probability {prob:.6f}, "
                              f"expected {expected_prob}")
        if prob == 0.0 or (deterministic and outcome == 1):
            continue
        if basis == "Z":
            expected = base
            if outcome == 1:
                expected = apply_pauli(expected, {u: "Z" for u in neighbors})
            expected = embed_with_fixed_bits(expected, {v: outcome}, g.vertices)
            diff = np.max(np.abs(post.amplitudes
                                 - expected.amplitudes * 2.0 ** -0.5))
            if diff > _STRUCT_TOL:
                return RuleReport(g, v, basis, False,
                                  f"outcome {outcome} deviates by {diff:.2e}")
        else:
            ket = _BASIS_KETS[(basis, outcome)]
            axis = post.axis_of(v)
            tens = np.moveaxis(post.tensor(), axis, 0)
            rest = np.tensordot(ket.conj(), tens, axes=([0], [0]))
            rest_state = StateVector(rest.reshape(-1).copy(),
                                     tuple(u for u in g.vertices if u != v))
            if rest_state.norm() < 1e-9:
                return RuleReport(g, v, basis, False,
                                  f"outcome {outcome} left a zero remainder")
            match = find_local_clifford_match(rest_state.normalized(), base,
                                              support)
            if match is None:
                return RuleReport(g, v, basis, False,
                                  f"outcome {outcome}: no local-Clifford match "
                                  f"on {support}")
    return RuleReport(g, v, basis, True, "ok")


def _graph_params(g: Graph) -> str:
    return f"V={list(g.vertices)} E={[list(e) for e in g.edges]}"


def _suite_corpus(max_n: int, seed: int):
    """Deterministic mix of exhaustive tiny graphs and seeded random ones."""
    import random

    rng = random.Random(seed)
    graphs = []
    for n in (1, 2, 3):
        labels = tuple(range(1, n + 1))
        pairs = list(itertools.combinations(labels, 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            graphs.append(Graph(labels, edges))
    for n in range(4, max_n + 1):
        labels = tuple(range(1, n + 1))
        pairs = list(itertools.combinations(labels, 2))
        for _ in range(3):
            edges = [p for p in pairs if rng.random() < 0.5]
            graphs.append(Graph(labels, edges))
    return graphs, rng


def verification_suite(max_n: int = 5, seed: int = 0,
                       orbit_limit: int = 10):
    """Run every cross-layer oracle check; yields one record per case.

    Records are dicts with check, params, ok and detail keys, suitable
    for a JSON-lines report.  A fixed seed makes the whole run
    reproducible.  Exceptions are caught and reported as failures so one
    broken case cannot hide the rest.
    """
    from . import eulerian, extraction, rankwidth, vertex_minor
    from .gf2 import cut_rank

    max_n = min(max_n, SIMULATOR_LIMIT)
    graphs, rng = _suite_corpus(max_n, seed)

    def record(check, params, fn):
        try:
            detail = fn()
            return {"check": check, "params": params, "ok": True,
                    "detail": detail or "ok"}
        except Exception as exc:
            return {"check": check, "params": params, "ok": False,
                    "detail": f"{type(exc).__name__}: {exc}"}

    for g in graphs:
        params = {"graph": _graph_params(g)}

        def stab(g=g):
            st = graph_state(g)
            bad = [v for v in g.vertices if not stabilizer_holds(st, g, v)]
            if bad:
                raise ConsistencyError(f"stabilizer fails at {bad}")
        yield record("stabilizer_fixed_point", params, stab)

        def lc(g=g):
            st = graph_state(g)
            for v in g.vertices:
                lhs = apply_local_clifford_Uv(st, g, v)
                rhs = graph_state(g.local_complement(v))
                if not equal_up_to_global_phase(lhs, rhs):
                    raise ConsistencyError(f"complementation Clifford fails at {v}")
        yield record("complementation_clifford", params, lc)

        def ranks(g=g):
            st = graph_state(g)
            sides = [tuple(g.vertices[:k]) for k in range(g.n + 1)]
            for _ in range(3):
                sides.append(tuple(v for v in g.vertices if rng.random() < 0.5))
            for side in sides:
                got = schmidt_rank_log2(st, side)
                want = cut_rank(g, side)
                if got != want:
                    raise ConsistencyError(
                        f"schmidt {got} != cut rank {want} at {side}")
        yield record("schmidt_equals_cut_rank", params, ranks)

    for g in graphs:
        if g.n > 5:
            continue
        for v in g.vertices[:3]:
            for basis in ("Z", "Y", "X"):
                def rule(g=g, v=v, basis=basis):
                    rep = verify_measurement_rule(g, v, basis)
                    if not rep.ok:
                        raise ConsistencyError(rep.detail)
                yield record("measurement_rule",
                             {"graph": _graph_params(g), "vertex": v,
                              "basis": basis}, rule)

    for g in graphs:
        if g.n > 4 or g.n < 2:
            continue

        def orbit_identity(g=g):
            described = {eulerian.graph_from_eulerian(g, t)
                         for t in eulerian.eulerian_vectors(g)}
            orbit = set(vertex_minor.lc_orbit(g, limit=orbit_limit))
            if described != orbit:
                raise ConsistencyError(
                    f"{len(described)} described vs {len(orbit)} orbit members")
        yield record("eulerian_orbit_identity",
                     {"graph": _graph_params(g)}, orbit_identity)

        def switch_property(g=g):
            for t in eulerian.eulerian_vectors(g):
                base = eulerian.graph_from_eulerian(g, t)
                for v in g.vertices:
                    moved = eulerian.graph_from_eulerian(
                        g, eulerian.switch(g, t, v))
                    if moved != base.local_complement(v):
                        raise ConsistencyError(f"switch at {v} disagrees")
        yield record("eulerian_switch_property",
                     {"graph": _graph_params(g)}, switch_property)

    for n in range(3, min(max_n, 6) + 1):
        labels = tuple(range(1, n + 1))
        pairs = list(itertools.combinations(labels, 2))
        for trial in range(2):
            g = Graph(labels, [p for p in pairs if rng.random() < 0.5])
            sub = tuple(sorted(rng.sample(labels, min(3, n - 1))))
            hpairs = list(itertools.combinations(sub, 2))
            h = Graph(sub, [p for p in hpairs if rng.random() < 0.6])

            def replay(g=g, h=h):
                plan = extraction.plan_extraction(g, h)
                if plan is None:
                    return "not a minor"
                base = graph_state(plan.rewritten_graph)
                kept = sorted(set(plan.target)
                              | set(plan.residual.vertices))
                for bits in itertools.product((0, 1),
                                              repeat=len(plan.measured)):
                    outcomes = dict(zip(plan.measured, bits))
                    res = extraction.replay_plan(plan, outcomes)
                    post = base
                    for u in plan.measured:
                        post, _ = project_measure(post, u, "Z", outcomes[u])
                    want = graph_state(res.kept_graph)
                    want = apply_pauli(want, {v: "Z" for v, y
                                              in res.corrections.items() if y})
                    want = embed_with_fixed_bits(want, outcomes,
                                                 plan.rewritten_graph.vertices)
                    scale = ((-1) ** res.phase_parity
                             * 2.0 ** (-len(plan.measured) / 2))
                    dev = np.max(np.abs(post.amplitudes
                                        - scale * want.amplitudes))
                    if dev > _STRUCT_TOL:
                        raise ConsistencyError(
                            f"outcomes {outcomes} deviate by {dev:.2e}")
                return f"verified over {1 << len(plan.measured)} outcome maps"
            yield record("extraction_replay",
                         {"graph": _graph_params(g),
                          "target": _graph_params(h), "trial": trial}, replay)

    for n in range(2, min(max_n, 6) + 1):
        labels = tuple(range(1, n + 1))
        pairs = list(itertools.combinations(labels, 2))
        g = Graph(labels, [p for p in pairs if rng.random() < 0.5])

        def width(g=g):
            w, witness = rankwidth.rank_width_exact(g)
            if g.n >= 2:
                seen = rankwidth.decomposition_width(g, witness)
                if seen != w:
                    raise ConsistencyError(f"witness width {seen}, claimed {w}")
            return f"width {w}"
        yield record("rankwidth_witness", {"graph": _graph_params(g)}, width)

    for trial in range(4):
        labels = tuple(range(1, 5))
        pairs = list(itertools.combinations(labels, 2))
        g = Graph(labels, [p for p in pairs if rng.random() < 0.5])
        sub = tuple(sorted(rng.sample(labels, 2)))
        h = Graph(sub, [p for p in itertools.combinations(sub, 2)
                        if rng.random() < 0.7])

        def methods(g=g, h=h):
            decided = vertex_minor.is_vertex_minor(g, h) is not None
            m1 = vertex_minor.method1_sequence(g, h)
            m2 = eulerian.method2_sequence(g, h)
            if (m1 is not None) != decided or (m2 is not None) != decided:
                raise ConsistencyError("methods disagree with the decision")
            for m in (m1, m2):
                if m is not None and \
                        g.apply_sequence(m).induced_subgraph(h.vertices) != h:
                    raise ConsistencyError(f"sequence {m} does not replay")
            return "minor" if decided else "not a minor"
        yield record("method_agreement",
                     {"graph": _graph_params(g), "target": _graph_params(h),
                      "trial": trial}, methods)


def schmidt_rank_log2(state: StateVector, side, tol: float = _RANK_TOL) -> int:
    """log2 of the Schmidt rank across the bipartition (side, rest)."""
    side = set(side)
    if not side <= set(state.qubit_order):
        raise GraphError("side contains labels outside the state")
    axes_a = [i for i, v in enumerate(state.qubit_order) if v in side]
    axes_b = [i for i, v in enumerate(state.qubit_order) if v not in side]
    tens = state.tensor().transpose(axes_a + axes_b)
    mat = tens.reshape(1 << len(axes_a), 1 << len(axes_b))
    sing = np.linalg.svd(mat, compute_uv=False)
    ambiguous = [s for s in sing if tol * 1e-2 < s < tol * 1e2]
    if ambiguous:
        raise ConsistencyError(
            f"singular values {ambiguous} sit at the rank threshold")
    rank = int(np.sum(sing > tol))
    if rank & (rank - 1):
        raise ConsistencyError(f"Schmidt rank {rank} is not a power of two")
    return rank.bit_length() - 1
