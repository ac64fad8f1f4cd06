"""Planning single-shot extraction of a target graph state.

A plan has two stages: local Cliffords along a complementation sequence,
then one round of standard-basis measurements.  Z measurements commute
with each other and with the Z corrections they trigger, so the round is
order-free and the corrections reduce to parities of outcomes over
neighbourhoods in the rewritten graph.

Target vertices that the goal graph keeps isolated are measured along
with the rest and their qubits rotated back to a plus state afterwards,
which is how a measured qubit is always left here (the only basis-state
to plus rotation is a local Clifford).  They are listed in ``stripped``
so replay knows which measured qubits still belong to the payload.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyError, GraphError
from .graph import Graph
from .vertex_minor import is_qubit_minor

__all__ = [
    "MeasurementRecord",
    "ExtractionPlan",
    "ReplayResult",
    "measure_update",
    "z_corrections",
    "plan_extraction",
    "replay_plan",
]


@dataclass(frozen=True)
class MeasurementRecord:
    """One single-qubit Pauli measurement: outcome 0 is the +1 eigenvalue."""

    vertex: int
    basis: str
    outcome: int

    def __post_init__(self):
        if self.basis not in ("X", "Y", "Z"):
            raise GraphError(f"basis must be X, Y or Z, got {self.basis!r}")
        if self.outcome not in (0, 1):
            raise GraphError(f"outcome must be 0 or 1, got {self.outcome!r}")


def measure_update(g: Graph, v: int, basis: str) -> Graph:
    """The graph left behind by measuring qubit v in the given basis.

    Z deletes the vertex, Y complements at it first, X pivots on the
    edge to its smallest neighbour first.  X on an isolated vertex has a
    deterministic outcome and leaves the other qubits untouched, so it
    reduces to deletion as well.
    """
    if basis == "Z":
        return g.delete_vertex(v)
    if basis == "Y":
        return g.local_complement(v).delete_vertex(v)
    if basis == "X":
        return g.canonical_pivot(v).delete_vertex(v)
    raise GraphError(f"basis must be X, Y or Z, got {basis!r}")


def z_corrections(h: Graph, target, outcomes: dict[int, int]
                  ) -> tuple[dict[int, int], int]:
    """Correction parities after Z-measuring everything outside target.

    outcomes must bind exactly V(h) minus target.  Each kept vertex v
    needs Z raised to the parity of outcomes over its measured
    neighbours; the leftover global sign counts edges of h between
    measured vertices with outcome 1.
    """
    target = frozenset(target)
    if not target <= set(h.vertices):
        raise GraphError("target contains vertices outside the graph")
    measured = set(h.vertices) - target
    if set(outcomes) != measured:
        missing = sorted(measured - set(outcomes))
        extra = sorted(set(outcomes) - measured)
        raise GraphError(
            f"outcomes must bind exactly the measured vertices "
            f"(missing {missing}, unexpected {extra})")
    for u, x in outcomes.items():
        if x not in (0, 1):
            raise GraphError(f"outcome for {u} must be 0 or 1, got {x!r}")
    corrections = {
        v: sum(outcomes[u] for u in h.neighbors(v) if u in measured) % 2
        for v in sorted(target)
    }
    hit = [u for u in outcomes if outcomes[u] == 1]
    phase_parity = len(h.induced_subgraph(hit).edges) % 2
    return corrections, phase_parity


@dataclass(frozen=True)
class ExtractionPlan:
    """Clifford stage plus one parallel round of standard-basis measurements.

    rewritten_graph is the source graph after the Clifford stage; target
    induces the goal's core in it.  stripped lists measured qubits that
    the goal keeps as isolated plus states.  correction_sets covers both
    the target and any surviving residual vertices.
    """

    clifford_stage: tuple[int, ...]
    rewritten_graph: Graph
    measured: tuple[int, ...]
    target: tuple[int, ...]
    correction_sets: dict[int, frozenset[int]] = field(compare=False)
    boundary: tuple[int, ...]
    residual: Graph
    stripped: tuple[int, ...] = ()

    def validate(self) -> None:
        h = self.rewritten_graph
        vertices = set(h.vertices)
        measured = set(self.measured)
        target = set(self.target)
        if measured & target:
            raise ConsistencyError("measured and target overlap")
        if not (measured | target) <= vertices:
            raise ConsistencyError("plan names vertices outside the graph")
        if measured | target | set(self.residual.vertices) != vertices:
            raise ConsistencyError("measured, target and residual must cover the graph")
        if not set(self.stripped) <= measured:
            raise ConsistencyError("stripped vertices must be measured")
        want_boundary = set()
        for v in self.target:
            want_boundary.update(h.neighbors(v))
        want_boundary -= target
        if set(self.boundary) != want_boundary:
            raise ConsistencyError("boundary does not match the target's "
                                   "neighbourhood in the rewritten graph")
        kept = sorted((target | set(self.residual.vertices)))
        if set(self.correction_sets) != set(kept):
            raise ConsistencyError("correction sets must cover exactly the kept vertices")
        for v, parity_set in self.correction_sets.items():
            if not parity_set <= measured:
                raise ConsistencyError(f"correction set of {v} leaves the measured set")
            if parity_set != set(h.neighbors(v)) & measured:
                raise ConsistencyError(f"correction set of {v} is not its "
                                       "measured neighbourhood")
        if h.induced_subgraph(self.residual.vertices) != self.residual:
            raise ConsistencyError("residual is not induced by the rewritten graph")
        for v in self.residual.vertices:
            if set(h.neighbors(v)) & target:
                raise ConsistencyError("residual touches the target")

    @property
    def core(self) -> Graph:
        return self.rewritten_graph.induced_subgraph(self.target)


@dataclass(frozen=True)
class ReplayResult:
    """Deterministic description of the delivered state for fixed outcomes.

    The post-measurement state is (-1)^phase_parity times the measured
    outcome kets tensored with Z^corrections applied to the kept graph's
    state; kept_graph is the disjoint union of the core and the residual.
    """

    kept_graph: Graph
    corrections: dict[int, int] = field(compare=False)
    phase_parity: int
    plus_vertices: tuple[int, ...]


def plan_extraction(g: Graph, h: Graph,
                    preserve_rest: bool = False) -> ExtractionPlan | None:
    """Build a plan delivering the state of h out of the state of g.

    Returns None when h is not reachable.  With preserve_rest only the
    target's neighbourhood is measured and whatever disconnects from the
    target survives as the residual graph; otherwise every non-target
    qubit is measured.
    """
    witness = is_qubit_minor(g, h)
    if witness is None:
        return None
    rewritten = g.apply_sequence(witness.sequence)
    target = witness.target_vertices
    stripped = set(witness.stripped)
    boundary = set()
    for v in target:
        boundary.update(rewritten.neighbors(v))
    boundary -= set(target)
    if preserve_rest:
        measured = boundary | stripped
    else:
        measured = set(g.vertices) - set(target)
    residual = rewritten.induced_subgraph(
        set(g.vertices) - set(target) - measured)
    kept = sorted(set(target) | set(residual.vertices))
    correction_sets = {
        v: frozenset(set(rewritten.neighbors(v)) & measured) for v in kept
    }
    plan = ExtractionPlan(
        clifford_stage=witness.sequence,
        rewritten_graph=rewritten,
        measured=tuple(sorted(measured)),
        target=tuple(target),
        correction_sets=correction_sets,
        boundary=tuple(sorted(boundary)),
        residual=residual,
        stripped=tuple(sorted(stripped)),
    )
    plan.validate()
    return plan


def replay_plan(plan: ExtractionPlan, outcomes: dict[int, int]) -> ReplayResult:
    """Resolve a plan against concrete measurement outcomes."""
    plan.validate()
    h = plan.rewritten_graph
    kept = set(plan.target) | set(plan.residual.vertices)
    corrections, phase_parity = z_corrections(h, kept, dict(outcomes))
    kept_graph = h.induced_subgraph(kept)
    return ReplayResult(
        kept_graph=kept_graph,
        corrections=corrections,
        phase_parity=phase_parity,
        plus_vertices=tuple(sorted(plan.stripped)),
    )
