"""Graph-state transformation toolkit.

Decides when one graph state can be reached from another using single-qubit
Cliffords, single-qubit Pauli measurements and classical communication;
produces the witnessing operation sequences and measurement plans; and
provides rank-width, counting monadic second-order model checking and a
statevector oracle for verification.
"""

from .errors import (
    ConsistencyError,
    FormulaError,
    GraphError,
    ParseError,
    SizeLimitError,
    VminorError,
)
from .eulerian import (
    EulerianVector,
    eulerian_identity,
    eulerian_vectors,
    graph_from_eulerian,
    is_eulerian,
    method2_sequence,
    switch,
    switching_sequence,
)
from .extraction import (
    ExtractionPlan,
    MeasurementRecord,
    ReplayResult,
    measure_update,
    plan_extraction,
    replay_plan,
    z_corrections,
)
from .gf2 import BitMatrix, cut_rank, inverse_gf2, null_space_gf2, rank_gf2
from .graph import Graph, LCSequence, format_graph, parse_graph
from .rankwidth import (
    RankDecomposition,
    decomposition_width,
    rank_width_exact,
)
from .simulator import (
    StateVector,
    equal_up_to_global_phase,
    factor_out_measured,
    graph_state,
    project_measure,
    schmidt_rank_log2,
    verification_suite,
    verify_measurement_rule,
)
from .vertex_minor import (
    VMWitness,
    has_ghz_minor,
    is_qubit_minor,
    is_vertex_minor,
    lc_equivalent,
    lc_orbit,
    method1_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LCSequence",
    "parse_graph",
    "format_graph",
    "BitMatrix",
    "rank_gf2",
    "cut_rank",
    "inverse_gf2",
    "null_space_gf2",
    "RankDecomposition",
    "rank_width_exact",
    "decomposition_width",
    "VMWitness",
    "lc_orbit",
    "lc_equivalent",
    "is_vertex_minor",
    "is_qubit_minor",
    "has_ghz_minor",
    "method1_sequence",
    "EulerianVector",
    "eulerian_identity",
    "is_eulerian",
    "eulerian_vectors",
    "graph_from_eulerian",
    "switch",
    "switching_sequence",
    "method2_sequence",
    "MeasurementRecord",
    "ExtractionPlan",
    "ReplayResult",
    "measure_update",
    "z_corrections",
    "plan_extraction",
    "replay_plan",
    "StateVector",
    "graph_state",
    "project_measure",
    "equal_up_to_global_phase",
    "factor_out_measured",
    "verify_measurement_rule",
    "schmidt_rank_log2",
    "verification_suite",
    "VminorError",
    "GraphError",
    "ParseError",
    "FormulaError",
    "SizeLimitError",
    "ConsistencyError",
    "__version__",
]
