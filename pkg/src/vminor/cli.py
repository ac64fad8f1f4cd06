"""Command-line front end.

Exit codes separate the mathematical answer from operational failure:
0 means decided true (or plain success), 1 means decided false, 2 means
a usage or input problem, and 3 means a size cap was exceeded.  Output
is deterministic for identical invocations; --json switches every
subcommand to machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import eulerian, extraction, mslogic, rankwidth, simulator, vertex_minor
from .errors import FormulaError, GraphError, ParseError, SizeLimitError
from .graph import Graph, parse_graph

__all__ = ["RunConfig", "main"]

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: subcommand, inputs, caps, output mode."""

    subcommand: str
    paths: tuple[str, ...]
    orbit_limit: int
    bruteforce_limit: int
    as_json: bool
    seed: int

    def __post_init__(self):
        if self.orbit_limit <= 0 or self.bruteforce_limit <= 0:
            raise GraphError("size caps must be positive")


def _load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _edge_lists(g: Graph) -> list[list[int]]:
    return [[a, b] for a, b in g.edges]


def _witness_payload(g: Graph, witness) -> dict:
    if witness is None:
        return {"is_minor": False, "sequence": None, "measure": None}
    measure = sorted(set(g.vertices) - set(witness.target_vertices))
    return {"is_minor": True, "sequence": list(witness.sequence),
            "measure": measure}


def _emit_witness(g: Graph, witness, as_json: bool) -> int:
    payload = _witness_payload(g, witness)
    if as_json:
        _print_json(payload)
    elif witness is None:
        print("not a minor")
    else:
        print("minor: yes")
        print(f"sequence: {list(witness.sequence)}")
        print(f"measure: {payload['measure']}")
    return EXIT_TRUE if witness is not None else EXIT_FALSE


def _cmd_vm(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.target)
    witness = vertex_minor.is_qubit_minor(g, h, orbit_limit=cfg.orbit_limit)
    return _emit_witness(g, witness, cfg.as_json)


def _cmd_ghz(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    try:
        nodes = tuple(int(tok) for tok in args.nodes.split(",") if tok)
    except ValueError:
        raise ParseError(f"--nodes wants comma-separated integers, "
                         f"got {args.nodes!r}") from None
    witness = vertex_minor.has_ghz_minor(g, nodes, orbit_limit=cfg.orbit_limit)
    return _emit_witness(g, witness, cfg.as_json)


def _cmd_plan(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.target)
    plan = extraction.plan_extraction(g, h, preserve_rest=args.preserve_rest)
    if plan is None:
        if cfg.as_json:
            _print_json(None)
        else:
            print("no plan: target is not reachable")
        return EXIT_FALSE
    payload = {
        "sequence": list(plan.clifford_stage),
        "measured": list(plan.measured),
        "corrections": {str(v): sorted(s)
                        for v, s in plan.correction_sets.items()},
        "boundary": list(plan.boundary),
        "residual_edges": _edge_lists(plan.residual),
    }
    if cfg.as_json:
        _print_json(payload)
    else:
        print(f"sequence: {payload['sequence']}")
        print(f"measured: {payload['measured']}")
        print(f"boundary: {payload['boundary']}")
        for v in sorted(plan.correction_sets):
            print(f"correction {v}: {sorted(plan.correction_sets[v])}")
        print(f"residual edges: {payload['residual_edges']}")
    return EXIT_TRUE


def _render_tree(witness: rankwidth.RankDecomposition) -> list[str]:
    leaves = dict((node, v) for v, node in witness.leaf_map)
    adjacency = witness.adjacency()

    def name(node: int) -> str:
        return f"[{leaves[node]}]" if node in leaves else f"({node})"

    root = witness.leaf_of(min(v for v, _ in witness.leaf_map))
    lines = []
    stack = [(root, None, 0)]
    while stack:
        node, parent, depth = stack.pop()
        if parent is not None:
            lines.append("  " * depth + f"{name(parent)} - {name(node)}")
        for nb in sorted(adjacency[node], reverse=True):
            if nb != parent:
                stack.append((nb, node, depth + (parent is not None)))
    return lines


def _cmd_rankwidth(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    width, witness = rankwidth.rank_width_exact(g, limit=cfg.bruteforce_limit)
    if cfg.as_json:
        payload = {"width": width, "edges": None, "leaves": None}
        if witness is not None:
            payload["edges"] = [[a, b] for a, b in witness.edges]
            payload["leaves"] = {str(v): node for v, node in witness.leaf_map}
        _print_json(payload)
    else:
        print(f"rank-width: {width}")
        if witness is not None:
            for line in _render_tree(witness):
                print(line)
    return EXIT_TRUE


def _cmd_lc_equiv(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.target)
    sequence = vertex_minor.lc_equivalent(g, h, limit=cfg.orbit_limit)
    if cfg.as_json:
        _print_json({"equivalent": sequence is not None,
                     "sequence": None if sequence is None else list(sequence)})
    elif sequence is None:
        print("not equivalent")
    else:
        print(f"equivalent: {list(sequence)}")
    return EXIT_TRUE if sequence is not None else EXIT_FALSE


def _cmd_orbit(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    members = vertex_minor.lc_orbit(g, limit=cfg.orbit_limit)
    if cfg.as_json:
        _print_json({"size": len(members),
                     "members": [_edge_lists(m) for m in members]})
    else:
        print(f"orbit size: {len(members)}")
        for m in members:
            edges = " ".join(f"({a},{b})" for a, b in m.edges)
            print(edges if edges else "(no edges)")
    return EXIT_TRUE


def _cmd_eval_formula(cfg: RunConfig, args) -> int:
    family = mslogic.build_formula_family()
    by_lower = {name.lower(): name for name in family}
    key = by_lower.get(args.name.lower())
    if key is None:
        raise ParseError(f"unknown formula {args.name!r}; "
                         f"choose from {sorted(family)}")
    g = _load_graph(args.graph)
    try:
        raw = json.loads(args.assignment)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--assignment is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("--assignment must be a JSON object")
    assignment = {name: frozenset(value) if isinstance(value, list) else value
                  for name, value in raw.items()}
    value = mslogic.evaluate(g, family[key], assignment)
    if cfg.as_json:
        _print_json({"value": value})
    else:
        print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


def _cmd_sequence(cfg: RunConfig, args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.target)
    if args.method == 1:
        sequence = vertex_minor.method1_sequence(
            g, h, orbit_limit=cfg.orbit_limit)
    else:
        if g.n > cfg.bruteforce_limit:
            raise SizeLimitError(
                f"method 2 scans all tripartitions; graph has {g.n} "
                f"vertices, cap is {cfg.bruteforce_limit}")
        sequence = eulerian.method2_sequence(g, h)
    if cfg.as_json:
        _print_json({"sequence": None if sequence is None else list(sequence)})
    elif sequence is None:
        print("not a minor")
    else:
        print(f"sequence: {list(sequence)}")
    return EXIT_TRUE if sequence is not None else EXIT_FALSE


def _cmd_verify(cfg: RunConfig, args) -> int:
    failures = 0
    for rec in simulator.verification_suite(max_n=args.max_n, seed=cfg.seed):
        if not rec["ok"]:
            failures += 1
        if cfg.as_json:
            _print_json(rec)
        else:
            mark = "ok  " if rec["ok"] else "FAIL"
            print(f"{mark} {rec['check']} {rec['params']} {rec['detail']}")
    if not cfg.as_json:
        print(f"failures: {failures}")
    return EXIT_TRUE if failures == 0 else EXIT_FALSE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vminor",
        description="Decide reachability between graph states under local "
                    "Cliffords and single-qubit measurements.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--max-n", type=int, default=8,
                        help="cap for brute-force enumerations (default 8)")
    common.add_argument("--max-orbit", type=int, default=10,
                        help="cap for orbit searches (default 10)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("vm", parents=[common],
                       help="decide whether one graph state can be extracted "
                            "from another")
    p.add_argument("graph")
    p.add_argument("target")

    p = sub.add_parser("ghz", parents=[common],
                       help="decide reachability of a fully-connected state "
                            "on chosen nodes")
    p.add_argument("graph")
    p.add_argument("--nodes", required=True,
                   help="comma-separated vertex labels")

    p = sub.add_parser("plan", parents=[common],
                       help="build a Clifford-then-measure extraction plan")
    p.add_argument("graph")
    p.add_argument("target")
    p.add_argument("--preserve-rest", action="store_true",
                   help="measure only the target's neighbourhood")

    p = sub.add_parser("rankwidth", parents=[common],
                       help="exact rank-width with a witness tree")
    p.add_argument("graph")

    p = sub.add_parser("lc-equiv", parents=[common],
                       help="decide local-complementation equivalence")
    p.add_argument("graph")
    p.add_argument("target")

    p = sub.add_parser("orbit", parents=[common],
                       help="enumerate the local-complementation orbit")
    p.add_argument("graph")

    p = sub.add_parser("eval-formula", parents=[common],
                       help="evaluate a built-in formula on a graph")
    p.add_argument("name", help="Disjoint, Part, EvenInter, Member, Eul, "
                                "Base or Adj")
    p.add_argument("--graph", required=True)
    p.add_argument("--assignment", default="{}",
                   help="JSON object binding the formula's free variables")

    p = sub.add_parser("sequence", parents=[common],
                       help="produce a complementation sequence witnessing "
                            "extraction")
    p.add_argument("graph")
    p.add_argument("target")
    p.add_argument("--method", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("verify", parents=[common],
                       help="run the statevector oracle suite")
    p.set_defaults(max_n=5)

    return parser


_HANDLERS = {
    "vm": _cmd_vm,
    "ghz": _cmd_ghz,
    "plan": _cmd_plan,
    "rankwidth": _cmd_rankwidth,
    "lc-equiv": _cmd_lc_equiv,
    "orbit": _cmd_orbit,
    "eval-formula": _cmd_eval_formula,
    "sequence": _cmd_sequence,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    cfg = RunConfig(
        subcommand=args.subcommand,
        paths=tuple(getattr(args, name) for name in ("graph", "target")
                    if hasattr(args, name)),
        orbit_limit=args.max_orbit,
        bruteforce_limit=args.max_n,
        as_json=args.json,
        seed=args.seed,
    )
    try:
        return _HANDLERS[args.subcommand](cfg, args)
    except SizeLimitError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, GraphError, FormulaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    # ConsistencyError deliberately not caught: it means a theorem the
    # package relies on failed, and that should crash loudly.


if __name__ == "__main__":
    sys.exit(main())
