"""Counting monadic second-order logic over graphs (C2MS).

Formulas are immutable ASTs over four atoms: vertex equality, set
membership, adjacency, and an even-cardinality predicate on set variables.
Vertex quantifiers range over the vertex set, set quantifiers over all
subsets, so evaluation is honest brute force with short-circuiting; the
cheap algebraic routes for the isotropic-system formulas live in the
eulerian module and are cross-checked against this evaluator in tests.

The module also builds the fixed formula family used for vertex-minor
expression: Disjoint, Part, EvenInter, Member, Eul, Base and Adj, plus the
closed vertex-minor formula for a concrete target graph, quantifier
relativization, and brute-force selection/listing/counting/optimizing
solvers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import FormulaError, SizeLimitError
from .graph import Graph

__all__ = [
    "Formula",
    "VarEq",
    "Membership",
    "AdjAtom",
    "EvenAtom",
    "Not",
    "And",
    "Or",
    "ExistsVertex",
    "ForallVertex",
    "ExistsSet",
    "ForallSet",
    "implies",
    "iff",
    "subset_formula",
    "free_variables",
    "quantifier_rank",
    "formula_length",
    "format_formula",
    "evaluate",
    "build_formula_family",
    "disjoint_formula",
    "part_formula",
    "even_inter_formula",
    "member_formula",
    "eul_formula",
    "base_formula",
    "adj_formula",
    "build_vm_formula",
    "build_vm_prime",
    "vm_vertex_variable",
    "relativize",
    "build_prop_vm",
    "build_complete_vm",
    "selection_bruteforce",
    "listing_bruteforce",
    "counting_bruteforce",
    "optimizing_bruteforce",
    "SET_QUANTIFIER_LIMIT",
]

VERTEX = "vertex"
SET = "set"

SET_QUANTIFIER_LIMIT = 8


class Formula:
    """Base class for formula nodes; subclasses are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class VarEq(Formula):
    x: str
    y: str


@dataclass(frozen=True)
class Membership(Formula):
    x: str
    X: str


@dataclass(frozen=True)
class AdjAtom(Formula):
    x: str
    y: str


@dataclass(frozen=True)
class EvenAtom(Formula):
    X: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    parts: tuple[Formula, ...]

    def __init__(self, parts: Iterable[Formula]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Or(Formula):
    parts: tuple[Formula, ...]

    def __init__(self, parts: Iterable[Formula]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class ExistsVertex(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class ForallVertex(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class ExistsSet(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class ForallSet(Formula):
    var: str
    body: Formula


def implies(a: Formula, b: Formula) -> Formula:
    return Or((Not(a), b))


def iff(a: Formula, b: Formula) -> Formula:
    return And((implies(a, b), implies(b, a)))


def _fresh(base: str, used: set[str]) -> str:
    name = base
    k = 1
    while name in used:
        name = f"{base}_{k}"
        k += 1
    used.add(name)
    return name


def subset_formula(X: str, Y: str, used: set[str]) -> Formula:
    """X is a subset of Y, spelled with one bound vertex variable."""
    e = _fresh("s", used)
    return ForallVertex(e, implies(Membership(e, X), Membership(e, Y)))


# ----------------------------------------------------------------------
# scoping, rank, printing


def free_variables(phi: Formula) -> dict[str, str]:
    """Free variables with kinds; raises FormulaError on kind clashes."""
    out: dict[str, str] = {}

    def note(table: dict[str, str], name: str, kind: str) -> None:
        prev = table.get(name)
        if prev is not None and prev != kind:
            raise FormulaError(f"variable {name!r} used both as {prev} and as {kind}")
        table[name] = kind

    def walk(node: Formula, bound: dict[str, str]) -> None:
        if isinstance(node, VarEq):
            for nm in (node.x, node.y):
                if nm in bound:
                    note(bound, nm, VERTEX)
                else:
                    note(out, nm, VERTEX)
        elif isinstance(node, Membership):
            if node.x in bound:
                note(bound, node.x, VERTEX)
            else:
                note(out, node.x, VERTEX)
            if node.X in bound:
                note(bound, node.X, SET)
            else:
                note(out, node.X, SET)
        elif isinstance(node, AdjAtom):
            for nm in (node.x, node.y):
                if nm in bound:
                    note(bound, nm, VERTEX)
                else:
                    note(out, nm, VERTEX)
        elif isinstance(node, EvenAtom):
            if node.X in bound:
                note(bound, node.X, SET)
            else:
                note(out, node.X, SET)
        elif isinstance(node, Not):
            walk(node.body, bound)
        elif isinstance(node, (And, Or)):
            for p in node.parts:
                walk(p, bound)
        elif isinstance(node, (ExistsVertex, ForallVertex)):
            inner = dict(bound)
            inner[node.var] = VERTEX
            walk(node.body, inner)
        elif isinstance(node, (ExistsSet, ForallSet)):
            inner = dict(bound)
            inner[node.var] = SET
            walk(node.body, inner)
        else:
            raise FormulaError(f"unknown formula node: {node!r}")

    walk(phi, {})
    return out


def quantifier_rank(phi: Formula) -> int:
    """Maximum quantifier nesting depth."""
    if isinstance(phi, (VarEq, Membership, AdjAtom, EvenAtom)):
        return 0
    if isinstance(phi, Not):
        return quantifier_rank(phi.body)
    if isinstance(phi, (And, Or)):
        return max((quantifier_rank(p) for p in phi.parts), default=0)
    if isinstance(phi, (ExistsVertex, ForallVertex, ExistsSet, ForallSet)):
        return 1 + quantifier_rank(phi.body)
    raise FormulaError(f"unknown formula node: {phi!r}")


def formula_length(phi: Formula) -> int:
    """Number of AST nodes."""
    if isinstance(phi, (VarEq, Membership, AdjAtom, EvenAtom)):
        return 1
    if isinstance(phi, Not):
        return 1 + formula_length(phi.body)
    if isinstance(phi, (And, Or)):
        return 1 + sum(formula_length(p) for p in phi.parts)
    return 1 + formula_length(phi.body)


def format_formula(phi: Formula) -> str:
    """Readable rendering with standard logic symbols."""
    if isinstance(phi, VarEq):
        return f"{phi.x} = {phi.y}"
    if isinstance(phi, Membership):
        return f"{phi.x} ∈ {phi.X}"
    if isinstance(phi, AdjAtom):
        return f"adj({phi.x}, {phi.y})"
    if isinstance(phi, EvenAtom):
        return f"Even({phi.X})"
    if isinstance(phi, Not):
        return f"¬{_wrap(phi.body)}"
    if isinstance(phi, And):
        if not phi.parts:
            return "⊤"
        return " ∧ ".join(_wrap(p) for p in phi.parts)
    if isinstance(phi, Or):
        if not phi.parts:
            return "⊥"
        return " ∨ ".join(_wrap(p) for p in phi.parts)
    if isinstance(phi, ExistsVertex):
        return f"∃{phi.var}: {format_formula(phi.body)}"
    if isinstance(phi, ForallVertex):
        return f"∀{phi.var}: {format_formula(phi.body)}"
    if isinstance(phi, ExistsSet):
        return f"∃{phi.var}⊆V: {format_formula(phi.body)}"
    if isinstance(phi, ForallSet):
        return f"∀{phi.var}⊆V: {format_formula(phi.body)}"
    raise FormulaError(f"unknown formula node: {phi!r}")


def _wrap(phi: Formula) -> str:
    s = format_formula(phi)
    if isinstance(phi, (VarEq, Membership, AdjAtom, EvenAtom, Not)):
        return s
    return f"({s})"


# ----------------------------------------------------------------------
# evaluation


def evaluate(g: Graph, phi: Formula, assignment: Mapping[str, object] | None = None) -> bool:
    """Evaluate phi on g under an assignment of exactly its free variables.

    Vertex variables map to vertex labels, set variables to iterables of
    labels.  Vertex quantifiers range over V(g) in ascending label order,
    set quantifiers over all subsets in mask counting order.
    """
    assignment = dict(assignment or {})
    free = free_variables(phi)
    missing = sorted(set(free) - set(assignment))
    if missing:
        raise FormulaError(f"unbound variables: {', '.join(missing)}")
    extra = sorted(set(assignment) - set(free))
    if extra:
        raise FormulaError(f"assignment binds unknown variables: {', '.join(extra)}")
    labels = g.vertices
    label_set = set(labels)
    env: dict[str, object] = {}
    for name, kind in free.items():
        val = assignment[name]
        if kind == VERTEX:
            if not isinstance(val, int) or isinstance(val, bool):
                raise FormulaError(f"variable {name!r} needs a vertex label, got {val!r}")
            if val not in label_set:
                raise FormulaError(f"vertex {val} assigned to {name!r} is not in the graph")
            env[name] = val
        else:
            try:
                s = frozenset(val)  # type: ignore[arg-type]
            except TypeError:
                raise FormulaError(f"variable {name!r} needs a set of labels, got {val!r}") from None
            if not s <= label_set:
                raise FormulaError(f"set assigned to {name!r} contains non-vertices")
            env[name] = s

    n = len(labels)
    subsets = [frozenset(labels[i] for i in range(n) if (mask >> i) & 1) for mask in range(1 << n)]

    # short-circuit cheapest conjunct/disjunct first; semantics unchanged
    order: dict[int, tuple[Formula, ...]] = {}

    def plan(node: Formula) -> int:
        if isinstance(node, (VarEq, Membership, AdjAtom, EvenAtom)):
            return 1
        if isinstance(node, Not):
            return 1 + plan(node.body)
        if isinstance(node, (And, Or)):
            costs = [(plan(p), i) for i, p in enumerate(node.parts)]
            costs.sort()
            order[id(node)] = tuple(node.parts[i] for _, i in costs)
            return 1 + sum(c for c, _ in costs)
        return 1 + plan(node.body)

    plan(phi)

    def rec(node: Formula) -> bool:
        if isinstance(node, VarEq):
            return env[node.x] == env[node.y]
        if isinstance(node, Membership):
            return env[node.x] in env[node.X]  # type: ignore[operator]
        if isinstance(node, AdjAtom):
            a, b = env[node.x], env[node.y]
            return a != b and g.has_edge(a, b)  # type: ignore[arg-type]
        if isinstance(node, EvenAtom):
            return len(env[node.X]) % 2 == 0  # type: ignore[arg-type]
        if isinstance(node, Not):
            return not rec(node.body)
        if isinstance(node, And):
            return all(rec(p) for p in order[id(node)])
        if isinstance(node, Or):
            return any(rec(p) for p in order[id(node)])
        if isinstance(node, ExistsVertex):
            old = env.get(node.var)
            for v in labels:
                env[node.var] = v
                if rec(node.body):
                    _restore(env, node.var, old)
                    return True
            _restore(env, node.var, old)
            return False
        if isinstance(node, ForallVertex):
            old = env.get(node.var)
            for v in labels:
                env[node.var] = v
                if not rec(node.body):
                    _restore(env, node.var, old)
                    return False
            _restore(env, node.var, old)
            return True
        if isinstance(node, ExistsSet):
            old = env.get(node.var)
            for s in subsets:
                env[node.var] = s
                if rec(node.body):
                    _restore(env, node.var, old)
                    return True
            _restore(env, node.var, old)
            return False
        if isinstance(node, ForallSet):
            old = env.get(node.var)
            for s in subsets:
                env[node.var] = s
                if not rec(node.body):
                    _restore(env, node.var, old)
                    return False
            _restore(env, node.var, old)
            return True
        raise FormulaError(f"unknown formula node: {node!r}")

    return rec(phi)


def _restore(env: dict, name: str, old: object) -> None:
    if old is None:
        env.pop(name, None)
    else:
        env[name] = old


# ----------------------------------------------------------------------
# the fixed formula family


def disjoint_formula(x: str = "X", y: str = "Y", z: str = "Z",
                     used: set[str] | None = None) -> Formula:
    """The three sets are pairwise disjoint."""
    used = set(used or ()) | {x, y, z}
    e = _fresh("x", used)
    return ForallVertex(e, And((
        Not(And((Membership(e, x), Membership(e, y)))),
        Not(And((Membership(e, x), Membership(e, z)))),
        Not(And((Membership(e, y), Membership(e, z)))),
    )))


def part_formula(x: str = "X", y: str = "Y", z: str = "Z",
                 used: set[str] | None = None) -> Formula:
    """The three sets partition the vertex set (cover plus disjointness)."""
    used = set(used or ()) | {x, y, z}
    e = _fresh("x", used)
    cover = ForallVertex(e, Or((Membership(e, x), Membership(e, y), Membership(e, z))))
    return And((cover, disjoint_formula(x, y, z, used)))


def even_inter_formula(q: str = "Q", v: str = "v",
                       used: set[str] | None = None) -> Formula:
    """The neighbourhood of v meets Q in an even number of vertices."""
    used = set(used or ()) | {q, v}
    r = _fresh("R", used)
    u = _fresh("u", used)
    pins = ForallVertex(u, iff(Membership(u, r),
                               And((AdjAtom(u, v), Membership(u, q)))))
    return ForallSet(r, implies(pins, EvenAtom(r)))


def member_formula(x: str = "X", y: str = "Y", z: str = "Z",
                   used: set[str] | None = None) -> Formula:
    """(x, y, z) is one of the 2^n vectors generated by the graph.

    Each choice of a generator subset Q determines the triple through the
    parity of neighbourhood intersections with Q; the four reverse
    implications pin the triple exactly, disjointness excludes overlaps.
    """
    used = set(used or ()) | {x, y, z}
    q = _fresh("Q", used)
    v = _fresh("v", used)
    even = even_inter_formula(q, v, used)

    def comes_from(member: Formula, cond: Formula) -> Formula:
        # "member <= cond": reverse implication
        return Or((Not(cond), member))

    in_none = Not(Or((Membership(v, x), Membership(v, y), Membership(v, z))))
    body = ForallVertex(v, And((
        comes_from(Membership(v, x), And((Not(Membership(v, q)), Not(even)))),
        comes_from(Membership(v, y), And((Membership(v, q), even))),
        comes_from(Membership(v, z), And((Membership(v, q), Not(even)))),
        comes_from(in_none, And((Not(Membership(v, q)), even))),
    )))
    return And((disjoint_formula(x, y, z, used), ExistsSet(q, body)))


def eul_formula(xe: str = "X_e", ye: str = "Y_e", ze: str = "Z_e",
                used: set[str] | None = None) -> Formula:
    """(xe, ye, ze) is an Eulerian tripartition of the vertex set."""
    used = set(used or ()) | {xe, ye, ze}
    x = _fresh("X", used)
    y = _fresh("Y", used)
    z = _fresh("Z", used)
    v = _fresh("v", used)
    inside = And((
        subset_formula(x, xe, used),
        subset_formula(y, ye, used),
        subset_formula(z, ze, used),
        member_formula(x, y, z, used),
    ))
    trivial = ForallVertex(v, Not(Or((Membership(v, x), Membership(v, y), Membership(v, z)))))
    return And((
        part_formula(xe, ye, ze, used),
        ForallSet(x, ForallSet(y, ForallSet(z, implies(inside, trivial)))),
    ))


def base_formula(x: str = "X", y: str = "Y", z: str = "Z",
                 xe: str = "X_e", ye: str = "Y_e", ze: str = "Z_e",
                 v: str = "v", used: set[str] | None = None) -> Formula:
    """(x, y, z) is a generated vector hitting v and lying under the
    tripartition everywhere else."""
    used = set(used or ()) | {x, y, z, xe, ye, ze, v}
    u = _fresh("u", used)
    off_v = ForallVertex(u, implies(Not(VarEq(v, u)), And((
        implies(Membership(u, x), Membership(u, xe)),
        implies(Membership(u, y), Membership(u, ye)),
        implies(Membership(u, z), Membership(u, ze)),
    ))))
    return And((
        member_formula(x, y, z, used),
        Or((Membership(v, x), Membership(v, y), Membership(v, z))),
        off_v,
    ))


def adj_formula(u: str = "u", v: str = "v",
                xe: str = "X_e", ye: str = "Y_e", ze: str = "Z_e",
                used: set[str] | None = None) -> Formula:
    """u and v are adjacent in the graph described by the Eulerian
    tripartition (xe, ye, ze)."""
    used = set(used or ()) | {u, v, xe, ye, ze}
    x = _fresh("X", used)
    y = _fresh("Y", used)
    z = _fresh("Z", used)
    hit = Or((Membership(u, x), Membership(u, y), Membership(u, z)))
    return And((
        Not(VarEq(u, v)),
        ExistsSet(x, ExistsSet(y, ExistsSet(z, And((
            base_formula(x, y, z, xe, ye, ze, v, used),
            hit,
        ))))),
    ))


def build_formula_family() -> dict[str, Formula]:
    """Canonical instances of the fixed formula family."""
    return {
        "Disjoint": disjoint_formula("X", "Y", "Z"),
        "Part": part_formula("X", "Y", "Z"),
        "EvenInter": even_inter_formula("Q", "v"),
        "Member": member_formula("X", "Y", "Z"),
        "Eul": eul_formula("X_e", "Y_e", "Z_e"),
        "Base": base_formula("X", "Y", "Z", "X_e", "Y_e", "Z_e", "v"),
        "Adj": adj_formula("u", "v", "X_e", "Y_e", "Z_e"),
    }


# ----------------------------------------------------------------------
# vertex-minor formulas for a concrete target


def vm_vertex_variable(v: int) -> str:
    """Name of the free vertex variable standing for target vertex v."""
    return f"x{v}"


def _vm_constraints(h: Graph, xe: str, ye: str, ze: str,
                    used: set[str]) -> list[Formula]:
    parts: list[Formula] = [eul_formula(xe, ye, ze, used)]
    vs = h.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            atom = adj_formula(vm_vertex_variable(a), vm_vertex_variable(b),
                               xe, ye, ze, used)
            parts.append(atom if h.has_edge(a, b) else Not(atom))
    return parts


def build_vm_formula(h: Graph) -> Formula:
    """Closed form: some Eulerian tripartition describes a graph whose
    restriction to the target vertices equals h.

    Free variables are one vertex variable per target vertex (see
    vm_vertex_variable); quantifier rank is 10 regardless of h.
    """
    used = {vm_vertex_variable(v) for v in h.vertices}
    xe = _fresh("X_e", used)
    ye = _fresh("Y_e", used)
    ze = _fresh("Z_e", used)
    body = And(_vm_constraints(h, xe, ye, ze, used))
    return ExistsSet(xe, ExistsSet(ye, ExistsSet(ze, body)))


def build_vm_prime(h: Graph) -> Formula:
    """Selection form of the vertex-minor formula: the tripartition is left
    free so a satisfying assignment hands back the Eulerian vector.

    Includes the non-edge constraints as well; without them a satisfying
    tripartition may describe a graph with extra edges inside the target,
    which breaks witness extraction (an edgeless target inside a single
    edge is the smallest counterexample).
    """
    used = {vm_vertex_variable(v) for v in h.vertices} | {"X_e", "Y_e", "Z_e"}
    return And(_vm_constraints(h, "X_e", "Y_e", "Z_e", used))


# ----------------------------------------------------------------------
# relativization


def _rename_free(phi: Formula, old: str, new: str) -> Formula:
    """Rename free occurrences of a variable, respecting shadowing."""
    if isinstance(phi, VarEq):
        return VarEq(new if phi.x == old else phi.x, new if phi.y == old else phi.y)
    if isinstance(phi, Membership):
        return Membership(new if phi.x == old else phi.x, new if phi.X == old else phi.X)
    if isinstance(phi, AdjAtom):
        return AdjAtom(new if phi.x == old else phi.x, new if phi.y == old else phi.y)
    if isinstance(phi, EvenAtom):
        return EvenAtom(new if phi.X == old else phi.X)
    if isinstance(phi, Not):
        return Not(_rename_free(phi.body, old, new))
    if isinstance(phi, And):
        return And(tuple(_rename_free(p, old, new) for p in phi.parts))
    if isinstance(phi, Or):
        return Or(tuple(_rename_free(p, old, new) for p in phi.parts))
    if isinstance(phi, (ExistsVertex, ForallVertex, ExistsSet, ForallSet)):
        if phi.var == old:
            return phi
        return type(phi)(phi.var, _rename_free(phi.body, old, new))
    raise FormulaError(f"unknown formula node: {phi!r}")


def _all_names(phi: Formula) -> set[str]:
    if isinstance(phi, VarEq):
        return {phi.x, phi.y}
    if isinstance(phi, Membership):
        return {phi.x, phi.X}
    if isinstance(phi, AdjAtom):
        return {phi.x, phi.y}
    if isinstance(phi, EvenAtom):
        return {phi.X}
    if isinstance(phi, Not):
        return _all_names(phi.body)
    if isinstance(phi, (And, Or)):
        out: set[str] = set()
        for p in phi.parts:
            out |= _all_names(p)
        return out
    return {phi.var} | _all_names(phi.body)


def relativize(phi: Formula, X: str) -> Formula:
    """Restrict every quantifier in phi to the set variable X.

    Vertex quantifiers become membership-guarded, set quantifiers become
    subset-guarded; bound variables clashing with X are renamed first.
    """
    used = _all_names(phi) | {X}

    def rec(node: Formula) -> Formula:
        if isinstance(node, (VarEq, Membership, AdjAtom, EvenAtom)):
            return node
        if isinstance(node, Not):
            return Not(rec(node.body))
        if isinstance(node, And):
            return And(tuple(rec(p) for p in node.parts))
        if isinstance(node, Or):
            return Or(tuple(rec(p) for p in node.parts))
        var, body = node.var, node.body
        if var == X:
            fresh = _fresh(var, used)
            body = _rename_free(body, var, fresh)
            var = fresh
        body = rec(body)
        if isinstance(node, ExistsVertex):
            return ExistsVertex(var, And((Membership(var, X), body)))
        if isinstance(node, ForallVertex):
            return ForallVertex(var, implies(Membership(var, X), body))
        if isinstance(node, ExistsSet):
            return ExistsSet(var, And((subset_formula(var, X, set(used)), body)))
        if isinstance(node, ForallSet):
            return ForallSet(var, implies(subset_formula(var, X, set(used)), body))
        raise FormulaError(f"unknown formula node: {node!r}")

    return rec(phi)


def _replace_adj_atoms(phi: Formula, make: Callable[[str, str], Formula]) -> Formula:
    if isinstance(phi, AdjAtom):
        return make(phi.x, phi.y)
    if isinstance(phi, (VarEq, Membership, EvenAtom)):
        return phi
    if isinstance(phi, Not):
        return Not(_replace_adj_atoms(phi.body, make))
    if isinstance(phi, And):
        return And(tuple(_replace_adj_atoms(p, make) for p in phi.parts))
    if isinstance(phi, Or):
        return Or(tuple(_replace_adj_atoms(p, make) for p in phi.parts))
    if isinstance(phi, (ExistsVertex, ForallVertex, ExistsSet, ForallSet)):
        return type(phi)(phi.var, _replace_adj_atoms(phi.body, make))
    raise FormulaError(f"unknown formula node: {phi!r}")


def build_prop_vm(phi: Formula, X: str = "X") -> Formula:
    """Lift a graph property to 'some vertex-minor on X satisfies it'.

    phi must be a sentence over the adjacency atom.  Its adjacency atoms
    are replaced by the described-graph adjacency formula, quantifiers are
    relativized to X, and the result is closed under an existential choice
    of an Eulerian tripartition.
    """
    if free_variables(phi):
        raise FormulaError("build_prop_vm needs a sentence without free variables")
    used = _all_names(phi) | {X}
    xe = _fresh("X_e", used)
    ye = _fresh("Y_e", used)
    ze = _fresh("Z_e", used)

    def make(a: str, b: str) -> Formula:
        return adj_formula(a, b, xe, ye, ze, set(used))

    lifted = _replace_adj_atoms(phi, make)
    lifted = relativize(lifted, X)
    body = And((eul_formula(xe, ye, ze, set(used)), lifted))
    return ExistsSet(xe, ExistsSet(ye, ExistsSet(ze, body)))


def build_complete_vm(X: str = "X") -> Formula:
    """Some vertex-minor on X is the complete graph on X.

    Built in the merged two-quantifier form; semantically equal to running
    build_prop_vm on the completeness sentence.
    """
    used = {X}
    xe = _fresh("X_e", used)
    ye = _fresh("Y_e", used)
    ze = _fresh("Z_e", used)
    a = _fresh("x", used)
    b = _fresh("y", used)
    pairwise = ForallVertex(a, ForallVertex(b, implies(
        And((Membership(a, X), Membership(b, X), Not(VarEq(a, b)))),
        adj_formula(a, b, xe, ye, ze, set(used)),
    )))
    body = And((eul_formula(xe, ye, ze, set(used)), pairwise))
    return ExistsSet(xe, ExistsSet(ye, ExistsSet(ze, body)))


# ----------------------------------------------------------------------
# brute-force solvers


def _domains(g: Graph, names: list[str], kinds: Mapping[str, str]):
    labels = g.vertices
    n = len(labels)
    subsets = [frozenset(labels[i] for i in range(n) if (mask >> i) & 1)
               for mask in range(1 << n)]
    for name in names:
        yield labels if kinds[name] == VERTEX else subsets


def _completions(g: Graph, phi: Formula, partial: Mapping[str, object] | None,
                 limit: int):
    """Yield full assignments extending `partial` that satisfy phi, in
    canonical order (missing variables sorted by name, vertex domains
    ascending, set domains in mask counting order)."""
    partial = dict(partial or {})
    free = free_variables(phi)
    unknown = sorted(set(partial) - set(free))
    if unknown:
        raise FormulaError(f"assignment binds unknown variables: {', '.join(unknown)}")
    names = sorted(set(free) - set(partial))
    if any(free[nm] == SET for nm in names) and g.n > limit:
        raise SizeLimitError(
            f"brute-force set search needs at most {limit} vertices, graph has {g.n}")
    for values in itertools.product(*_domains(g, names, free)):
        assignment = dict(partial)
        assignment.update(zip(names, values))
        if evaluate(g, phi, assignment):
            yield assignment


def selection_bruteforce(g: Graph, phi: Formula,
                         partial: Mapping[str, object] | None = None,
                         limit: int = SET_QUANTIFIER_LIMIT) -> dict[str, object] | None:
    """First satisfying completion of `partial`, or None."""
    for assignment in _completions(g, phi, partial, limit):
        return assignment
    return None


def listing_bruteforce(g: Graph, phi: Formula,
                       partial: Mapping[str, object] | None = None,
                       limit: int = SET_QUANTIFIER_LIMIT) -> list[dict[str, object]]:
    """All satisfying completions, in canonical order."""
    return list(_completions(g, phi, partial, limit))


def counting_bruteforce(g: Graph, phi: Formula,
                        partial: Mapping[str, object] | None = None,
                        limit: int = SET_QUANTIFIER_LIMIT) -> int:
    """Number of satisfying completions."""
    return sum(1 for _ in _completions(g, phi, partial, limit))


def optimizing_bruteforce(g: Graph, phi: Formula, maximize: str,
                          partial: Mapping[str, object] | None = None,
                          limit: int = SET_QUANTIFIER_LIMIT) -> dict[str, object] | None:
    """Satisfying completion maximizing the size of one set variable."""
    free = free_variables(phi)
    if free.get(maximize) != SET:
        raise FormulaError(f"{maximize!r} is not a free set variable of the formula")
    best = None
    for assignment in _completions(g, phi, partial, limit):
        if best is None or len(assignment[maximize]) > len(best[maximize]):  # type: ignore[arg-type]
            best = assignment
    return best
