"""Formula ASTs, the brute-force evaluator, and the fixed formula family."""

import pytest

from vminor.errors import FormulaError, SizeLimitError
from vminor.eulerian import (
    eulerian_vectors,
    graph_from_eulerian,
    is_eulerian,
    is_member_triple,
)
from vminor.graph import Graph
from vminor.mslogic import (
    AdjAtom,
    And,
    EvenAtom,
    ExistsSet,
    ExistsVertex,
    ForallSet,
    ForallVertex,
    Membership,
    Not,
    Or,
    VarEq,
    build_complete_vm,
    build_formula_family,
    build_prop_vm,
    build_vm_formula,
    build_vm_prime,
    counting_bruteforce,
    evaluate,
    formula_length,
    format_formula,
    free_variables,
    iff,
    implies,
    listing_bruteforce,
    optimizing_bruteforce,
    quantifier_rank,
    relativize,
    selection_bruteforce,
    subset_formula,
    vm_vertex_variable,
)
from vminor.vertex_minor import has_ghz_minor

from conftest import all_graphs


class TestFormatting:
    def test_atoms(self):
        assert format_formula(VarEq("x", "y")) == "x = y"
        assert format_formula(Membership("x", "X")) == "x ∈ X"
        assert format_formula(AdjAtom("u", "v")) == "adj(u, v)"
        assert format_formula(EvenAtom("Q")) == "Even(Q)"

    def test_connectives(self):
        phi = And((AdjAtom("u", "v"), Not(VarEq("u", "v"))))
        assert format_formula(phi) == "adj(u, v) ∧ ¬u = v"
        assert format_formula(Or((EvenAtom("Q"), EvenAtom("R")))) \
            == "Even(Q) ∨ Even(R)"

    def test_empty_connectives(self):
        assert format_formula(And(())) == "⊤"
        assert format_formula(Or(())) == "⊥"

    def test_quantifiers(self):
        assert format_formula(ExistsVertex("v", EvenAtom("Q"))) == "∃v: Even(Q)"
        assert format_formula(ForallSet("Q", EvenAtom("Q"))) == "∀Q⊆V: Even(Q)"

    def test_nested_grouping(self):
        phi = Not(Or((VarEq("x", "y"), VarEq("y", "z"))))
        assert format_formula(phi) == "¬(x = y ∨ y = z)"


class TestFreeVariables:
    def test_atoms(self):
        assert free_variables(AdjAtom("u", "v")) == {"u": "vertex", "v": "vertex"}
        assert free_variables(Membership("x", "X")) == {"x": "vertex", "X": "set"}
        assert free_variables(EvenAtom("Q")) == {"Q": "set"}

    def test_quantifier_binds(self):
        phi = ExistsVertex("v", AdjAtom("u", "v"))
        assert free_variables(phi) == {"u": "vertex"}
        assert free_variables(ForallSet("Q", EvenAtom("Q"))) == {}

    def test_shadowing(self):
        # outer v is free, inner v is bound
        phi = And((Membership("v", "X"), ExistsVertex("v", Membership("v", "X"))))
        assert free_variables(phi) == {"v": "vertex", "X": "set"}

    def test_kind_clash(self):
        with pytest.raises(FormulaError):
            free_variables(And((Membership("a", "b"), VarEq("a", "b"))))

    def test_sentence(self):
        assert free_variables(build_complete_vm("X")) == {"X": "set"}


class TestMeasures:
    # sizes of the fixed family are pinned; any edit to the constructors
    # that changes nesting shows up here
    FAMILY_RANKS = {
        "Disjoint": 1,
        "Part": 1,
        "EvenInter": 2,
        "Member": 4,
        "Eul": 7,
        "Base": 4,
        "Adj": 7,
    }

    def test_family_quantifier_ranks(self):
        family = build_formula_family()
        assert set(family) == set(self.FAMILY_RANKS)
        for name, phi in family.items():
            assert quantifier_rank(phi) == self.FAMILY_RANKS[name], name

    def test_vm_formula_rank_constant(self):
        for h in (Graph.complete([0, 1]), Graph.path(range(3)),
                  Graph.complete(range(4))):
            assert quantifier_rank(build_vm_formula(h)) == 10

    def test_rank_of_atoms(self):
        assert quantifier_rank(AdjAtom("u", "v")) == 0
        assert quantifier_rank(Not(ExistsVertex("v", VarEq("v", "v")))) == 1

    def test_length(self):
        assert formula_length(AdjAtom("u", "v")) == 1
        assert formula_length(And((AdjAtom("u", "v"), Not(VarEq("u", "v"))))) == 4
        # vm formula grows with the number of target pairs, rank does not
        small = formula_length(build_vm_formula(Graph.complete([0, 1])))
        large = formula_length(build_vm_formula(Graph.complete([0, 1, 2])))
        assert small < large


class TestEvaluate:
    def test_atoms_on_path(self):
        g = Graph.path(range(3))
        assert evaluate(g, AdjAtom("u", "v"), {"u": 0, "v": 1})
        assert not evaluate(g, AdjAtom("u", "v"), {"u": 0, "v": 2})
        # adjacency is irreflexive by definition
        assert not evaluate(g, AdjAtom("u", "v"), {"u": 1, "v": 1})
        assert evaluate(g, VarEq("u", "v"), {"u": 2, "v": 2})
        assert evaluate(g, Membership("u", "X"), {"u": 0, "X": {0, 2}})
        assert evaluate(g, EvenAtom("X"), {"X": set()})
        assert not evaluate(g, EvenAtom("X"), {"X": {1, 2, 0}})

    def test_quantifiers(self):
        g = Graph.path(range(3))
        has_edge = ExistsVertex("a", ExistsVertex("b", AdjAtom("a", "b")))
        assert evaluate(g, has_edge)
        assert not evaluate(Graph([0, 1], []), has_edge)
        # vertex 1 dominates the path
        dominated = ForallVertex("a", Or((VarEq("a", "c"), AdjAtom("a", "c"))))
        assert evaluate(g, dominated, {"c": 1})
        assert not evaluate(g, dominated, {"c": 0})

    def test_set_quantifiers(self):
        g = Graph.complete(range(3))
        all_even = ForallSet("Q", EvenAtom("Q"))
        assert not evaluate(g, all_even)
        some_odd = ExistsSet("Q", Not(EvenAtom("Q")))
        assert evaluate(g, some_odd)
        assert not evaluate(Graph([], []), some_odd)

    def test_implies_iff(self):
        g = Graph([0], [])
        a, b = Membership("v", "A"), Membership("v", "B")
        cases = [(set(), set()), ({0}, set()), (set(), {0}), ({0}, {0})]
        for sa, sb in cases:
            env = {"v": 0, "A": sa, "B": sb}
            assert evaluate(g, implies(a, b), env) == ((0 not in sa) or (0 in sb))
            assert evaluate(g, iff(a, b), env) == ((0 in sa) == (0 in sb))

    def test_subset_formula(self):
        g = Graph.path(range(4))
        phi = subset_formula("A", "B", set())
        assert evaluate(g, phi, {"A": {1, 2}, "B": {0, 1, 2}})
        assert not evaluate(g, phi, {"A": {1, 3}, "B": {0, 1, 2}})
        assert evaluate(g, phi, {"A": set(), "B": set()})

    def test_missing_binding(self):
        g = Graph.path(range(3))
        with pytest.raises(FormulaError, match="unbound"):
            evaluate(g, AdjAtom("u", "v"), {"u": 0})

    def test_extra_binding(self):
        g = Graph.path(range(3))
        with pytest.raises(FormulaError, match="unknown"):
            evaluate(g, VarEq("u", "u"), {"u": 0, "w": 1})

    def test_bad_values(self):
        g = Graph.path(range(3))
        with pytest.raises(FormulaError):
            evaluate(g, Membership("u", "X"), {"u": True, "X": set()})
        with pytest.raises(FormulaError):
            evaluate(g, Membership("u", "X"), {"u": 7, "X": set()})
        with pytest.raises(FormulaError):
            evaluate(g, Membership("u", "X"), {"u": 0, "X": {9}})
        with pytest.raises(FormulaError):
            evaluate(g, EvenAtom("X"), {"X": 3})


class TestFamilySemantics:
    def test_disjoint(self):
        g = Graph.complete(range(3))
        phi = build_formula_family()["Disjoint"]
        assert evaluate(g, phi, {"X": {0}, "Y": {1}, "Z": set()})
        assert not evaluate(g, phi, {"X": {0, 1}, "Y": {1}, "Z": set()})

    def test_part(self):
        g = Graph.complete(range(3))
        phi = build_formula_family()["Part"]
        assert evaluate(g, phi, {"X": {0, 2}, "Y": {1}, "Z": set()})
        # disjoint but not covering
        assert not evaluate(g, phi, {"X": {0}, "Y": {1}, "Z": set()})

    def test_even_inter(self):
        g = Graph.star(0, [1, 2, 3])
        phi = build_formula_family()["EvenInter"]
        # N(0) = {1,2,3}
        assert evaluate(g, phi, {"v": 0, "Q": {1, 2}})
        assert not evaluate(g, phi, {"v": 0, "Q": {1, 2, 3}})
        assert evaluate(g, phi, {"v": 0, "Q": {0}})
        # leaves see only the centre
        assert not evaluate(g, phi, {"v": 1, "Q": {0, 2}})

    def test_member_matches_algebraic_predicate(self):
        # every assignment of each vertex to x / y / z / none, small n
        phi = build_formula_family()["Member"]
        for labels in ([0], [0, 1], [0, 1, 2]):
            for g in all_graphs(labels):
                n = len(labels)
                for code in range(4 ** n):
                    parts = (set(), set(), set())
                    c = code
                    for v in labels:
                        c, r = divmod(c, 4)
                        if r:
                            parts[r - 1].add(v)
                    want = is_member_triple(g, *parts)
                    got = evaluate(g, phi,
                                   {"X": parts[0], "Y": parts[1], "Z": parts[2]})
                    assert got == want, (g.edges, parts)

    def test_eul_identity_convention(self):
        # the tripartition describing the graph itself puts every vertex in
        # the first part; swapping it into the second part must fail
        g = Graph.complete(range(3))
        phi = build_formula_family()["Eul"]
        v = set(g.vertices)
        assert evaluate(g, phi, {"X_e": v, "Y_e": set(), "Z_e": set()})
        assert not evaluate(g, phi, {"X_e": set(), "Y_e": v, "Z_e": set()})

    def test_eul_matches_linear_predicate(self):
        phi = build_formula_family()["Eul"]
        for g in (Graph.path(range(3)), Graph([0, 1, 2], [(0, 1)])):
            for t in _covering_triples(g):
                want = is_eulerian(g, t)
                got = evaluate(g, phi, {"X_e": t[0], "Y_e": t[1], "Z_e": t[2]})
                assert got == want, (g.edges, t)

    def test_adj_matches_described_graph(self):
        g = Graph.path(range(3))
        phi = build_formula_family()["Adj"]
        for t in eulerian_vectors(g)[:3]:
            desc = graph_from_eulerian(g, t)
            base = {"X_e": t.x_part, "Y_e": t.y_part, "Z_e": t.z_part}
            for a in range(3):
                for b in range(a + 1, 3):
                    got = evaluate(g, phi, {**base, "u": a, "v": b})
                    assert got == desc.has_edge(a, b), (t, a, b)


def _covering_triples(g):
    import itertools
    labels = g.vertices
    for codes in itertools.product(range(3), repeat=len(labels)):
        parts = (set(), set(), set())
        for v, c in zip(labels, codes):
            parts[c].add(v)
        yield parts


class TestVMFormulas:
    def test_free_variables_are_target_vertices(self):
        h = Graph.complete([1, 4])
        phi = build_vm_formula(h)
        assert free_variables(phi) == {"x1": "vertex", "x4": "vertex"}
        assert vm_vertex_variable(4) == "x4"

    def test_vm_prime_leaves_tripartition_free(self):
        h = Graph.complete([0, 1])
        free = free_variables(build_vm_prime(h))
        assert free == {"x0": "vertex", "x1": "vertex",
                        "X_e": "set", "Y_e": "set", "Z_e": "set"}

    def test_closed_vm_on_two_vertices(self):
        h = Graph.complete([0, 1])
        phi = build_vm_formula(h)
        binding = {"x0": 0, "x1": 1}
        assert evaluate(Graph.complete([0, 1]), phi, binding)
        assert not evaluate(Graph([0, 1], []), phi, binding)

    def test_vm_prime_respects_non_edges(self):
        # edgeless target inside a single edge: no tripartition satisfies
        # the open formula, because non-edges are constrained too
        h = Graph([0, 1], [])
        g = Graph.complete([0, 1])
        n = counting_bruteforce(g, build_vm_prime(h), {"x0": 0, "x1": 1})
        assert n == 0

    def test_vm_prime_satisfying_triples_describe_target(self):
        h = Graph.complete([0, 1])
        g = Graph.complete([0, 1])
        got = listing_bruteforce(g, build_vm_prime(h), {"x0": 0, "x1": 1})
        assert got
        for a in got:
            t = (a["X_e"], a["Y_e"], a["Z_e"])
            assert is_eulerian(g, t)
            desc = graph_from_eulerian(g, t)
            assert desc.induced_subgraph([0, 1]) == h


class TestRelativize:
    def test_semantics_matches_induced_subgraph(self):
        has_edge = ExistsVertex("a", ExistsVertex("b", AdjAtom("a", "b")))
        rel = relativize(has_edge, "X")
        assert free_variables(rel) == {"X": "set"}
        g = Graph([0, 1, 2, 3], [(0, 1)])
        assert evaluate(g, rel, {"X": {0, 1}})
        assert not evaluate(g, rel, {"X": {1, 2}})
        assert not evaluate(g, rel, {"X": set()})

    def test_set_quantifiers_become_subset_bounded(self):
        phi = ForallSet("Q", EvenAtom("Q"))
        rel = relativize(phi, "X")
        g = Graph.path(range(3))
        # subsets of a singleton have sizes 0 and 1
        assert not evaluate(g, rel, {"X": {0}})
        assert evaluate(g, rel, {"X": set()})

    def test_bound_variable_clash_renamed(self):
        phi = ExistsVertex("X", VarEq("X", "X"))
        rel = relativize(phi, "X")
        g = Graph.path(range(2))
        assert evaluate(g, rel, {"X": {0}})
        assert not evaluate(g, rel, {"X": set()})


class TestPropertyLifting:
    def test_rejects_open_formulas(self):
        with pytest.raises(FormulaError):
            build_prop_vm(AdjAtom("u", "v"))

    def test_matches_ghz_decision_two_vertices(self):
        sentence = ForallVertex("a", ForallVertex("b", implies(
            Not(VarEq("a", "b")), AdjAtom("a", "b"))))
        lifted = build_prop_vm(sentence, "X")
        complete = build_complete_vm("X")
        for g in all_graphs([0, 1]):
            want = has_ghz_minor(g, [0, 1]) is not None
            assert evaluate(g, lifted, {"X": {0, 1}}) == want
            assert evaluate(g, complete, {"X": {0, 1}}) == want

    def test_complete_vm_on_three_vertices(self):
        # star reaches the triangle by complementing its centre
        star = Graph.star(0, [1, 2])
        assert evaluate(star, build_complete_vm("X"), {"X": {0, 1, 2}})

    def test_complete_vm_false_without_edges(self):
        g = Graph([0, 1, 2], [])
        assert not evaluate(g, build_complete_vm("X"), {"X": {0, 1}})


class TestBruteforceSolvers:
    def setup_method(self):
        self.g = Graph.path(range(3))
        # v is adjacent to every member of Q
        self.phi = ForallVertex("u", implies(Membership("u", "Q"),
                                             AdjAtom("u", "v")))

    def test_selection_first_in_canonical_order(self):
        got = selection_bruteforce(self.g, self.phi)
        assert got == {"Q": frozenset(), "v": 0}

    def test_selection_none(self):
        phi = And((EvenAtom("Q"), Not(EvenAtom("Q"))))
        assert selection_bruteforce(self.g, phi) is None

    def test_listing_respects_partial(self):
        got = listing_bruteforce(self.g, self.phi, {"v": 1})
        sets = [a["Q"] for a in got]
        assert sets == [frozenset(), frozenset({0}), frozenset({2}),
                        frozenset({0, 2})]

    def test_counting(self):
        # Q ranges over subsets of N(v): 2 + 4 + 2 over the three choices
        assert counting_bruteforce(self.g, self.phi) == 8

    def test_optimizing(self):
        got = optimizing_bruteforce(self.g, self.phi, "Q")
        assert got == {"Q": frozenset({0, 2}), "v": 1}

    def test_optimizing_needs_set_variable(self):
        with pytest.raises(FormulaError):
            optimizing_bruteforce(self.g, self.phi, "v")

    def test_partial_with_unknown_name_rejected(self):
        with pytest.raises(FormulaError):
            selection_bruteforce(self.g, self.phi, {"R": set()})

    def test_size_cap(self):
        big = Graph.path(range(9))
        with pytest.raises(SizeLimitError):
            selection_bruteforce(big, ExistsVertex("v", Membership("v", "Q")))
        # vertex-only searches are not capped
        assert selection_bruteforce(
            big, AdjAtom("u", "v"), limit=8) == {"u": 0, "v": 1}
