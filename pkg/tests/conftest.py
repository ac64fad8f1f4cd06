"""Shared corpus generators and independent reference implementations.

The references here deliberately avoid the package's bit-row kernels:
complementation works on adjacency sets, rank on lists of lists.  Tests
compare the fast paths against these.
"""

import itertools
import random

import pytest

from vminor.graph import Graph

# roll-call lines from the acceptance sweep; emitted after capture ends
ACCEPTANCE_REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_REPORT:
        return
    terminalreporter.write_line("")
    for line in ACCEPTANCE_REPORT:
        terminalreporter.write_line(line)


def all_graphs(labels):
    """Every labeled graph on the given vertices, in edge-mask order."""
    labels = tuple(labels)
    pairs = list(itertools.combinations(labels, 2))
    for bits in range(1 << len(pairs)):
        yield Graph(labels,
                    [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])


def connected_graphs(labels):
    for g in all_graphs(labels):
        if len(g.connected_components()) <= 1:
            yield g


def random_graph(rng: random.Random, labels, p: float = 0.5) -> Graph:
    labels = tuple(labels)
    pairs = list(itertools.combinations(labels, 2))
    return Graph(labels, [e for e in pairs if rng.random() < p])


def adjacency_sets(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in g.vertices}


def lc_reference(g: Graph, v: int) -> Graph:
    """Local complementation done on plain edge sets."""
    nv = set(g.neighbors(v))
    edges = set(g.edges)
    for a, b in itertools.combinations(sorted(nv), 2):
        if (a, b) in edges:
            edges.discard((a, b))
        else:
            edges.add((a, b))
    return Graph(g.vertices, edges)


def rank_reference(rows: list[list[int]]) -> int:
    """GF(2) rank by elimination on lists of 0/1 entries."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def cut_rank_reference(g: Graph, side) -> int:
    side = set(side)
    rest = [v for v in g.vertices if v not in side]
    rows = [[1 if u in set(g.neighbors(v)) else 0 for u in rest]
            for v in sorted(side)]
    return rank_reference(rows) if rows and rest else 0


@pytest.fixture(scope="session")
def rng():
    return random.Random(20210917)


@pytest.fixture(scope="session")
def graphs_n3():
    return list(all_graphs((0, 1, 2)))


@pytest.fixture(scope="session")
def graphs_n4():
    return list(all_graphs((0, 1, 2, 3)))
