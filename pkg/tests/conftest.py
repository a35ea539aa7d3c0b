from __future__ import annotations

import itertools
import sys
from pathlib import Path

import networkx as nx
import pytest

from maxcon.formats import from_graph6
from maxcon.graph import Graph

DATA = Path(__file__).parent / "data"


def bowtie() -> Graph:
    """Two triangles {1,2,3}, {4,5,6} joined by the bridge 3-4."""
    return Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)])


def two_triangles() -> Graph:
    return Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])


def two_k4(links: list[tuple[int, int]] = ()) -> Graph:
    edges = list(itertools.combinations(range(1, 5), 2)) + list(itertools.combinations(range(5, 9), 2))
    return Graph(8, edges + list(links))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def small_graphs(max_n: int = 8) -> list[Graph]:
    """One graph per isomorphism class, 1 <= n <= max_n (frozen corpus)."""
    lines = (DATA / "graphs_upto8.g6").read_text().split()
    graphs = [from_graph6(line) for line in lines]
    return [g for g in graphs if g.n <= max_n]


@pytest.fixture
def bowtie_graph() -> Graph:
    return bowtie()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
