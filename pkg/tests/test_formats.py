from __future__ import annotations

import random

import networkx as nx
import pytest

from maxcon.errors import ParseError
from maxcon.formats import format_edge_list, from_graph6, parse_edge_list, read_graph, to_graph6, write_graph
from maxcon.graph import Graph

from conftest import bowtie, to_nx


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


def test_edge_list_round_trip():
    g = bowtie()
    text = format_edge_list(g)
    assert text.splitlines()[0] == "6 7"
    assert parse_edge_list(text) == g
    assert format_edge_list(parse_edge_list(text)) == text


@pytest.mark.parametrize(
    "text, line",
    [("3 1\n1 4\n", 2), ("3 2\n1 2\n", 1), ("3 2\n1 2\n2 1\n", 3), ("3 1\n1 x\n", 2), ("x\n", 1)],
)
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_graph6_matches_networkx():
    rng = random.Random(7)
    for n in [1, 2, 5, 8, 13, 62, 63, 70]:
        g = random_graph(n, 0.4, rng)
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs
        assert from_graph6(ours) == g
        back = nx.from_graph6_bytes(ours.encode())
        assert sorted(tuple(sorted((u + 1, v + 1))) for u, v in back.edges()) == g.edges()


def test_graph6_header():
    g = Graph.cycle(5)
    assert to_graph6(g, header=True).startswith(">>graph6<<")
    assert from_graph6(to_graph6(g, header=True)) == g


def test_file_io(tmp_path):
    g = bowtie()
    for name in ["g.el", "g.g6"]:
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
