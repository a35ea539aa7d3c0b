from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxcon.errors import IllegalExchange, OverlapError, ValidationError
from maxcon.graph import (
    ExchangeMove,
    Graph,
    boundary,
    bridges,
    cut_size,
    edge_exchange,
    subtract_edges,
    union_edges,
)

from conftest import bowtie, to_nx

import networkx as nx


def test_rejects_loops_and_parallel_edges():
    with pytest.raises(ValidationError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValidationError):
        Graph(3, [(1, 2), (2, 1)])
    with pytest.raises(ValidationError):
        Graph(3, [(1, 4)])


def test_basic_queries():
    g = Graph.cycle(5)
    assert g.edge_count == 5
    assert all(g.degree(v) == 2 for v in g.vertices)
    assert g.complement().edge_count == 5
    assert Graph.complete(4).min_degree() == 3
    assert Graph.path(3).edges() == [(1, 2), (2, 3)]


@pytest.mark.parametrize(
    "g, x, y, value",
    [
        (Graph.complete(4), {1, 2}, {3, 4}, 4),
        (Graph.complete(4), set(), {1, 2}, 0),
        (bowtie(), {1, 2, 3}, {4, 5, 6}, 1),
    ],
)
def test_cut_size(g, x, y, value):
    assert cut_size(g, x, y) == value


def test_cut_size_overlap_counts_inner_edges_once():
    # X = {1,2}, Y = {2,3} on a triangle: edges 1-2, 1-3, 2-3 each counted once
    assert cut_size(Graph.complete(3), {1, 2}, {2, 3}) == 3


@pytest.mark.parametrize(
    "g, a, out",
    [(bowtie(), {1, 2, 3}, {3}), (Graph.complete(4), {1, 2}, {1, 2}), (bowtie(), set(range(1, 7)), set())],
)
def test_boundary(g, a, out):
    assert boundary(g, a) == out


def test_exchange_on_four_vertices():
    # path v-x0 plus edge x1-u; with v, x0, x1, u = 1, 2, 3, 4
    g = Graph(4, [(1, 2), (3, 4)])
    h = edge_exchange(g, ExchangeMove(1, 2, 4, 3))
    assert h.edge_set() == {(1, 3), (2, 4)}


def test_exchange_splits_c6_into_triangles():
    h = edge_exchange(Graph.cycle(6), ExchangeMove(1, 2, 4, 5))
    assert h.edge_set() == {(1, 5), (2, 4), (2, 3), (3, 4), (5, 6), (1, 6)}
    assert len(h.components()) == 2
    assert h.degrees() == (2,) * 6


def test_illegal_exchange_reports_pair():
    g = Graph(4, [(1, 2), (3, 4), (1, 4)])
    with pytest.raises(IllegalExchange) as err:
        edge_exchange(g, ExchangeMove(1, 2, 3, 4))
    assert err.value.pair == (1, 4)


def test_move_inverse_restores():
    g = Graph.cycle(6)
    m = ExchangeMove(1, 2, 4, 5)
    assert edge_exchange(edge_exchange(g, m), m.inverse()) == g


def test_subtract_and_union():
    k4 = Graph.complete(4)
    f = Graph(4, [(1, 2), (3, 4)])
    c4 = subtract_edges(k4, f)
    assert c4.edge_set() == {(1, 3), (1, 4), (2, 3), (2, 4)}
    assert subtract_edges(k4, Graph.empty(4)) == k4
    assert subtract_edges(Graph.cycle(4), Graph.cycle(4)).edge_count == 0
    m2 = Graph(4, [(1, 3), (2, 4)])
    assert set(union_edges(f, m2).degrees()) == {2}
    with pytest.raises(OverlapError):
        union_edges(f, f)


def test_bridges_match_networkx():
    for g in [bowtie(), Graph.path(5), Graph.cycle(5)]:
        expected = {tuple(sorted(e)) for e in nx.bridges(to_nx(g))}
        assert bridges(g) == expected


edge_lists = st.integers(2, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])),
    )
)


@settings(max_examples=200, deadline=None)
@given(edge_lists, st.randoms(use_true_random=False))
def test_exchange_preserves_degrees(data, rnd):
    n, edges = data
    g = Graph(n, edges)
    es = g.edges()
    if len(es) < 2:
        return
    (a, ap), (b, bp) = rnd.sample(es, 2)
    m = ExchangeMove(a, ap, b, bp)
    if len({a, ap, b, bp}) < 4 or g.has_edge(a, bp) or g.has_edge(ap, b):
        with pytest.raises(ValidationError):
            edge_exchange(g, m)
        return
    h = edge_exchange(g, m)
    assert h.degrees() == g.degrees()
    assert h.edge_count == g.edge_count


@settings(max_examples=200, deadline=None)
@given(edge_lists)
def test_components_match_networkx(data):
    n, edges = data
    g = Graph(n, edges)
    ours = sorted(sorted(c) for c in g.components())
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
