from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from maxcon import cuts
from maxcon.errors import DisconnectedError, NotApplicable, ValidationError
from maxcon.graph import Graph, cut_size
from maxcon.oracle import brute_min_cut, brute_weak_sets, clustered_graph

from conftest import bowtie, to_nx


def chained_bowties() -> Graph:
    # triangles {1,2,3}, {4,5,6}, {7,8,9} joined by bridges 3-4 and 6-7
    tri = [(1, 2), (1, 3), (2, 3)]
    edges = [(u + s, v + s) for s in (0, 3, 6) for u, v in tri]
    return Graph(9, edges + [(3, 4), (6, 7)])


@pytest.mark.parametrize("g, lam", [(Graph.complete(4), 3), (Graph.cycle(6), 2), (bowtie(), 1), (Graph.path(3), 1)])
def test_edge_connectivity(g, lam):
    value, cut = cuts.edge_connectivity(g)
    assert value == lam
    assert 1 in cut.side
    assert cut_size(g, cut.side, set(g.vertices) - cut.side) == lam


def test_bowtie_witness():
    _, cut = cuts.edge_connectivity(bowtie())
    assert cut.side == {1, 2, 3}


def test_disconnected_graph_has_lambda_zero():
    g = Graph(4, [(1, 2), (3, 4)])
    assert cuts.lambda_of(g) == 0
    with pytest.raises(DisconnectedError):
        cuts.enumerate_min_cuts(g)
    # the potential counts the 2^(c-1) - 1 ways to split the components
    assert cuts.potential(Graph.empty(3)) == (0, 3)


def test_single_vertex_rejected():
    with pytest.raises(ValidationError):
        cuts.edge_connectivity(Graph.empty(1))


@pytest.mark.parametrize(
    "g, count",
    [(Graph.complete(4), 4), (Graph.path(3), 2), (Graph.cycle(4), 6), (Graph.cycle(6), 15), (bowtie(), 1)],
)
def test_min_cut_counts(g, count):
    found = cuts.enumerate_min_cuts(g)
    assert len(found) == count
    assert len({c.side for c in found}) == count
    assert {c.side for c in found} == set(brute_min_cut(g)[1])


def test_against_stoer_wagner_and_brute_force():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 11)
        p = rng.uniform(0.2, 0.9)
        g = Graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])
        lam, shores = brute_min_cut(g)
        assert cuts.lambda_of(g) == lam
        if lam > 0:
            assert nx.stoer_wagner(to_nx(g))[0] == lam
            found = [c.side for c in cuts.enumerate_min_cuts(g)]
            assert len(found) == len(shores) and set(found) == set(shores)


def test_classify_bowtie():
    g = bowtie()
    c = cuts.classify(g, {1, 2, 3})
    assert c.is_weak and c.is_minimally_weak and c.is_critically_weak
    assert not cuts.classify(g, {1, 2, 3, 4}).is_weak


def test_classify_outside_regime():
    with pytest.raises(NotApplicable):
        cuts.classify(Graph.complete(4), {1, 2})


def test_find_critically_weak_descends():
    g = chained_bowties()
    a = frozenset(range(1, 7))
    assert cuts.classify(g, a).is_weak
    found = cuts.find_critically_weak(g, a)
    assert found == {1, 2, 3}
    assert cuts.classify(g, found).is_critically_weak
    assert cuts.find_critically_weak(bowtie(), {1, 2, 3}) == {1, 2, 3}


def test_find_critically_weak_rejects_non_weak():
    with pytest.raises(ValidationError):
        cuts.find_critically_weak(bowtie(), {1})


def test_classification_matches_brute_force():
    rng = random.Random(11)
    checked = 0
    while checked < 40:
        g = clustered_graph(rng, 9)
        lam, delta, weak = brute_weak_sets(g)
        if lam >= delta:
            continue
        checked += 1
        weak_set = set(weak)
        for mask in rng.sample(sorted(weak_set), min(5, len(weak_set))):
            members = frozenset(v for v in g.vertices if mask >> v & 1)
            c = cuts.classify(g, members)
            critical = not any(w != mask and w & ~mask == 0 for w in weak_set)
            assert c.is_weak
            assert c.is_critically_weak == critical
            assert c.is_minimally_weak == (cut_size(g, members, set(g.vertices) - members) == lam)
            found = cuts.find_critically_weak(g, members)
            assert found <= members and cuts.classify(g, found).is_critically_weak


def test_split_bounds_bowtie():
    r = cuts.check_split_bounds(bowtie(), {1, 2, 3}, {1, 2, 3}, {1})
    assert r.case == "whole"
    assert (r.inner_cut, r.inner_bound, r.holds) == (2, 2, True)


def test_split_bounds_reject_non_splitting_x():
    with pytest.raises(ValidationError):
        cuts.check_split_bounds(bowtie(), {1, 2, 3}, {1, 2, 3}, {4})


def test_interior_bowtie():
    r = cuts.check_interior(bowtie(), {1, 2, 3})
    assert r.interior == {1, 2} and r.holds
