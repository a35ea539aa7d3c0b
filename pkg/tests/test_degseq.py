from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxcon.degseq import (
    DegreeSequence,
    complement_reverse,
    edmonds_feasible,
    is_graphic,
    realize,
    subtract_k,
)
from maxcon.errors import NotGraphic, ParseError, ValidationError
from maxcon.graph import Graph


def all_degree_sequences(n: int) -> set[tuple[int, ...]]:
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        d = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                d[u] += 1
                d[v] += 1
        out.add(tuple(sorted(d, reverse=True)))
    return out


@pytest.mark.parametrize(
    "seq, expected",
    [((3, 3, 3, 3), True), ((0,), True), ((3, 3, 1, 1), False), ((), True), ((1,), False), ((4, 1, 1, 1, 1), True)],
)
def test_is_graphic_examples(seq, expected):
    assert is_graphic(seq) is expected


@pytest.mark.parametrize("n", range(1, 6))
def test_is_graphic_matches_exhaustive_enumeration(n):
    realizable = all_degree_sequences(n)
    for seq in itertools.product(range(n + 1), repeat=n):
        if list(seq) != sorted(seq, reverse=True):
            continue
        assert is_graphic(seq) == (seq in realizable), seq


def test_sequence_must_be_non_increasing():
    with pytest.raises(ValidationError):
        DegreeSequence((1, 2))
    with pytest.raises(ValidationError):
        DegreeSequence((2, -1))


def test_parse_and_unsorted_order():
    seq = DegreeSequence.parse("1, 3,2")
    assert seq.terms == (3, 2, 1)
    assert seq.degrees == (1, 3, 2)
    with pytest.raises(ParseError) as err:
        DegreeSequence.parse("3,a")
    assert err.value.column == 3


@pytest.mark.parametrize(
    "seq, edges",
    [((2, 2, 2), {(1, 2), (1, 3), (2, 3)}), ((1, 1), {(1, 2)}), ((3, 3, 3, 3), set(Graph.complete(4).edges()))],
)
def test_realize_examples(seq, edges):
    assert realize(seq).edge_set() == edges


def test_realize_keeps_caller_labels():
    seq = DegreeSequence.from_unsorted([1, 2, 1])
    assert realize(seq).degrees() == (1, 2, 1)


def test_realize_rejects_non_graphic():
    with pytest.raises(NotGraphic):
        realize((3, 3, 1, 1))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=10))
def test_realize_property(values):
    seq = sorted(values, reverse=True)
    if len(seq) <= seq[0] or not is_graphic(seq):
        return
    g = realize(seq)
    assert g.degree_sequence() == tuple(seq)
    assert nx.is_valid_degree_sequence_erdos_gallai(seq)


@pytest.mark.parametrize(
    "seq, k, out", [((3, 3, 3, 3), 1, (2, 2, 2, 2)), ((5, 4, 3), 0, (5, 4, 3)), ((2, 2, 2), 2, (0, 0, 0))]
)
def test_subtract_k(seq, k, out):
    assert subtract_k(seq, k).terms == out


def test_subtract_k_underflow():
    with pytest.raises(ValidationError):
        subtract_k((2, 1), 2)


@pytest.mark.parametrize(
    "seq, out", [((3, 2, 2, 1), (2, 1, 1, 0)), ((2, 2, 2), (0, 0, 0)), ((0, 0, 0, 0), (3, 3, 3, 3))]
)
def test_complement_reverse(seq, out):
    assert complement_reverse(seq).terms == out


def test_complement_reverse_matches_graph_complement():
    for seq in [(3, 2, 2, 1), (4, 4, 2, 2, 2), (1, 1, 0)]:
        g = realize(seq)
        assert g.complement().degree_sequence() == complement_reverse(seq).terms


@pytest.mark.parametrize(
    "seq, k, expected",
    [((1, 1, 1, 1), 1, False), ((2, 2, 2), 2, True), ((3, 3, 3, 3, 1, 1), 2, False), ((3, 1, 1, 1), 1, True)],
)
def test_edmonds_feasible(seq, k, expected):
    assert edmonds_feasible(seq, k) is expected


def test_edmonds_feasible_errors():
    with pytest.raises(ValidationError):
        edmonds_feasible((2, 2, 2), 0)
    with pytest.raises(NotGraphic):
        edmonds_feasible((3, 3, 1, 1), 1)
