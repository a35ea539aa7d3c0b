"""Rewiring with a protected subgraph, in both modes.

A network designer may want some links frozen (F) and others free to move
(Z0). Here two K4 clusters hang together by one link. A perfect matching
inside the clusters is protected. Full mode fixes the rest of the graph up
to lambda = delta; relaxed mode may stop one short when delta is odd.
"""

from __future__ import annotations

from itertools import combinations

from maxcon import Graph, Mode, RewireProblem, edge_connectivity, rewire
from maxcon.graph import subtract_edges

clusters = list(combinations(range(1, 5), 2)) + list(combinations(range(5, 9), 2))
g0 = Graph(8, clusters + [(4, 5)])
f = Graph(8, [(1, 2), (6, 7)])

for mode in (Mode.FULL, Mode.RELAXED):
    problem = RewireProblem(g0, f, mode=mode)
    h0 = subtract_edges(g0, f)
    g, cert = rewire(problem)
    h = subtract_edges(g, f)
    print(f"{mode.value:>7}: lambda(G0-F) = {edge_connectivity(h0)[0]} -> {edge_connectivity(h)[0]}"
          f" (delta = {h.min_degree()}), {cert.moves_applied} move(s)")
    assert f.edge_set() <= g.edge_set(), "protected edges must survive"
    assert g.degrees() == g0.degrees()

print("\nprotected edges kept:", f.edges())
