"""Rewire two disjoint triangles into a 2-edge-connected 6-cycle.

The sequence (2,2,2,2,2,2) has a disconnected Havel-Hakimi-style
realization: two triangles. A single degree-preserving exchange joins them,
and the result is a cycle, which is as edge-connected as its minimum degree
allows.
"""

from __future__ import annotations

from maxcon import Graph, RewireProblem, edge_connectivity, rewire

g0 = Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
print("start:", g0.edges())
print("components:", [sorted(c) for c in g0.components()])

g, cert = rewire(RewireProblem(g0))
print("\nafter", cert.moves_applied, "exchange(s):", g.edges())
for move in cert.trace:
    print(f"  removed {move.removed}, added {move.added}")

lam, cut = edge_connectivity(g)
print(f"\nlambda = {lam}, delta = {g.min_degree()}; a minimum shore: {sorted(cut.side)}")
print("certificate:", cert.to_dict())
