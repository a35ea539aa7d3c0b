"""Regenerate ``graphs_upto8.g6``: one graph per isomorphism class, 1 <= n <= 8.

n <= 7 comes straight from the networkx graph atlas. The 8-vertex classes are
grown by attaching a new vertex to every subset of every 7-vertex class and
deduplicating with a Weisfeiler-Lehman hash plus an exact isomorphism test.
Expected class counts: 1, 2, 4, 11, 34, 156, 1044, 12346.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = Path(__file__).with_name("graphs_upto8.g6")


def eight_vertex_classes(sevens: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = defaultdict(list)
    for g in sevens:
        nodes = list(g.nodes)
        for size in range(len(nodes) + 1):
            for nbrs in combinations(nodes, size):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
                if not any(nx.is_isomorphic(h, o) for o in buckets[key]):
                    buckets[key].append(h)
    return [g for group in buckets.values() for g in group]


def main() -> None:
    atlas = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1]
    sevens = [g for g in atlas if g.number_of_nodes() == 7]
    graphs = atlas + eight_vertex_classes(sevens)
    lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
    OUT.write_text("\n".join(lines) + "\n")
    counts = defaultdict(int)
    for g in graphs:
        counts[g.number_of_nodes()] += 1
    print(dict(sorted(counts.items())))


if __name__ == "__main__":
    main()
