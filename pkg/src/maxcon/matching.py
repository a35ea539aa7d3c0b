"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, bits


def maximum_matching(g: Graph) -> list[Edge]:
    """Return a maximum matching of ``g`` as sorted ``(u, v)`` pairs, u < v.

    Runs one alternating-tree search per exposed vertex, shrinking odd
    cycles (blossoms) through the base/label arrays. O(n^3).
    """
    n = g.n
    adj = [list(bits(g.rows[v])) for v in range(n + 1)]
    match = [0] * (n + 1)

    # greedy warm start
    for u in range(1, n + 1):
        if not match[u]:
            for v in adj[u]:
                if not match[v]:
                    match[u], match[v] = v, u
                    break

    for root in range(1, n + 1):
        if not match[root]:
            _augment_from(root, n, adj, match)

    return sorted((u, match[u]) for u in range(1, n + 1) if match[u] > u)


def _augment_from(root: int, n: int, adj: list[list[int]], match: list[int]) -> bool:
    parent = [0] * (n + 1)
    base = list(range(n + 1))
    used = [False] * (n + 1)
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * (n + 1)
        while True:
            a = base[a]
            seen[a] = True
            if not match[a]:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] and parent[match[to]]):
                cur = lca(v, to)
                blossom = [False] * (n + 1)
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(1, n + 1):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif not parent[to]:
                parent[to] = v
                if not match[to]:
                    # augment along the alternating path ending at `to`
                    while to:
                        pv = parent[to]
                        ppv = match[pv]
                        match[to], match[pv] = pv, to
                        to = ppv
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def is_perfect_matching(g: Graph, edges: list[Edge]) -> bool:
    covered = 0
    for u, v in edges:
        if not g.has_edge(u, v) or covered >> u & 1 or covered >> v & 1:
            return False
        covered |= (1 << u) | (1 << v)
    return covered == g.full_mask
