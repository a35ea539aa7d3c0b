"""Immutable simple graphs on vertices 1..n, stored as bitset rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Bit 0 is never used, so vertex labels stay 1-based throughout.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Union

from .errors import IllegalExchange, OverlapError, ValidationError

VertexSet = frozenset
Edge = tuple[int, int]
VertexLike = Union[Iterable[int], int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """A labeled simple undirected graph with vertex set {1, ..., n}."""

    __slots__ = ("_n", "_rows", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        rows = [0] * (n + 1)
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValidationError(f"parallel edge {min(u, v)}-{max(u, v)}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._set(n, tuple(rows))

    def _set(self, n: int, rows: tuple[int, ...]) -> None:
        self._n = n
        self._rows = rows
        self._m = sum(r.bit_count() for r in rows) // 2
        self._hash = None

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> Graph:
        """Build from adjacency rows (index 0 unused). Rows must be symmetric."""
        g = cls.__new__(cls)
        g._set(n, tuple(rows))
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_rows(n, (0,) * (n + 1))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = full_mask(n)
        return cls.from_rows(n, [0] + [full & ~(1 << v) for v in range(1, n + 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(1, n)])

    # -- basic accessors ------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    @property
    def full_mask(self) -> int:
        return full_mask(self._n)

    def row(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Degrees of vertices 1..n, in label order."""
        return tuple(r.bit_count() for r in self._rows[1:])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted ascending."""
        out = []
        for u in range(1, self._n + 1):
            out.extend((u, v) for v in bits(self._rows[u] >> (u + 1) << (u + 1)))
        return out

    def edge_set(self) -> set[Edge]:
        return set(self.edges())

    # -- derived graphs -------------------------------------------------------

    def complement(self) -> Graph:
        full = self.full_mask
        rows = [0] + [full & ~r & ~(1 << v) for v, r in enumerate(self._rows) if v]
        return Graph.from_rows(self._n, rows)

    def relabel(self, mapping: dict[int, int] | list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``mapping[v]``."""
        return Graph(self._n, [(mapping[u], mapping[v]) for u, v in self.edges()])

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> Graph:
        rows = list(self._rows)
        for u, v in remove:
            if not rows[u] >> v & 1:
                raise ValidationError(f"edge {u}-{v} not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            _check_vertex(self._n, u)
            _check_vertex(self._n, v)
            if u == v or rows[u] >> v & 1:
                raise ValidationError(f"cannot add edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph.from_rows(self._n, rows)

    def induced(self, members: VertexLike) -> Graph:
        """Spanning subgraph keeping only edges with both ends in ``members``."""
        mask = to_mask(self._n, members)
        rows = [r & mask if (mask >> v & 1) else 0 for v, r in enumerate(self._rows)]
        rows[0] = 0
        return Graph.from_rows(self._n, rows)

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by smallest member."""
        return [from_mask(c) for c in component_masks(self._n, self._rows)]

    def is_connected(self) -> bool:
        return self._n <= 1 or len(component_masks(self._n, self._rows)) == 1

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


@dataclass(frozen=True)
class ExchangeMove:
    """Swap edges ``a-a_prime`` and ``b-b_prime`` for ``a-b_prime`` and ``a_prime-b``."""

    a: int
    a_prime: int
    b: int
    b_prime: int

    @property
    def removed(self) -> tuple[Edge, Edge]:
        return _e(self.a, self.a_prime), _e(self.b, self.b_prime)

    @property
    def added(self) -> tuple[Edge, Edge]:
        return _e(self.a, self.b_prime), _e(self.a_prime, self.b)

    def inverse(self) -> ExchangeMove:
        # removes ab', a'b and restores aa', bb'
        return ExchangeMove(self.a, self.b_prime, self.b, self.a_prime)

    def key(self) -> tuple[tuple[Edge, Edge], tuple[Edge, Edge]]:
        """Orientation-free identity: the sorted removed and added edge pairs."""
        return tuple(sorted(self.removed)), tuple(sorted(self.added))

    def as_list(self) -> list[int]:
        return [self.a, self.a_prime, self.b, self.b_prime]


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _check_vertex(n: int, v: int) -> None:
    if not (isinstance(v, int) and 1 <= v <= n):
        raise ValidationError(f"vertex {v!r} outside 1..{n}")


def full_mask(n: int) -> int:
    return ((1 << (n + 1)) - 1) ^ 1


def to_mask(n: int, members: VertexLike) -> int:
    """Convert a vertex collection (or an existing mask) to a bitmask."""
    if isinstance(members, int):
        if members & ~full_mask(n):
            raise ValidationError("mask has bits outside 1..n")
        return members
    mask = 0
    for v in members:
        _check_vertex(n, v)
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def component_masks(n: int, rows: tuple[int, ...] | list[int]) -> list[int]:
    seen = 0
    comps = []
    for s in range(1, n + 1):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def bridges(g: Graph) -> set[Edge]:
    """Bridges of ``g`` (iterative Tarjan lowpoint search)."""
    n, rows = g.n, g.rows
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    out: set[Edge] = set()
    clock = 0
    for root in range(1, n + 1):
        if disc[root]:
            continue
        clock += 1
        disc[root] = low[root] = clock
        stack = [(root, 0, iter(bits(rows[root])))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if disc[w]:
                    low[v] = min(low[v], disc[w])
                else:
                    clock += 1
                    disc[w] = low[w] = clock
                    stack.append((w, v, iter(bits(rows[w]))))
                    break
            else:
                stack.pop()
                if parent:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add(_e(parent, v))
    return out


def mask_cut(rows: tuple[int, ...] | list[int], side: int, other: int) -> int:
    """Number of (x, y) pairs with x in ``side``, y in ``other`` and xy an edge."""
    return sum((rows[v] & other).bit_count() for v in bits(side))


# -- set and exchange operations ----------------------------------------------


def cut_size(g: Graph, x: VertexLike, y: VertexLike) -> int:
    """Number of edges with one end in ``x`` and the other in ``y``.

    Edges with both ends inside ``x & y`` are counted once.
    """
    xm = to_mask(g.n, x)
    ym = to_mask(g.n, y)
    ordered = mask_cut(g.rows, xm, ym)
    both = xm & ym
    inner = mask_cut(g.rows, both, both) // 2
    return ordered - inner


def boundary(g: Graph, a: VertexLike) -> frozenset[int]:
    """Vertices of ``a`` with at least one neighbor outside ``a``."""
    am = to_mask(g.n, a)
    out = g.full_mask & ~am
    return frozenset(v for v in bits(am) if g.rows[v] & out)


def edge_exchange(g: Graph, m: ExchangeMove) -> Graph:
    a, ap, b, bp = m.a, m.a_prime, m.b, m.b_prime
    for v in (a, ap, b, bp):
        _check_vertex(g.n, v)
    if len({a, ap, b, bp}) != 4:
        raise IllegalExchange(f"exchange vertices must be distinct: {m.as_list()}")
    for u, v in ((a, ap), (b, bp)):
        if not g.has_edge(u, v):
            raise IllegalExchange(f"{u}-{v} is not an edge", (u, v))
    for u, v in ((a, bp), (ap, b)):
        if g.has_edge(u, v):
            raise IllegalExchange(f"{u}-{v} is already an edge", (u, v))
    return Graph.from_rows(g.n, exchange_rows(g.rows, m))


def exchange_rows(rows: tuple[int, ...] | list[int], m: ExchangeMove) -> list[int]:
    """Apply ``m`` to adjacency rows without any checks."""
    a, ap, b, bp = m.a, m.a_prime, m.b, m.b_prime
    r = list(rows)
    r[a] ^= (1 << ap) | (1 << bp)
    r[ap] ^= (1 << a) | (1 << b)
    r[b] ^= (1 << bp) | (1 << ap)
    r[bp] ^= (1 << b) | (1 << a)
    return r


def subtract_edges(g: Graph, f: Graph, strict: bool = False) -> Graph:
    """``g`` minus the edges of ``f``. With ``strict``, every edge of ``f`` must be in ``g``."""
    _same_order(g, f)
    if strict:
        for u, v in f.edges():
            if not g.has_edge(u, v):
                raise ValidationError(f"edge {u}-{v} of the subtrahend is not in the graph")
    return Graph.from_rows(g.n, [r & ~s for r, s in zip(g.rows, f.rows)])


def union_edges(g: Graph, h: Graph) -> Graph:
    """Edge-disjoint union of two graphs on the same vertex set."""
    _same_order(g, h)
    for v in g.vertices:
        common = g.rows[v] & h.rows[v]
        if common:
            u = next(bits(common))
            raise OverlapError(f"edge {min(u, v)}-{max(u, v)} is in both graphs")
    return Graph.from_rows(g.n, [r | s for r, s in zip(g.rows, h.rows)])


def degree(g: Graph, v: int) -> int:
    _check_vertex(g.n, v)
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return g.min_degree()


def max_degree(g: Graph) -> int:
    return g.max_degree()


def _same_order(g: Graph, h: Graph) -> None:
    if g.n != h.n:
        raise ValidationError(f"vertex-count mismatch: {g.n} vs {h.n}")
