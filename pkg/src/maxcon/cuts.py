"""Edge-connectivity, minimum-cut enumeration and weak-set analysis.

Flows here are unit-capacity flows on the undirected graph, kept as a
per-vertex bitmask of saturated arcs: bit ``v`` of ``sat[u]`` means one
unit travels ``u -> v``. The residual out-neighbourhood of ``u`` is then
``rows[u] & ~sat[u]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor

from .errors import DisconnectedError, NotApplicable, ValidationError
from .graph import (
    Edge,
    Graph,
    VertexLike,
    bits,
    boundary,
    component_masks,
    cut_size,
    from_mask,
    full_mask,
    mask_cut,
    to_mask,
)


@dataclass(frozen=True)
class Cut:
    """One shore of an edge cut together with its crossing edges."""

    side: frozenset[int]
    value: int
    crossing: tuple[Edge, ...]

    def complement(self, n: int) -> frozenset[int]:
        return frozenset(range(1, n + 1)) - self.side


@dataclass(frozen=True)
class WeakClassification:
    is_weak: bool
    is_minimally_weak: bool
    is_critically_weak: bool
    witness: frozenset[int] | None = None


def make_cut(g: Graph, side: VertexLike) -> Cut:
    mask = to_mask(g.n, side)
    if mask == 0 or mask == g.full_mask:
        raise ValidationError("a cut shore must be a nonempty proper subset of V")
    out = g.full_mask & ~mask
    crossing = tuple(sorted(
        (min(u, v), max(u, v)) for u in bits(mask) for v in bits(g.rows[u] & out)
    ))
    return Cut(from_mask(mask), len(crossing), crossing)


def canonical_shore(n: int, mask: int) -> int:
    """The shore containing vertex 1 (the lexicographically smaller one)."""
    return mask if mask & 2 else full_mask(n) & ~mask


# -- flows --------------------------------------------------------------------


def max_flow(rows, n: int, src: int, sink: int, cap: int | None = None) -> tuple[int, list[int]]:
    """Unit-capacity max flow between disjoint vertex masks ``src`` and ``sink``.

    With ``cap`` the search stops as soon as the value exceeds ``cap``; the
    returned value is then ``cap + 1``.
    """
    sat = [0] * (n + 1)
    par = [0] * (n + 1)
    value = 0
    while cap is None or value <= cap:
        visited = frontier = src
        found = 0
        while frontier and not found:
            nxt = 0
            for u in bits(frontier):
                out = rows[u] & ~sat[u] & ~visited
                if not out:
                    continue
                for v in bits(out):
                    par[v] = u
                visited |= out
                nxt |= out
                hit = out & sink
                if hit:
                    found = (hit & -hit).bit_length() - 1
                    break
            frontier = nxt
        if not found:
            break
        v = found
        while not src >> v & 1:
            u = par[v]
            if sat[v] >> u & 1:
                sat[v] ^= 1 << u
            else:
                sat[u] |= 1 << v
            v = u
        value += 1
    return value, sat


def residual_reach(rows, sat: list[int], start: int) -> int:
    seen = frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u] & ~sat[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def min_separating_cut(g: Graph, source: VertexLike, sink: VertexLike) -> Cut:
    """Minimum cut with ``source`` on one shore and ``sink`` on the other."""
    s = to_mask(g.n, source)
    t = to_mask(g.n, sink)
    if not s or not t or s & t:
        raise ValidationError("source and sink must be nonempty and disjoint")
    _, sat = max_flow(g.rows, g.n, s, t)
    return make_cut(g, residual_reach(g.rows, sat, s))


# -- global minimum cut -------------------------------------------------------


def _stoer_wagner(rows, n: int) -> tuple[int, int]:
    """Return (value, shore mask) of a global minimum cut of a connected graph."""
    w = [[0] * (n + 1) for _ in range(n + 1)]
    for u in range(1, n + 1):
        for v in bits(rows[u]):
            w[u][v] = 1
    group = [1 << v for v in range(n + 1)]
    active = list(range(1, n + 1))
    best, best_mask = None, 0
    while len(active) > 1:
        start = active[0]
        conn = {v: w[start][v] for v in active if v != start}
        prev, last = start, start
        while conn:
            last_candidate = max(conn, key=conn.__getitem__)
            phase_value = conn.pop(last_candidate)
            prev, last = last, last_candidate
            wl = w[last]
            for v in conn:
                conn[v] += wl[v]
        if best is None or phase_value < best:
            best, best_mask = phase_value, group[last]
        group[prev] |= group[last]
        wp, wl = w[prev], w[last]
        for v in active:
            wp[v] += wl[v]
            w[v][prev] = wp[v]
        wp[prev] = 0
        active.remove(last)
    return best, best_mask


def edge_connectivity(g: Graph) -> tuple[int, Cut]:
    """Edge-connectivity and a witness cut (shore contains vertex 1)."""
    if g.n < 2:
        raise ValidationError("edge-connectivity needs at least 2 vertices")
    comps = component_masks(g.n, g.rows)
    if len(comps) > 1:
        return 0, make_cut(g, comps[0])
    value, mask = _stoer_wagner(g.rows, g.n)
    cut = make_cut(g, canonical_shore(g.n, mask))
    assert cut.value == value
    return value, cut


def lambda_of(g: Graph) -> int:
    return edge_connectivity(g)[0] if g.n >= 2 else 0


# -- enumeration of all minimum cuts ------------------------------------------


class _Residual:
    """Closed-set enumeration on the residual graph of one pinned max flow."""

    def __init__(self, rows, n: int, src: int, t: int, sat: list[int]) -> None:
        self.n = n
        self.out = [rows[u] & ~sat[u] for u in range(n + 1)]
        self.inn = [0] * (n + 1)
        for u in range(1, n + 1):
            for v in bits(self.out[u]):
                self.inn[v] |= 1 << u
        self.src = src
        self.t = t
        self._fwd: dict[int, int] = {}
        self._bwd: dict[int, int] = {}

    def _close(self, adj, start: int) -> int:
        seen = frontier = start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def fwd(self, v: int) -> int:
        if v not in self._fwd:
            self._fwd[v] = self._close(self.out, 1 << v)
        return self._fwd[v]

    def bwd(self, v: int) -> int:
        if v not in self._bwd:
            self._bwd[v] = self._close(self.inn, 1 << v)
        return self._bwd[v]

    def closures(self, limit: int | None = None) -> list[int]:
        full = full_mask(self.n)
        base = self._close(self.out, self.src)
        excl = self.bwd(self.t)
        found = []
        stack = [(base, excl)]
        while stack:
            inc, exc = stack.pop()
            und = full & ~inc & ~exc
            if not und:
                found.append(inc)
                if limit is not None and len(found) >= limit:
                    break
                continue
            v = (und & -und).bit_length() - 1
            stack.append((inc, exc | self.bwd(v)))
            stack.append((inc | self.fwd(v), exc))
        return found


def _pinned_src(i: int) -> int:
    return ((1 << i) - 1) ^ 1  # vertices 1..i-1


def min_cut_masks(rows, n: int) -> tuple[int, list[int]]:
    """(lambda, all minimum-cut shores containing vertex 1) of a connected graph.

    Every cut is found exactly once: under pin ``i`` the shore holds
    1..i-1 and excludes i.
    """
    best = None
    pinned: list[tuple[int, list[int]]] = []
    for i in range(2, n + 1):
        src = _pinned_src(i)
        val, sat = max_flow(rows, n, src, 1 << i, best)
        if best is None or val < best:
            best, pinned = val, [(i, sat)]
        elif val == best:
            pinned.append((i, sat))
    shores = []
    for i, sat in pinned:
        shores.extend(_Residual(rows, n, _pinned_src(i), i, sat).closures())
    return best, shores


def beats_potential(rows, n: int, lam: int, count: int) -> bool:
    """Whether (lambda, -#min cuts) of ``rows`` is lexicographically above (lam, -count).

    Stops early: a pinned flow below ``lam`` or a running count reaching
    ``count`` settles the answer. ``rows`` must describe a connected graph
    when ``lam >= 1``.
    """
    total = 0
    for i in range(2, n + 1):
        src = _pinned_src(i)
        val, sat = max_flow(rows, n, src, 1 << i, lam)
        if val < lam:
            return False
        if val == lam:
            total += len(_Residual(rows, n, src, i, sat).closures(count - total))
            if total >= count:
                return False
    return True


def enumerate_min_cuts(g: Graph) -> list[Cut]:
    """All minimum edge cuts, one shore each (the one containing vertex 1)."""
    if g.n < 2:
        raise ValidationError("minimum cuts need at least 2 vertices")
    if not g.is_connected():
        raise DisconnectedError("graph is disconnected")
    lam, shores = min_cut_masks(g.rows, g.n)
    cuts = sorted((make_cut(g, s) for s in shores), key=lambda c: sorted(c.side))
    assert len(cuts) <= g.n * (g.n - 1) // 2
    assert all(c.value == lam for c in cuts)
    return cuts


def potential(g: Graph) -> tuple[int, int]:
    """``(lambda, number of unordered minimum cuts)``; disconnected graphs
    count the 2**(c-1) - 1 ways to split their components."""
    if g.n < 2:
        return 0, 0
    comps = component_masks(g.n, g.rows)
    if len(comps) > 1:
        return 0, 2 ** (len(comps) - 1) - 1
    lam, shores = min_cut_masks(g.rows, g.n)
    return lam, len(shores)


# -- weak sets ----------------------------------------------------------------


def _require_regime(g: Graph) -> tuple[int, int]:
    lam = lambda_of(g)
    delta = g.min_degree()
    if lam >= delta:
        raise NotApplicable(f"weak sets need lambda < delta; here lambda={lam}, delta={delta}")
    return lam, delta


def _proper_mask(g: Graph, a: VertexLike) -> int:
    mask = to_mask(g.n, a)
    if mask == 0 or mask == g.full_mask:
        raise ValidationError("set must be a nonempty proper subset of V")
    return mask


def weak_proper_subset(g: Graph, a: VertexLike, delta: int | None = None) -> frozenset[int] | None:
    """A proper subset ``S`` of ``a`` with e(S, V-S) < delta, or None.

    For every ordered pair (x, y) in ``a`` the minimum cut separating x from
    {y} plus everything outside ``a`` is computed; that covers every
    nonempty proper subset.
    """
    rows, n = g.rows, g.n
    cur = to_mask(n, a)
    delta = g.min_degree() if delta is None else delta
    outside = full_mask(n) & ~cur
    members = list(bits(cur))
    for x in members:
        for y in members:
            if x == y:
                continue
            val, sat = max_flow(rows, n, 1 << x, outside | 1 << y, delta - 1)
            if val < delta:
                return from_mask(residual_reach(rows, sat, 1 << x))
    return None


def classify(g: Graph, a: VertexLike) -> WeakClassification:
    lam, delta = _require_regime(g)
    mask = _proper_mask(g, a)
    value = mask_cut(g.rows, mask, g.full_mask & ~mask)
    if value >= delta:
        return WeakClassification(False, False, False)
    witness = weak_proper_subset(g, mask, delta)
    return WeakClassification(True, value == lam, witness is None, witness)


def find_critically_weak(g: Graph, a: VertexLike) -> frozenset[int]:
    """Descend from weak ``a`` through weak proper subsets to a critically weak set."""
    _, delta = _require_regime(g)
    mask = _proper_mask(g, a)
    if mask_cut(g.rows, mask, g.full_mask & ~mask) >= delta:
        raise ValidationError(f"set {sorted(from_mask(mask))} is not weak")
    cur = from_mask(mask)
    while (sub := weak_proper_subset(g, cur, delta)) is not None:
        cur = sub
    return cur


# -- weak-set checks ----------------------------------------------------------


@dataclass(frozen=True)
class SplitReport:
    case: str  # "proper" when S is a proper subset of A, "whole" when S == A
    delta: int
    inner_cut: int
    inner_bound: int
    equality: bool
    side_min: int | None
    side_bound: int | None
    holds: bool


@dataclass(frozen=True)
class InteriorReport:
    interior: frozenset[int]
    lonely: frozenset[int]  # interior vertices with no interior neighbour
    holds: bool


def check_split_bounds(g: Graph, a: VertexLike, s: VertexLike, x: VertexLike) -> SplitReport:
    """Evaluate the splitting bounds for a critically weak ``a``, ``s`` inside it
    and a set ``x`` that splits ``s``."""
    _, delta = _require_regime(g)
    am = _proper_mask(g, a)
    sm = to_mask(g.n, s)
    xm = to_mask(g.n, x)
    full = g.full_mask
    if not classify(g, am).is_critically_weak:
        raise ValidationError("A is not critically weak")
    if not sm or sm & ~am:
        raise ValidationError("S must be a nonempty subset of A")
    if mask_cut(g.rows, sm, full & ~sm) > delta:
        raise ValidationError("S must satisfy e(S, V-S) <= delta")
    if not (sm & xm) or not (sm & ~xm):
        raise ValidationError("X must split S")
    xs, xbs = sm & xm, sm & ~xm
    inner = mask_cut(g.rows, xs, xbs)
    if sm != am:
        bound = ceil(delta / 2)
        return SplitReport("proper", delta, inner, bound, inner == bound, None, None, inner >= bound)
    bound = ceil((delta + 1) / 2)
    outside = full & ~am
    side_min = side_bound = None
    holds = inner >= bound
    if inner == bound:
        side_min = min(mask_cut(g.rows, xs, outside), mask_cut(g.rows, xbs, outside))
        side_bound = floor((delta - 1) / 2)
        holds = holds and side_min >= side_bound
    return SplitReport("whole", delta, inner, bound, inner == bound, side_min, side_bound, holds)


def check_interior(g: Graph, a: VertexLike) -> InteriorReport:
    """Interior of a weak set is nonempty and has no isolated interior vertex."""
    _, delta = _require_regime(g)
    am = _proper_mask(g, a)
    if mask_cut(g.rows, am, g.full_mask & ~am) >= delta:
        raise ValidationError("A is not weak")
    interior = to_mask(g.n, from_mask(am) - boundary(g, am))
    lonely = frozenset(v for v in bits(interior) if not g.rows[v] & interior)
    return InteriorReport(from_mask(interior), lonely, bool(interior) and not lonely)


__all__ = [
    "Cut",
    "WeakClassification",
    "SplitReport",
    "InteriorReport",
    "beats_potential",
    "canonical_shore",
    "check_split_bounds",
    "check_interior",
    "classify",
    "cut_size",
    "edge_connectivity",
    "enumerate_min_cuts",
    "find_critically_weak",
    "lambda_of",
    "make_cut",
    "max_flow",
    "min_cut_masks",
    "min_separating_cut",
    "potential",
    "weak_proper_subset",
]
