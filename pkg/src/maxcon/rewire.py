"""Degree-preserving rewiring towards a maximally edge-connected realization.

A problem is a graph ``g0`` with two edge-disjoint spanning subgraphs: a
protected part ``f`` and a sacrificial part ``z0``. Only edges of the
sacrificial part ever move, and they move in pairs through edge-exchanges.
The target concerns ``h = g - E(f)``:

* full mode: ``lambda(h) == delta(h)``;
* relaxed mode (``z0 = g0 - E(f)``): ``lambda(h) == delta(h)`` for even
  ``delta(h)`` and ``lambda(h) >= delta(h) - 1`` for odd.

The engine climbs the potential ``(lambda(h), -#minimum cuts of h)``. Each
step tries exchanges between two critically weak sets lying on opposite
sides of a minimum cut, interior vertices first, and falls back to every
legal exchange of two sacrificial edges.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field, replace
from enum import Enum

from . import cuts
from .errors import HypothesisViolation, NoImprovingMove, TheoremContradiction
from .graph import (
    ExchangeMove,
    Graph,
    bits,
    boundary,
    bridges,
    component_masks,
    edge_exchange,
    exchange_rows,
    subtract_edges,
    to_mask,
)

log = logging.getLogger(__name__)


class Mode(str, Enum):
    FULL = "full"
    RELAXED = "relaxed"


@dataclass(frozen=True)
class RewireProblem:
    g0: Graph
    f: Graph | None = None
    z0: Graph | None = None
    mode: Mode = Mode.FULL

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.f is None:
            object.__setattr__(self, "f", Graph.empty(self.g0.n))
        if self.z0 is None and self.f.n == self.g0.n:
            object.__setattr__(self, "z0", subtract_edges(self.g0, self.f))

    @property
    def protected(self) -> Graph:
        """Edges that must survive: ``g0 - E(z0)``."""
        return subtract_edges(self.g0, self.z0)


@dataclass(frozen=True)
class RewireCertificate:
    final_lambda: int
    final_delta: int
    moves_applied: int
    preserved_edges_ok: bool
    mode_target_met: bool
    degrees_ok: bool = True
    trace: tuple[ExchangeMove, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "final_lambda": self.final_lambda,
            "final_delta": self.final_delta,
            "moves_applied": self.moves_applied,
            "preserved_edges_ok": self.preserved_edges_ok,
            "degrees_ok": self.degrees_ok,
            "mode_target_met": self.mode_target_met,
        }


def target_met(lam: int, delta: int, mode: Mode) -> bool:
    if mode is Mode.RELAXED and delta % 2:
        return lam >= delta - 1
    return lam >= delta


@dataclass
class RewireState:
    """Current realization plus the bookkeeping the search needs."""

    g: Graph
    z: Graph
    f: Graph
    mode: Mode
    potential: tuple[int, int]
    trace: list[ExchangeMove] = field(default_factory=list)

    @property
    def h(self) -> Graph:
        return subtract_edges(self.g, self.f)

    @property
    def delta(self) -> int:
        return self.h.min_degree()

    @property
    def done(self) -> bool:
        return target_met(self.potential[0], self.delta, self.mode)

    def apply(self, move: ExchangeMove) -> RewireState:
        g = edge_exchange(self.g, move)
        z = edge_exchange(self.z, move)
        pot = cuts.potential(subtract_edges(g, self.f))
        if not _better(pot, self.potential):
            raise TheoremContradiction(f"move {move.as_list()} does not raise the potential")
        return replace(self, g=g, z=z, potential=pot, trace=self.trace + [move])


def _better(new: tuple[int, int], old: tuple[int, int]) -> bool:
    return new[0] > old[0] or (new[0] == old[0] and new[1] < old[1])


def validate(p: RewireProblem) -> None:
    """Raise :class:`HypothesisViolation` naming the first failed hypothesis."""
    g0, f, z0 = p.g0, p.f, p.z0
    n = g0.n
    if f.n != n or z0.n != n:
        raise HypothesisViolation("order", "F and Z0 must live on the vertex set of G0")
    if n < 2:
        raise HypothesisViolation("order", "need at least two vertices")
    for name, sub in (("F", f), ("Z0", z0)):
        if any(s & ~r for r, s in zip(g0.rows, sub.rows)):
            raise HypothesisViolation("subgraph", f"{name} is not a subgraph of G0")
    if any(a & b for a, b in zip(f.rows, z0.rows)):
        raise HypothesisViolation("disjoint", "F and Z0 share an edge")
    if p.mode is Mode.FULL:
        if not z0.min_degree() > f.max_degree():
            raise HypothesisViolation(
                "min-degree",
                f"need delta(Z0) > Delta(F); got {z0.min_degree()} <= {f.max_degree()}",
            )
    else:
        if z0 != subtract_edges(g0, f):
            raise HypothesisViolation("relaxed-z0", "relaxed mode needs Z0 = G0 - E(F)")
        if not z0.min_degree() >= f.max_degree():
            raise HypothesisViolation(
                "min-degree",
                f"need delta(G0 - E(F)) >= Delta(F); got {z0.min_degree()} < {f.max_degree()}",
            )
    if g0.min_degree() == 1 and z0.edge_count < n - 1:
        raise HypothesisViolation(
            "tree-size", f"|E(Z0)| >= n-1 required when delta(G0) = 1; got {z0.edge_count} < {n - 1}"
        )


def initial_state(p: RewireProblem) -> RewireState:
    h = subtract_edges(p.g0, p.f)
    return RewireState(p.g0, p.z0, p.f, p.mode, cuts.potential(h))


def _legal(state: RewireState, m: ExchangeMove) -> bool:
    a, ap, b, bp = m.a, m.a_prime, m.b, m.b_prime
    if len({a, ap, b, bp}) != 4:
        return False
    zr, gr = state.z.rows, state.g.rows
    return bool(zr[a] >> ap & 1 and zr[b] >> bp & 1) and not (gr[a] >> bp & 1 or gr[ap] >> b & 1)


def connect_phase(state: RewireState) -> RewireState:
    """Merge components of ``h`` one exchange at a time.

    Each exchange takes a sacrificial edge lying on a cycle of one component
    and a sacrificial edge of another component, so the two components fuse.
    """
    while True:
        comps = component_masks(state.g.n, state.h.rows)
        if len(comps) == 1:
            return state
        move = _connecting_move(state, comps)
        if move is None:
            if state.mode is Mode.FULL:
                raise TheoremContradiction("disconnected state without a usable cycle edge")
            return state
        state = state.apply(move)


def _connecting_move(state: RewireState, comps: list[int]) -> ExchangeMove | None:
    n = state.g.n
    comp_of = [0] * (n + 1)
    for i, c in enumerate(comps):
        for v in bits(c):
            comp_of[v] = i
    h_bridges = bridges(state.h)
    z_edges = state.z.edges()
    fr = state.f.rows
    cyclic = [e for e in z_edges if e not in h_bridges]
    for u, v in cyclic:
        for a, ap in ((u, v), (v, u)):
            for x, y in z_edges:
                if comp_of[x] == comp_of[a]:
                    continue
                for b, bp in ((x, y), (y, x)):
                    if fr[ap] >> b & 1 or fr[bp] >> a & 1:
                        continue
                    m = ExchangeMove(a, ap, b, bp)
                    if _legal(state, m):
                        return m
    return None


def _shores(h: Graph) -> list[int]:
    comps = component_masks(h.n, h.rows)
    if len(comps) > 1:
        return comps
    return cuts.min_cut_masks(h.rows, h.n)[1]


def _critical_pair(h: Graph, shore: int) -> tuple[int, int]:
    a = to_mask(h.n, cuts.find_critically_weak(h, shore))
    b = to_mask(h.n, cuts.find_critically_weak(h, h.full_mask & ~shore))
    if len(boundary(h, a)) < len(boundary(h, b)):
        a, b = b, a
    return a, b


def _pair_moves(state: RewireState, am: int, bm: int) -> Iterator[ExchangeMove]:
    h = state.h
    zr, fr = state.z.rows, state.f.rows
    int_a = am & ~to_mask(h.n, boundary(h, am))
    int_b = bm & ~to_mask(h.n, boundary(h, bm))
    pairs = [(a, b) for a in bits(int_a) for b in bits(int_b)]
    pairs.sort(key=lambda ab: not fr[ab[0]] >> ab[1] & 1)
    for a, b in pairs:
        for ap in bits(zr[a] & ~fr[b]):
            for bp in bits(zr[b] & ~fr[a]):
                yield ExchangeMove(a, ap, b, bp)
    za = [(u, v) for u in bits(am) for v in bits(zr[u] & am) if u < v]
    zb = [(u, v) for u in bits(bm) for v in bits(zr[u] & bm) if u < v]
    for u, v in za:
        for x, y in zb:
            yield ExchangeMove(u, v, x, y)
            yield ExchangeMove(u, v, y, x)


def candidate_exchanges(state: RewireState) -> Iterator[ExchangeMove]:
    """Legal exchanges, guided ones first, each exchange at most once."""
    seen = set()
    for m in _raw_candidates(state):
        k = m.key()
        if k in seen or not _legal(state, m):
            continue
        seen.add(k)
        yield m


def _raw_candidates(state: RewireState) -> Iterator[ExchangeMove]:
    h = state.h
    for shore in _shores(h):
        a, b = _critical_pair(h, shore)
        yield from _pair_moves(state, a, b)
    z_edges = state.z.edges()
    for i, (u, v) in enumerate(z_edges):
        for x, y in z_edges[i + 1:]:
            yield ExchangeMove(u, v, x, y)
            yield ExchangeMove(u, v, y, x)


def improve_step(state: RewireState) -> RewireState:
    """Apply the first candidate exchange that strictly raises the potential."""
    lam, count = state.potential
    h_rows = state.h.rows
    n = state.g.n
    tried = 0
    for move in candidate_exchanges(state):
        tried += 1
        rows = exchange_rows(h_rows, move)
        if lam == 0:
            better = _better(cuts.potential(Graph.from_rows(n, rows)), (lam, count))
        else:
            better = cuts.beats_potential(rows, n, lam, count)
        if better:
            log.debug("accepted %s after %d candidates", move.as_list(), tried)
            return state.apply(move)
    raise NoImprovingMove(f"no exchange improves potential {state.potential} ({tried} tried)")


def audit(p: RewireProblem, g: Graph, trace: tuple[ExchangeMove, ...] = ()) -> RewireCertificate:
    """Recompute every certificate field from ``g`` alone."""
    h = subtract_edges(g, p.f)
    lam = cuts.lambda_of(h)
    delta = h.min_degree()
    preserved = all(r & ~s == 0 for r, s in zip(p.protected.rows, g.rows))
    return RewireCertificate(
        final_lambda=lam,
        final_delta=delta,
        moves_applied=len(trace),
        preserved_edges_ok=preserved,
        mode_target_met=target_met(lam, delta, p.mode),
        degrees_ok=g.degrees() == p.g0.degrees(),
        trace=tuple(trace),
    )


def run(p: RewireProblem) -> RewireState:
    """Validate, connect, then climb until the mode target holds."""
    validate(p)
    state = initial_state(p)
    if not state.done:
        state = connect_phase(state)
    n = p.g0.n
    cap = n * n * max(1, state.delta)
    while not state.done:
        if len(state.trace) >= cap:
            raise TheoremContradiction(f"iteration cap {cap} exceeded")
        try:
            state = improve_step(state)
        except NoImprovingMove as exc:
            raise TheoremContradiction(str(exc)) from exc
    return state


def rewire(p: RewireProblem) -> tuple[Graph, RewireCertificate]:
    state = run(p)
    cert = audit(p, state.g, tuple(state.trace))
    if not (cert.mode_target_met and cert.preserved_edges_ok and cert.degrees_ok):
        raise TheoremContradiction(f"audit failed: {cert}")
    return state.g, cert
