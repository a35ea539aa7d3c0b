"""Factors of realizations: Kundu-style factor realization, the maximally
edge-connected variant, perfect matchings, and peeling edge-disjoint
1-factors out of a k-factor."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import cuts
from .degseq import DegreeSequence, as_sequence, complement_reverse, graphic_values, havel_hakimi, is_graphic, subtract_k
from .errors import NoPerfectMatching, NotGraphic, PreconditionFailed, TheoremContradiction, ValidationError
from .graph import Edge, Graph, bits, subtract_edges, union_edges
from .matching import is_perfect_matching, maximum_matching
from .rewire import Mode, RewireCertificate, RewireProblem, rewire, target_met

# Exhaustive fallback for the factor search stays below this order.
KUNDU_EXHAUSTIVE_N = 10
# Restart rounds of the exchange search, per vertex.
KUNDU_ROUNDS_PER_VERTEX = 8


@dataclass(frozen=True)
class FactorRequest:
    """Realize ``pi`` with a spanning subgraph of degrees ``kappa``.

    ``kappa`` is indexed like ``pi.degrees`` (caller vertex order) and each
    entry must be ``k`` or ``k + 1``.
    """

    pi: DegreeSequence
    kappa: tuple[int, ...]
    k: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "pi", as_sequence(self.pi))
        object.__setattr__(self, "kappa", tuple(self.kappa))
        if self.k is None:
            object.__setattr__(self, "k", min(self.kappa, default=0))

    @property
    def rest(self) -> tuple[int, ...]:
        return tuple(d - c for d, c in zip(self.pi.degrees, self.kappa))

    def validate(self) -> None:
        if len(self.kappa) != self.pi.n:
            raise ValidationError(f"kappa has {len(self.kappa)} entries for {self.pi.n} vertices")
        if self.k < 0 or any(c not in (self.k, self.k + 1) for c in self.kappa):
            raise ValidationError(f"every kappa entry must be {self.k} or {self.k + 1}")
        if not is_graphic(self.pi):
            raise NotGraphic(f"({self.pi}) is not graphic")
        if any(r < 0 for r in self.rest) or not graphic_values(self.rest):
            raise NotGraphic(f"residual sequence {list(self.rest)} is not graphic")


@dataclass(frozen=True)
class FactorDecomposition:
    g: Graph
    factor: Graph
    one_factors: tuple[tuple[Edge, ...], ...] = ()
    residual: Graph | None = None
    certificates: tuple[RewireCertificate, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.residual is None:
            object.__setattr__(self, "residual", self.factor)

    def to_dict(self) -> dict:
        return {
            "n": self.g.n,
            "realization": [list(e) for e in self.g.edges()],
            "factor": [list(e) for e in self.factor.edges()],
            "one_factors": [[list(e) for e in m] for m in self.one_factors],
            "residual": [list(e) for e in self.residual.edges()],
        }


@dataclass
class DecompositionReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# -- perfect matchings --------------------------------------------------------


def perfect_matching(g: Graph) -> list[Edge]:
    if g.n % 2:
        raise NoPerfectMatching(f"odd order {g.n}")
    m = maximum_matching(g)
    if 2 * len(m) < g.n:
        raise NoPerfectMatching(f"maximum matching covers {2 * len(m)} of {g.n} vertices")
    return m


# -- Kundu factor realization -------------------------------------------------


def _swap_gain(mine: list[int], other: list[int], u: int, v: int, x: int, y: int) -> int | None:
    """Overlap change when ``mine`` trades uv, xy for ux, vy; None if illegal."""
    if len({u, v, x, y}) < 4 or mine[u] >> x & 1 or mine[v] >> y & 1:
        return None
    return (-(other[u] >> v & 1) - (other[x] >> y & 1)
            + (other[u] >> x & 1) + (other[v] >> y & 1))


def _apply_swap(rows: list[int], u: int, v: int, x: int, y: int) -> None:
    rows[u] ^= (1 << v) | (1 << x)
    rows[v] ^= (1 << u) | (1 << y)
    rows[x] ^= (1 << y) | (1 << u)
    rows[y] ^= (1 << x) | (1 << v)


def _find_swap(kr: list[int], rr: list[int], n: int, shared: list[Edge]):
    """First overlap-reducing exchange, plus every overlap-neutral one seen on the way."""
    sideways = []
    for u, v in shared:
        for mine, other in ((kr, rr), (rr, kr)):
            for a, b in ((u, v), (v, u)):
                for x in range(1, n + 1):
                    for y in bits(mine[x]):
                        gain = _swap_gain(mine, other, a, b, x, y)
                        if gain is None:
                            continue
                        if gain < 0:
                            return (mine, a, b, x, y), sideways
                        if gain == 0:
                            sideways.append((mine, a, b, x, y))
    return None, sideways


def _reduce_overlap(kr: list[int], rr: list[int], n: int, rng: random.Random, budget: int) -> bool:
    """Exchange edges inside the factor or the residual until they share none.

    Strictly improving exchanges are taken greedily; when none exists a random
    non-worsening exchange is made, up to ``budget`` of those.
    """
    while True:
        shared = [(u, v) for u in range(1, n + 1) for v in bits(kr[u] & rr[u]) if u < v]
        if not shared:
            return True
        swap, sideways = _find_swap(kr, rr, n, shared)
        if swap is None:
            if not sideways or budget <= 0:
                return False
            budget -= 1
            swap = rng.choice(sideways)
        mine, a, b, x, y = swap
        _apply_swap(mine, a, b, x, y)


def _f_factor(host: Graph, demand: Sequence[int]) -> Graph | None:
    """A spanning subgraph of ``host`` with degree ``demand[v-1]`` at v, or None.

    Tutte's gadget: every host edge becomes two adjacent ports, and each
    vertex gets ``deg - demand`` core nodes joined to all of its ports. Port
    pairs matched to each other are the factor edges.
    """
    n = host.n
    if any(demand[v - 1] > host.degree(v) or demand[v - 1] < 0 for v in host.vertices):
        return None
    edges = host.edges()
    port: dict[tuple[int, int], int] = {}
    node = 0
    gadget_edges = []
    for u, v in edges:
        port[(u, v)], port[(v, u)] = node + 1, node + 2
        gadget_edges.append((node + 1, node + 2))
        node += 2
    for v in host.vertices:
        ports = [port[(v, w)] for w in bits(host.rows[v])]
        for _ in range(host.degree(v) - demand[v - 1]):
            node += 1
            gadget_edges.extend((p, node) for p in ports)
    gadget = Graph(node, gadget_edges)
    m = maximum_matching(gadget)
    if 2 * len(m) < node:
        return None
    matched = set(m)
    return Graph(n, [(u, v) for u, v in edges if (port[(u, v)], port[(v, u)]) in matched
                     or (port[(v, u)], port[(u, v)]) in matched])


def _random_walk(rows: list[int], n: int, steps: int, rng: random.Random) -> None:
    for _ in range(steps):
        edges = [(u, v) for u in range(1, n + 1) for v in bits(rows[u]) if u < v]
        if len(edges) < 2:
            return
        (u, v), (x, y) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            x, y = y, x
        if len({u, v, x, y}) == 4 and not rows[u] >> x & 1 and not rows[v] >> y & 1:
            _apply_swap(rows, u, v, x, y)


def kundu_realize(req: FactorRequest, seed: int = 0) -> tuple[Graph, Graph]:
    """Return ``(g, factor)``: ``g`` realizes ``req.pi`` and ``factor`` is a
    spanning subgraph of ``g`` with degrees ``req.kappa``.

    Each round starts from a realization of the factor and one of the residual
    (Havel-Hakimi first, randomly walked copies afterwards) and removes their
    overlap by exchanges; if that stalls, the factor is searched for exactly
    in the complement of the current residual.
    """
    req.validate()
    n = req.pi.n
    rng = random.Random(seed)
    base_k, base_r = havel_hakimi(req.kappa).rows, havel_hakimi(req.rest).rows
    for attempt in range(KUNDU_ROUNDS_PER_VERTEX * max(n, 1)):
        kr, rr = list(base_k), list(base_r)
        if attempt:
            _random_walk(kr, n, 4 * n, rng)
            _random_walk(rr, n, 4 * n, rng)
        if _reduce_overlap(kr, rr, n, rng, budget=4 * n * n):
            factor = Graph.from_rows(n, kr)
            return union_edges(factor, Graph.from_rows(n, rr)), factor
        rest = Graph.from_rows(n, rr)
        found = _f_factor(rest.complement(), req.kappa)
        if found is not None:
            return union_edges(found, rest), found
    if n <= KUNDU_EXHAUSTIVE_N:
        from .oracle import enumerate_realizations

        for rest in enumerate_realizations(DegreeSequence.from_unsorted(req.rest)):
            found = _f_factor(rest.complement(), req.kappa)
            if found is not None:
                return union_edges(found, rest), found
    raise TheoremContradiction(f"no realization of ({req.pi}) with factor {list(req.kappa)} found")


def maxcon_with_factor(req: FactorRequest, seed: int = 0) -> tuple[Graph, Graph, RewireCertificate]:
    """Maximally edge-connected realization of ``req.pi`` containing a ``req.kappa``-factor.

    The factor found by :func:`kundu_realize` is handed to the rewiring engine
    as the sacrificial subgraph; the rest of the realization is kept intact.
    """
    req.validate()
    if req.k < 1:
        raise PreconditionFailed(f"k must be at least 1, got {req.k}")
    if min(req.pi.terms, default=0) < 2:
        raise PreconditionFailed("every degree must be at least 2")
    g, factor = kundu_realize(req, seed)
    kept = subtract_edges(g, factor)
    g2, cert = rewire(RewireProblem(g, None, factor, Mode.FULL))
    return g2, subtract_edges(g2, kept), cert


# -- peeling 1-factors --------------------------------------------------------


def _peel_checks(pi: DegreeSequence, k: int, r: int) -> None:
    if pi.n % 2:
        raise PreconditionFailed(f"n must be even, got {pi.n}")
    if r < 0:
        raise PreconditionFailed(f"r must be non-negative, got {r}")
    if k < 1:
        raise PreconditionFailed(f"k must be at least 1, got {k}")
    if not is_graphic(pi):
        raise NotGraphic(f"({pi}) is not graphic")
    if pi.terms[-1] < k or not is_graphic(subtract_k(pi, k)):
        raise PreconditionFailed(f"D_k(pi) with k={k} is not graphic")


def peel_one_factors(pi: DegreeSequence | Sequence[int], k: int, r: int, seed: int = 0) -> FactorDecomposition:
    """A realization of ``pi`` whose k-factor holds ``r + 1`` edge-disjoint
    perfect matchings. Requires ``2k >= d_1 + 2r``.

    Round i keeps ``protected`` (the non-factor edges plus the i matchings
    peeled so far) fixed, makes the remaining (k-i)-factor
    (k-i-1)-edge-connected with a relaxed rewire, and peels one perfect
    matching out of it.
    """
    pi = as_sequence(pi)
    _peel_checks(pi, k, r)
    if 2 * k < pi.terms[0] + 2 * r:
        raise PreconditionFailed(f"need k >= d_1/2 + r; got k={k}, d_1={pi.terms[0]}, r={r}")
    n = pi.n
    g, h = kundu_realize(FactorRequest(pi, (k,) * n, k), seed)
    outside = subtract_edges(g, h)
    protected = outside
    matchings: list[tuple[Edge, ...]] = []
    certs = []
    for i in range(r + 1):
        _check_peel_invariant(h, protected, matchings, k, r, i)
        if not target_met(cuts.lambda_of(h), h.min_degree(), Mode.RELAXED):
            g, cert = rewire(RewireProblem(g, protected, mode=Mode.RELAXED))
            certs.append(cert)
            h = subtract_edges(g, protected)
        try:
            m = perfect_matching(h)
        except NoPerfectMatching as exc:
            raise TheoremContradiction(
                f"{k - i}-regular {k - i - 1}-edge-connected factor has no perfect matching"
            ) from exc
        mg = Graph(n, m)
        matchings.append(tuple(m))
        protected = union_edges(protected, mg)
        h = subtract_edges(h, mg)
    return FactorDecomposition(g, subtract_edges(g, outside), tuple(matchings), h, tuple(certs))


def _check_peel_invariant(h: Graph, protected: Graph, matchings, k: int, r: int, i: int) -> None:
    if set(h.degrees()) != {k - i}:
        raise TheoremContradiction(f"round {i}: remaining factor is not {k - i}-regular")
    if len(matchings) != i:
        raise TheoremContradiction(f"round {i}: holds {len(matchings)} matchings")
    if h.min_degree() < protected.max_degree() + 2 * (r - i):
        raise TheoremContradiction(
            f"round {i}: delta(H)={h.min_degree()} < Delta(F)+2(r-i)={protected.max_degree() + 2 * (r - i)}"
        )


def peel_complement_case(pi: DegreeSequence | Sequence[int], k: int, r: int, seed: int = 0) -> FactorDecomposition:
    """Same output as :func:`peel_one_factors`, under ``k >= n - 1 - d_n + 2r``.

    The direct case runs on the reversed complements; the complement of the
    non-factor part of that realization contains the peeled k-factor and
    realizes ``pi`` after reversing the labels.
    """
    pi = as_sequence(pi)
    _peel_checks(pi, k, r)
    n = pi.n
    if k < n - 1 - pi.terms[-1] + 2 * r:
        raise PreconditionFailed(f"need k >= n-1-d_n+2r; got k={k}, n={n}, d_n={pi.terms[-1]}, r={r}")
    star = complement_reverse(subtract_k(pi, k))
    dec = peel_one_factors(star, k, r, seed)
    outside_star = subtract_edges(dec.g, dec.factor)
    g_star = outside_star.complement()
    # sorted position j of the star sequence is position n+1-j of pi
    mapping = [0] + [pi.order[n - j] for j in range(1, n + 1)]

    def move(x: Graph) -> Graph:
        return x.relabel(mapping)

    ones = tuple(tuple(sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in m)) for m in dec.one_factors)
    return FactorDecomposition(move(g_star), move(dec.factor), ones, move(dec.residual), dec.certificates)


def verify_decomposition(d: FactorDecomposition, pi: DegreeSequence | Sequence[int], kappa) -> DecompositionReport:
    """Re-audit every structural invariant of ``d`` from scratch."""
    pi = as_sequence(pi)
    rep = DecompositionReport()
    g, factor = d.g, d.factor
    kap = (kappa,) * pi.n if isinstance(kappa, int) else tuple(kappa)
    if g.n != pi.n:
        rep.violations.append(f"order: realization has {g.n} vertices, sequence has {pi.n}")
        return rep
    if g.degrees() != pi.degrees:
        rep.violations.append(f"realization: degrees {g.degrees()} != {pi.degrees}")
    if any(f & ~r for f, r in zip(factor.rows, g.rows)):
        rep.violations.append("factor: not a subgraph of the realization")
    if factor.degrees() != kap:
        rep.violations.append(f"factor: degrees {factor.degrees()} != {kap}")
    seen: dict[Edge, int] = {}
    for idx, m in enumerate(d.one_factors):
        if not is_perfect_matching(factor, list(m)):
            rep.violations.append(f"coverage: one-factor {idx} is not a perfect matching of the factor")
        for e in m:
            e = (min(e), max(e))
            if e in seen:
                rep.violations.append(f"disjointness: edge {e} in one-factors {seen[e]} and {idx}")
            seen[e] = idx
    peeled = set(seen)
    residual = d.residual.edge_set()
    if peeled & residual:
        rep.violations.append("partition: residual shares edges with the one-factors")
    if peeled | residual != factor.edge_set():
        rep.violations.append("partition: residual and one-factors do not make up the factor")
    return rep
