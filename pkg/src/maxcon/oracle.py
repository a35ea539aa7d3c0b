"""Brute-force ground truth at small n and batch theorem checkers.

Everything here trades speed for independence: cuts are found by scanning
every shore, matchings by exhaustive recursion, realizations by walking
the adjacency bit vector. The checkers run the library pipelines over an
instance space and audit the outputs against these oracles.
"""

from __future__ import annotations

import json
import os
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import cuts
from .degseq import DegreeSequence, as_sequence, edmonds_feasible, graphic_values, is_graphic, realize, subtract_k
from .errors import MaxconError, NoPerfectMatching, ScaleError, ValidationError
from .factors import (
    FactorDecomposition,
    FactorRequest,
    maxcon_with_factor,
    peel_complement_case,
    peel_one_factors,
    perfect_matching,
    verify_decomposition,
)
from .formats import to_graph6
from .graph import Graph, bits, exchange_rows, ExchangeMove, full_mask, mask_cut, subtract_edges
from .rewire import Mode, RewireProblem, rewire


@dataclass(frozen=True)
class Guards:
    enum_n: int = 10  # realization enumeration, disjoint-factor explorer
    cut_n: int = 12  # shore scans
    match_n: int = 10  # exhaustive matching


def guards() -> Guards:
    """Default guards; ``MAXCON_GUARD_N`` overrides the enumeration guard."""
    env = os.environ.get("MAXCON_GUARD_N")
    return Guards(enum_n=int(env)) if env else Guards()


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ScaleError(f"{what} is limited to n <= {limit}; got n = {n}")


# -- realizations -------------------------------------------------------------


class RealizationFamily:
    """All labeled realizations of ``pi`` (optionally containing ``with_subgraph``).

    Iteration walks the upper-triangular adjacency vector row by row; a
    branch is cut as soon as the remaining degrees stop being graphic.
    """

    def __init__(self, pi: DegreeSequence, with_subgraph: Graph | None = None) -> None:
        self.pi = pi
        self.with_subgraph = with_subgraph

    def __iter__(self) -> Iterator[Graph]:
        degs = list(self.pi.degrees)
        n = len(degs)
        forced = self.with_subgraph.rows if self.with_subgraph is not None else (0,) * (n + 1)
        if any(forced[v].bit_count() > degs[v - 1] for v in range(1, n + 1)):
            return
        rows = [0] * (n + 1)
        rem = [0] + degs

        def rec(i: int) -> Iterator[Graph]:
            if i > n:
                yield Graph.from_rows(n, rows)
                return
            later = [j for j in range(i + 1, n + 1)]
            must = [j for j in later if forced[i] >> j & 1]
            optional = [j for j in later if not forced[i] >> j & 1 and rem[j] > 0]
            need = rem[i] - len(must)
            if need < 0 or need > len(optional) or any(rem[j] == 0 for j in must):
                return
            for extra in combinations(reversed(optional), need):
                chosen = must + list(extra)
                for j in chosen:
                    rem[j] -= 1
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                saved, rem[i] = rem[i], 0
                if graphic_values(rem[i + 1:]):
                    yield from rec(i + 1)
                rem[i] = saved
                for j in chosen:
                    rem[j] += 1
                    rows[i] &= ~(1 << j)
                    rows[j] &= ~(1 << i)

        if graphic_values(degs):
            yield from rec(1)


def enumerate_realizations(pi, with_subgraph: Graph | None = None) -> RealizationFamily:
    pi = as_sequence(pi)
    _guard(pi.n, guards().enum_n, "realization enumeration")
    return RealizationFamily(pi, with_subgraph)


def graphic_sequences(n: int, min_term: int = 0) -> Iterator[tuple[int, ...]]:
    """All non-increasing graphic sequences of length ``n`` with terms >= ``min_term``."""

    def rec(prefix: list[int], hi: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            if is_graphic(prefix):
                yield tuple(prefix)
            return
        for d in range(hi, min_term - 1, -1):
            prefix.append(d)
            yield from rec(prefix, d)
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from rec([], n - 1)


# -- brute-force cuts and matchings -------------------------------------------


def shore_values(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Cut value of every shore containing vertex 1 (the full set excluded)."""
    n = g.n
    _guard(n, guards().cut_n, "brute-force cuts")
    if n < 2:
        raise ValidationError("cuts need at least 2 vertices")
    count = (1 << (n - 1)) - 1
    shores = (np.arange(count, dtype=np.int64) << 2) | 2
    full = full_mask(n)
    values = np.zeros(count, dtype=np.int64)
    for v in range(1, n + 1):
        inside = (shores >> v) & 1
        outside_nbrs = np.bitwise_count(np.int64(g.rows[v]) & ~shores & full)
        values += inside * outside_nbrs
    return shores, values


def brute_min_cut(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """(lambda, every minimum shore containing vertex 1)."""
    shores, values = shore_values(g)
    lam = int(values.min())
    return lam, [frozenset(bits(int(s))) for s in shores[values == lam]]


def brute_weak_sets(g: Graph) -> tuple[int, int, list[int]]:
    """(lambda, delta, masks of all weak sets, both shores of each cut)."""
    shores, values = shore_values(g)
    delta = g.min_degree()
    full = full_mask(g.n)
    weak = [int(s) for s in shores[values < delta]]
    return int(values.min()), delta, weak + [full & ~s for s in weak]


def brute_matching(g: Graph) -> int:
    """Maximum matching size by exhaustive recursion over vertex subsets."""
    _guard(g.n, guards().match_n, "brute-force matching")
    rows = g.rows

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = best(rest)
        for u in bits(rows[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best(g.full_mask)


def perfect_matchings(g: Graph, avoid: int = 0) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every perfect matching of ``g`` (exhaustive)."""
    rows = g.rows

    def rec(mask: int, acc: list) -> Iterator[tuple[tuple[int, int], ...]]:
        if not mask:
            yield tuple(acc)
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        for u in bits(rows[v] & rest):
            acc.append((v, u))
            yield from rec(rest & ~(1 << u), acc)
            acc.pop()

    if g.n % 2 == 0:
        yield from rec(g.full_mask, [])


def disjoint_perfect_matchings(g: Graph, k: int) -> list[tuple[tuple[int, int], ...]] | None:
    """``k`` pairwise edge-disjoint perfect matchings of ``g`` by backtracking, or None.

    Matchings are generated in increasing order of vertex 1's partner, which
    removes the k! reorderings of one solution.
    """
    if k == 0:
        return []
    if g.n % 2 or g.min_degree() < k:
        return None

    def rec(h: Graph, left: int, floor: int) -> list | None:
        if left == 0:
            return []
        for m in perfect_matchings(h):
            if m[0][1] <= floor:
                continue
            rest = h.with_edges(remove=m)
            tail = rec(rest, left - 1, m[0][1])
            if tail is not None:
                return [m] + tail
        return None

    return rec(g, k, 0)


# -- reports ------------------------------------------------------------------


@dataclass
class CheckReport:
    theorem_id: str
    seed: int = 0
    instances_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    records: list[dict] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, instance: dict, ok: bool, detail: str = "") -> None:
        entry = {"theorem": self.theorem_id, "instance_id": self.instances_checked, "ok": ok, "instance": instance}
        if detail:
            entry["detail"] = detail
        self.instances_checked += 1
        self.records.append(entry)
        if not ok:
            self.failures.append(entry)

    def summary(self) -> dict:
        return {
            "schema": 1,
            "theorem": self.theorem_id,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"


# -- random instance generation -----------------------------------------------


def random_graphic_sequence(n: int, rng: random.Random, low: int = 1, high: int | None = None) -> tuple[int, ...]:
    high = n - 1 if high is None else min(high, n - 1)
    if low == high and n * low % 2:
        raise ValidationError(f"no graphic sequence of length {n} with every term {low}")
    while True:
        d = sorted((rng.randint(low, high) for _ in range(n)), reverse=True)
        if sum(d) % 2:
            # fix parity by nudging one term inside [low, high]
            i = next((i for i, x in enumerate(d) if x < high), None)
            if i is None:
                d[-1] -= 1
            else:
                d[i] += 1
            d.sort(reverse=True)
        if is_graphic(d):
            return tuple(d)


def random_swaps(g: Graph, steps: int, rng: random.Random) -> Graph:
    """Apply random degree-preserving double-edge swaps."""
    rows = list(g.rows)
    edges = g.edges()
    for _ in range(steps):
        if len(edges) < 2:
            break
        i, j = rng.sample(range(len(edges)), 2)
        (a, ap), (b, bp) = edges[i], edges[j]
        if rng.random() < 0.5:
            b, bp = bp, b
        if len({a, ap, b, bp}) < 4 or rows[a] >> bp & 1 or rows[ap] >> b & 1:
            continue
        rows = exchange_rows(rows, ExchangeMove(a, ap, b, bp))
        edges[i], edges[j] = (min(a, bp), max(a, bp)), (min(ap, b), max(ap, b))
    return Graph.from_rows(g.n, rows)


def random_realization(seq, rng: random.Random) -> Graph:
    g = realize(seq)
    return random_swaps(g, 4 * max(1, g.edge_count), rng)


def spanning_forest(g: Graph) -> Graph:
    """BFS spanning forest of ``g``."""
    seen = 0
    edges = []
    for s in g.vertices:
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = [s]
        for u in queue:
            for v in bits(g.rows[u] & ~seen):
                seen |= 1 << v
                edges.append((u, v))
                queue.append(v)
    return Graph(g.n, edges)


def clustered_graph(rng: random.Random, max_n: int, min_block: int = 3) -> Graph:
    """Dense blocks chained by a few edges; tends to have lambda < delta."""
    while True:
        sizes = []
        while sum(sizes) + min_block <= max_n and (len(sizes) < 2 or rng.random() < 0.4):
            sizes.append(rng.randint(min_block, max(min_block, min(max_n - sum(sizes), 6))))
        if len(sizes) >= 2:
            break
    edges = []
    off = 0
    blocks = []
    for s in sizes:
        members = list(range(off + 1, off + s + 1))
        for u, v in combinations(members, 2):
            if rng.random() < 0.85:
                edges.append((u, v))
        blocks.append(members)
        off += s
    present = set(edges)
    for i in range(len(blocks) - 1):
        for _ in range(rng.randint(1, 2)):
            e = (rng.choice(blocks[i]), rng.choice(blocks[i + 1]))
            if e not in present:
                present.add(e)
                edges.append(e)
    return Graph(off, edges)


# -- batch checkers -----------------------------------------------------------
def _lam_brute(g: Graph) -> int:
    return brute_min_cut(g)[0] if g.n >= 2 else 0


def _rewire_audit(p: RewireProblem, g: Graph) -> str:
    """Independent audit of a rewire output; empty string when everything holds."""
    problems = []
    if g.degrees() != p.g0.degrees():
        problems.append("degrees changed")
    if any(r & ~s for r, s in zip(p.protected.rows, g.rows)):
        problems.append("protected edge removed")
    lost = len(p.g0.edge_set() - g.edge_set())
    if lost > p.z0.edge_count:
        problems.append(f"edit bound: {lost} > |E(Z0)| = {p.z0.edge_count}")
    h = subtract_edges(g, p.f)
    lam, delta = _lam_brute(h), h.min_degree()
    if p.mode is Mode.FULL and lam != delta:
        problems.append(f"lambda={lam} != delta={delta}")
    if p.mode is Mode.RELAXED and (lam < delta - 1 or (delta % 2 == 0 and lam != delta)):
        problems.append(f"relaxed target missed: lambda={lam}, delta={delta}")
    return "; ".join(problems)


def check_edmonds(max_n: int = 7, seed: int = 0) -> CheckReport:
    """Every graphic sequence with positive terms: a realization is d_n-edge-connected
    exactly when the Edmonds condition holds, and rewiring finds one."""
    rep = CheckReport("edmonds", seed)
    for n in range(2, max_n + 1):
        for seq in graphic_sequences(n, min_term=1):
            inst = {"pi": list(seq)}
            feasible = edmonds_feasible(seq, seq[-1])
            g0 = realize(seq)
            if not feasible:
                # fewer than n-1 edges: no realization is connected
                ok = g0.edge_count < n - 1 and _lam_brute(g0) == 0
                rep.record(inst, ok, "" if ok else "infeasible sequence with a connected realization")
                continue
            try:
                g, _ = rewire(RewireProblem(g0))
                detail = _rewire_audit(RewireProblem(g0), g)
                if not detail and _lam_brute(g) != seq[-1]:
                    detail = "lambda != d_n"
            except MaxconError as exc:
                detail = f"{type(exc).__name__}: {exc}"
            rep.record(inst, not detail, detail)
    return rep


def _forest_z0(g0: Graph, rng: random.Random) -> Graph:
    forest = spanning_forest(g0)
    z0 = forest
    if g0.min_degree() == 1 and z0.edge_count < g0.n - 1:
        extra = sorted(g0.edge_set() - forest.edge_set())
        rng.shuffle(extra)
        z0 = z0.with_edges(add=extra[: g0.n - 1 - z0.edge_count])
    return z0


def check_preservation(samples: int = 1000, max_n: int = 12, seed: int = 0) -> CheckReport:
    """Random realizations, spanning-forest sacrificial part, empty protected part."""
    rng = random.Random(seed)
    rep = CheckReport("preservation", seed)
    while rep.instances_checked < samples:
        n = rng.randint(3, max_n)
        seq = random_graphic_sequence(n, rng, high=rng.randint(1 + n % 2, n - 1))
        if not edmonds_feasible(seq, 1):
            continue
        g0 = random_realization(seq, rng) if rng.random() < 0.5 else realize(seq)
        z0 = _forest_z0(g0, rng)
        p = RewireProblem(g0, None, z0, Mode.FULL)
        inst = {"g0": to_graph6(g0), "z0": to_graph6(z0)}
        try:
            g, _ = rewire(p)
            detail = _rewire_audit(p, g)
            if z0.edge_count > n - 1:
                detail += "; |E(Z0)| > n-1"
        except MaxconError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        rep.record(inst, not detail, detail)
    return rep


def _random_bounded_subgraph(g: Graph, max_deg: int, rng: random.Random, p: float = 0.6) -> Graph:
    edges = g.edges()
    rng.shuffle(edges)
    deg = [0] * (g.n + 1)
    keep = []
    for u, v in edges:
        if deg[u] < max_deg and deg[v] < max_deg and rng.random() < p:
            keep.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(g.n, keep)


def _random_base(rng: random.Random, max_n: int) -> Graph:
    if rng.random() < 0.5:
        return clustered_graph(rng, max_n)
    n = rng.randint(4, max_n)
    return random_realization(random_graphic_sequence(n, rng, low=1), rng)


def check_relaxed(samples: int = 500, max_n: int = 12, seed: int = 0) -> CheckReport:
    """Relaxed rewiring with a nonempty protected subgraph."""
    rng = random.Random(seed)
    rep = CheckReport("relaxed", seed)
    while rep.instances_checked < samples:
        g0 = _random_base(rng, max_n)
        f = _random_bounded_subgraph(g0, rng.randint(1, 3), rng)
        if f.edge_count == 0:
            continue
        h0 = subtract_edges(g0, f)
        if h0.min_degree() < f.max_degree():
            continue
        if g0.min_degree() == 1 and h0.edge_count < g0.n - 1:
            continue
        p = RewireProblem(g0, f, mode=Mode.RELAXED)
        inst = {"g0": to_graph6(g0), "f": to_graph6(f)}
        try:
            g, _ = rewire(p)
            detail = _rewire_audit(p, g)
        except MaxconError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        rep.record(inst, not detail, detail)
    return rep


def check_full_protected(samples: int = 300, max_n: int = 12, seed: int = 0) -> CheckReport:
    """Full-mode rewiring with nonempty protected part and thinned sacrificial part."""
    rng = random.Random(seed)
    rep = CheckReport("protected", seed)
    while rep.instances_checked < samples:
        g0 = _random_base(rng, max_n)
        fdeg = rng.randint(1, 2)
        f = _random_bounded_subgraph(g0, fdeg, rng)
        z0 = subtract_edges(g0, f)
        for u, v in rng.sample(z0.edges(), z0.edge_count):
            if z0.degree(u) > fdeg + 1 and z0.degree(v) > fdeg + 1 and rng.random() < 0.6:
                z0 = z0.with_edges(remove=[(u, v)])
        if z0.min_degree() <= f.max_degree():
            continue
        if g0.min_degree() == 1 and z0.edge_count < g0.n - 1:
            continue
        p = RewireProblem(g0, f, z0, Mode.FULL)
        inst = {"g0": to_graph6(g0), "f": to_graph6(f), "z0": to_graph6(z0)}
        try:
            g, _ = rewire(p)
            detail = _rewire_audit(p, g)
        except MaxconError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        rep.record(inst, not detail, detail)
    return rep


def check_maxcon_factor(max_n: int = 6, ks: tuple[int, ...] = (1, 2), seed: int = 0) -> CheckReport:
    """Every (pi, kappa) with d_i >= 2 and kappa_i in {k, k+1}, both graphic."""
    rep = CheckReport("factor", seed)
    for n in range(2, max_n + 1):
        for seq in graphic_sequences(n, min_term=2):
            pi = DegreeSequence(seq)
            for k in ks:
                for bump in range(1 << n):
                    kappa = tuple(k + (bump >> i & 1) for i in range(n))
                    rest = [d - c for d, c in zip(seq, kappa)]
                    if min(rest) < 0 or not graphic_values(kappa) or not graphic_values(rest):
                        continue
                    inst = {"pi": list(seq), "kappa": list(kappa), "k": k}
                    try:
                        g, factor, _ = maxcon_with_factor(FactorRequest(pi, kappa, k))
                        dec = FactorDecomposition(g, factor)
                        report = verify_decomposition(dec, pi, kappa)
                        detail = "; ".join(report.violations)
                        lam = _lam_brute(g)
                        if lam != g.min_degree():
                            detail += f"; lambda={lam} != delta={g.min_degree()}"
                    except MaxconError as exc:
                        detail = f"{type(exc).__name__}: {exc}"
                    rep.record(inst, not detail, detail)
    return rep


def random_connected_regular(n: int, k: int, rng: random.Random, tries: int = 200) -> Graph | None:
    """A random k-regular graph on n vertices that is (k-1)-edge-connected."""
    for _ in range(tries):
        g = random_realization((k,) * n, rng)
        if k < 2 or cuts.lambda_of(g) >= k - 1:
            return g
    return None


def check_berge(samples: int = 500, max_n: int = 14, max_k: int = 4, seed: int = 0) -> CheckReport:
    """Even-order (k-1)-edge-connected k-regular graphs have a perfect matching."""
    rng = random.Random(seed)
    rep = CheckReport("regular-matching", seed)
    while rep.instances_checked < samples:
        k = rng.randint(1, max_k)
        n = rng.randrange(max(2, k + 1 + (k + 1) % 2), max_n + 1, 2)
        g = random_connected_regular(n, k, rng)
        if g is None:
            continue
        detail = ""
        if cuts.lambda_of(g) < k - 1:
            detail = "generator produced an under-connected graph"
        try:
            m = perfect_matching(g)
            if len(m) * 2 != n:
                detail = "short matching"
        except NoPerfectMatching as exc:
            detail = f"NoPerfectMatching: {exc}"
        if n <= guards().match_n and brute_matching(g) * 2 != n:
            detail += "; brute force disagrees"
        rep.record({"g6": to_graph6(g), "k": k}, not detail, detail)
    return rep


def peel_instances(ns=(4, 6, 8, 10, 12), rs=(0, 1, 2)) -> Iterator[tuple[str, tuple[int, ...], int, int]]:
    """Regular and near-regular sequences with every admissible (k, r), both cases."""
    for n in ns:
        seqs = []
        for d in range(1, n):
            for j in range(n):
                seq = (d + 1,) * j + (d,) * (n - j)
                if seq[0] <= n - 1 and is_graphic(seq):
                    seqs.append(seq)
        for seq in seqs:
            for r in rs:
                for k in range(1, seq[-1] + 1):
                    if not is_graphic(subtract_k(seq, k)):
                        continue
                    if 2 * k >= seq[0] + 2 * r:
                        yield "direct", seq, k, r
                    if k >= n - 1 - seq[-1] + 2 * r:
                        yield "complement", seq, k, r


def check_peeling(ns=(4, 6, 8, 10, 12), rs=(0, 1, 2), seed: int = 0) -> CheckReport:
    rep = CheckReport("peeling", seed)
    for case, seq, k, r in peel_instances(ns, rs):
        inst = {"case": case, "pi": list(seq), "k": k, "r": r}
        try:
            fn = peel_one_factors if case == "direct" else peel_complement_case
            dec = fn(seq, k, r, seed)
            report = verify_decomposition(dec, seq, k)
            detail = "; ".join(report.violations)
            if len(dec.one_factors) < r + 1:
                detail += f"; only {len(dec.one_factors)} one-factors"
        except MaxconError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        rep.record(inst, not detail, detail)
    return rep


def _weak_regime_graph(rng: random.Random, max_n: int) -> tuple[Graph, int, int, list[int]] | None:
    g = clustered_graph(rng, max_n)
    lam, delta, weak = brute_weak_sets(g)
    if lam >= delta:
        return None
    return g, lam, delta, weak


def _weak_set_instances(rng: random.Random, max_n: int, per_graph: int) -> Iterator[tuple[Graph, int, list[int], int]]:
    while True:
        found = _weak_regime_graph(rng, max_n)
        if found is None:
            continue
        g, _, delta, weak = found
        critical = [a for a in weak if not any(w != a and w & ~a == 0 for w in weak)]
        for _ in range(per_graph):
            yield g, delta, weak, rng.choice(critical)


def check_weak_sets(samples: int = 10_000, max_n: int = 10, seed: int = 0, per_graph: int = 10) -> CheckReport:
    """Fuzzed (G, A, S, X): splitting bounds for critically weak sets and
    nonempty self-supporting interiors of weak sets."""
    rng = random.Random(seed)
    rep = CheckReport("weak-sets", seed)
    for g, delta, weak, a in _weak_set_instances(rng, max_n, per_graph):
        if rep.instances_checked >= samples:
            break
        full = g.full_mask
        members = list(bits(a))
        subsets = [a]
        for size in range(2, len(members)):
            for combo in combinations(members, size):
                s = sum(1 << v for v in combo)
                if mask_cut(g.rows, s, full & ~s) <= delta:
                    subsets.append(s)
        s = rng.choice(subsets)
        s_members = list(bits(s))
        while True:
            x = sum(1 << v for v in g.vertices if rng.random() < 0.5)
            if x & s and s & ~x:
                break
        w = rng.choice(weak)
        inst = {"g6": to_graph6(g), "A": members, "S": s_members, "X": sorted(bits(x)), "W": sorted(bits(w))}
        try:
            r1 = cuts.check_split_bounds(g, a, s, x)
            r2 = cuts.check_interior(g, w)
            detail = ""
            if not r1.holds:
                detail = f"split bounds: {r1}"
            if not r2.holds:
                detail += f" interior: {r2}"
            if not r2.interior:
                detail += " weak set equals its boundary"
        except MaxconError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        rep.record(inst, not detail, detail)
    return rep


# -- disjoint 1-factor explorer -----------------------------------------------


def _has_k_factor_witness(seq: tuple[int, ...], k: int, rng: random.Random, tries: int) -> bool:
    """Search realizations of D_k(seq) whose complement holds k disjoint perfect matchings."""
    rest = tuple(d - k for d in seq)
    r = realize(rest)
    for _ in range(tries):
        if disjoint_perfect_matchings(r.complement(), k) is not None:
            return True
        r = random_swaps(r, r.edge_count + 1, rng)
    for r in enumerate_realizations(rest):
        if disjoint_perfect_matchings(r.complement(), k) is not None:
            return True
    return False


def _exact_witness(seq: tuple[int, ...], k: int) -> bool:
    """Independent route: scan realizations of seq itself."""
    return any(disjoint_perfect_matchings(g, k) is not None for g in enumerate_realizations(seq))


def explore_disjoint_factors(n: int, k: int, seed: int = 0, tries: int = 20) -> CheckReport:
    """Look for graphic sequences of even length ``n`` with D_k graphic but no
    realization carrying k edge-disjoint 1-factors. Failures are candidates only."""
    _guard(n, guards().enum_n, "disjoint-factor explorer")
    if n % 2:
        raise ValidationError(f"n must be even, got {n}")
    rng = random.Random(seed)
    rep = CheckReport(f"disjoint-factors(n={n},k={k})", seed)
    for seq in graphic_sequences(n, min_term=k):
        if not is_graphic(subtract_k(seq, k)):
            continue
        ok = _has_k_factor_witness(seq, k, rng, tries) or _exact_witness(seq, k)
        rep.record({"pi": list(seq), "k": k}, ok, "" if ok else "counterexample candidate")
    return rep


def check_disjoint_factors(max_n: int = 8, max_k: int = 3, seed: int = 0) -> CheckReport:
    rep = CheckReport("disjoint-factors", seed)
    for n in range(2, max_n + 1, 2):
        for k in range(1, max_k + 1):
            sub = explore_disjoint_factors(n, k, seed)
            for r in sub.records:
                rep.record(r["instance"], r["ok"], r.get("detail", ""))
    return rep


CHECKERS = {
    "edmonds": lambda max_n, samples, seed: check_edmonds(max_n or 7, seed),
    "preservation": lambda max_n, samples, seed: check_preservation(samples or 1000, max_n or 12, seed),
    "protected": lambda max_n, samples, seed: check_full_protected(samples or 300, max_n or 12, seed),
    "relaxed": lambda max_n, samples, seed: check_relaxed(samples or 500, max_n or 12, seed),
    "factor": lambda max_n, samples, seed: check_maxcon_factor(max_n or 6, seed=seed),
    "regular-matching": lambda max_n, samples, seed: check_berge(samples or 500, max_n or 14, seed=seed),
    "peeling": lambda max_n, samples, seed: check_peeling(tuple(range(4, (max_n or 12) + 1, 2)), seed=seed),
    "weak-sets": lambda max_n, samples, seed: check_weak_sets(samples or 10_000, max_n or 10, seed),
    "disjoint-factors": lambda max_n, samples, seed: check_disjoint_factors(max_n or 8, seed=seed),
}


def check_theorem(theorem_id: str, max_n: int | None = None, samples: int | None = None, seed: int = 0) -> CheckReport:
    """Run one checker; ``max_n``/``samples`` default to the acceptance-size sweep."""
    if theorem_id not in CHECKERS:
        raise ValidationError(f"unknown theorem id {theorem_id!r}; choose from {sorted(CHECKERS)}")
    return CHECKERS[theorem_id](max_n, samples, seed)
