"""Acceptance gate: nine sweeps, each printed as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from maxcon import cuts, oracle
from maxcon.errors import DisconnectedError, NoPerfectMatching
from maxcon.factors import perfect_matching
from maxcon.formats import to_graph6
from maxcon.graph import Graph

from conftest import small_graphs

SEED = 0
RESULTS: dict[int, str] = {}


def report(num: int, title: str, checked: int, failures: list, seconds: float, budget: float | None = None) -> None:
    over = budget is not None and seconds > budget
    status = "PASS" if not failures and not over else "FAIL"
    limit = f" (budget {budget:.0f}s)" if budget else ""
    line = f"criterion {num} [{title}]: {status} - {checked} instances, {len(failures)} failures, {seconds:.1f}s{limit}"
    RESULTS[num] = line
    print(line)
    assert not failures, failures[:3]
    assert not over, f"runtime {seconds:.1f}s over budget {budget}s"


def _sweep(num: int, title: str, theorem: str, budget: float | None = None, **kw) -> None:
    t = time.perf_counter()
    rep = oracle.check_theorem(theorem, seed=SEED, **kw)
    report(num, title, rep.instances_checked, rep.failures, time.perf_counter() - t, budget)


def test_criterion_1_edmonds_sweep():
    _sweep(1, "Edmonds sweep n<=7", "edmonds", budget=300, max_n=7)


def test_criterion_2_preservation_sweep():
    _sweep(2, "preservation sweep", "preservation", samples=1000, max_n=12)


def test_criterion_3_relaxed_sweep():
    _sweep(3, "relaxed sweep", "relaxed", samples=500, max_n=12)


def test_criterion_4_factor_sweep():
    _sweep(4, "maximally connected factor sweep n<=6", "factor", max_n=6)


def test_criterion_5_peeling_sweep():
    _sweep(5, "one-factor peeling n<=12", "peeling", budget=600, max_n=12)


def test_criterion_6_weak_set_suite():
    _sweep(6, "weak-set fuzz", "weak-sets", samples=10_000, max_n=10)


def _random_graph(rng: random.Random, max_n: int) -> Graph:
    n = rng.randint(2, max_n)
    p = rng.uniform(0.15, 0.9)
    return Graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def _cut_disagreement(g: Graph) -> str:
    lam, shores = oracle.brute_min_cut(g)
    ours, witness = cuts.edge_connectivity(g)
    if ours != lam:
        return f"lambda {ours} != {lam}"
    if witness.side not in shores and lam > 0:
        return "witness shore is not minimum"
    if lam == 0:
        try:
            cuts.enumerate_min_cuts(g)
            return "disconnected graph enumerated"
        except DisconnectedError:
            return ""
    found = [c.side for c in cuts.enumerate_min_cuts(g)]
    if len(found) != len(shores) or set(found) != set(shores):
        return f"min cuts differ: {len(found)} vs {len(shores)}"
    return ""


def test_criterion_7_oracle_agreement():
    t = time.perf_counter()
    failures = []
    checked = 0
    for g in small_graphs(8):
        if g.n < 2:
            continue
        checked += 1
        if msg := _cut_disagreement(g):
            failures.append({"g6": to_graph6(g), "detail": msg})
    rng = random.Random(SEED)
    for _ in range(1000):
        g = _random_graph(rng, 12)
        checked += 1
        if msg := _cut_disagreement(g):
            failures.append({"g6": to_graph6(g), "detail": msg})
    for _ in range(1000):
        g = _random_graph(rng, 10)
        checked += 1
        try:
            ok = len(perfect_matching(g)) * 2 == g.n
        except NoPerfectMatching:
            ok = False
        if ok != (oracle.brute_matching(g) * 2 == g.n):
            failures.append({"g6": to_graph6(g), "detail": "perfect matching existence differs"})
    report(7, "oracle agreement", checked, failures, time.perf_counter() - t)


def test_criterion_8_berge_regression():
    _sweep(8, "regular graph perfect matchings", "regular-matching", samples=500, max_n=14)


def test_criterion_9_disjoint_factor_explorer():
    _sweep(9, "disjoint-factor explorer n<=8 k<=3", "disjoint-factors", max_n=8)


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
