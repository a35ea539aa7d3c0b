"""Find a k-factor holding r+1 edge-disjoint perfect matchings.

For a sequence with 2k >= d_1 + 2r the direct construction applies; for
k >= n - 1 - d_n + 2r the complement construction does. Both outputs are
audited from scratch by verify_decomposition.
"""

from __future__ import annotations

from maxcon import peel_complement_case, peel_one_factors, verify_decomposition

cases = [
    ("direct", (5,) * 6, 4, 1),
    ("direct", (7, 7, 6, 6, 6, 6, 6, 6), 5, 1),
    ("complement", (4,) * 6, 4, 0),
    ("complement", (7,) * 8, 6, 2),
]

for case, pi, k, r in cases:
    fn = peel_one_factors if case == "direct" else peel_complement_case
    dec = fn(pi, k, r)
    report = verify_decomposition(dec, pi, k)
    print(f"{case:>10} pi={pi} k={k} r={r}: {len(dec.one_factors)} matchings, "
          f"residual {dec.residual.edge_count} edges, audit {'ok' if report.ok else report.violations}")
    for m in dec.one_factors:
        print("            ", list(m))
