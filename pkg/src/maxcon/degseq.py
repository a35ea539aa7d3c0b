"""Degree-sequence arithmetic: graphicality, realization, shifts and complements."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import NotGraphic, ParseError, ValidationError
from .graph import Graph


@dataclass(frozen=True)
class DegreeSequence:
    """A non-increasing sequence of non-negative integers.

    ``order`` records which caller-side vertex each sorted position belongs
    to (1-based), so realizations can be reported in the caller's labeling.
    It is the identity unless the sequence was built with
    :meth:`from_unsorted`.
    """

    terms: tuple[int, ...]
    order: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        for i, d in enumerate(terms):
            if not isinstance(d, int) or isinstance(d, bool):
                raise ValidationError(f"term {i + 1} is not an integer: {d!r}")
            if d < 0:
                raise ValidationError(f"term {i + 1} is negative: {d}")
            if i and terms[i - 1] < d:
                raise ValidationError(
                    f"sequence must be non-increasing; term {i + 1} ({d}) exceeds term {i} ({terms[i - 1]})"
                )
        order = tuple(self.order) or tuple(range(1, len(terms) + 1))
        if sorted(order) != list(range(1, len(terms) + 1)):
            raise ValidationError("order must be a permutation of 1..n")
        object.__setattr__(self, "order", order)

    @classmethod
    def from_unsorted(cls, values: Iterable[int]) -> DegreeSequence:
        """Sort ``values`` non-increasingly, remembering the original positions."""
        vals = list(values)
        if any(not isinstance(d, int) or d < 0 for d in vals):
            raise ValidationError(f"degree terms must be non-negative integers: {vals}")
        idx = sorted(range(len(vals)), key=lambda i: (-vals[i], i))
        return cls(tuple(vals[i] for i in idx), tuple(i + 1 for i in idx))

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        """Parse whitespace- or comma-separated integers."""
        values = []
        for m in re.finditer(r"[^\s,]+", text):
            tok = m.group()
            if not re.fullmatch(r"\d+", tok):
                raise ParseError(f"expected a non-negative integer, got {tok!r}", 1, m.start() + 1)
            values.append(int(tok))
        return cls.from_unsorted(values)

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def total(self) -> int:
        return sum(self.terms)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex 1..n in the caller's labeling."""
        out = [0] * self.n
        for pos, v in enumerate(self.order):
            out[v - 1] = self.terms[pos]
        return tuple(out)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.terms))


def as_sequence(seq: DegreeSequence | Sequence[int]) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(tuple(seq))


def graphic_values(values: Iterable[int]) -> bool:
    """Erdős–Gallai on an arbitrary-order vector of degrees."""
    vals = sorted(values, reverse=True)
    if vals and vals[-1] < 0:
        return False
    return is_graphic(DegreeSequence(tuple(vals)))


def is_graphic(seq: DegreeSequence | Sequence[int]) -> bool:
    """Erdős–Gallai test with prefix sums, O(n) after sorting."""
    d = as_sequence(seq).terms
    n = len(d)
    if sum(d) % 2:
        return False
    if n and d[0] > n - 1:
        return False
    prefix = [0]
    for x in d:
        prefix.append(prefix[-1] + x)
    p = n  # d[:p] are the terms >= k
    for k in range(1, n + 1):
        while p > 0 and d[p - 1] < k:
            p -= 1
        tail_big = max(0, p - k)
        tail_small = prefix[n] - prefix[max(k, p)]
        if prefix[k] > k * (k - 1) + k * tail_big + tail_small:
            return False
    return True


def havel_hakimi(values: Sequence[int]) -> Graph:
    """Realize an arbitrary-order degree vector; vertex ``i+1`` gets ``values[i]``."""
    n = len(values)
    rem = list(values)
    edges = []
    while True:
        v = max(range(n), key=lambda i: (rem[i], -i), default=None)
        if v is None or rem[v] == 0:
            break
        others = sorted((i for i in range(n) if i != v and rem[i] > 0), key=lambda i: (-rem[i], i))
        if len(others) < rem[v]:
            raise NotGraphic(f"sequence {list(values)} is not graphic")
        for u in others[: rem[v]]:
            rem[u] -= 1
            edges.append((v + 1, u + 1))
        rem[v] = 0
    return Graph(n, edges)


def realize(seq: DegreeSequence | Sequence[int]) -> Graph:
    """Havel–Hakimi realization; vertex labels follow ``seq.order``."""
    s = as_sequence(seq)
    if not is_graphic(s):
        raise NotGraphic(f"sequence ({s}) is not graphic")
    return havel_hakimi(s.degrees)


def subtract_k(seq: DegreeSequence | Sequence[int], k: int) -> DegreeSequence:
    s = as_sequence(seq)
    if k < 0:
        raise ValidationError(f"k must be non-negative, got {k}")
    if s.n and s.terms[-1] < k:
        raise ValidationError(f"cannot subtract {k}: smallest term is {s.terms[-1]}")
    return DegreeSequence(tuple(d - k for d in s.terms), s.order)


def complement_reverse(seq: DegreeSequence | Sequence[int]) -> DegreeSequence:
    """``(n-1-d_n, ..., n-1-d_1)``: degrees of the complement, re-sorted."""
    s = as_sequence(seq)
    n = s.n
    if n and s.terms[0] > n - 1:
        raise ValidationError(f"term {s.terms[0]} exceeds n-1 = {n - 1}")
    return DegreeSequence(tuple(n - 1 - d for d in reversed(s.terms)))


def edmonds_feasible(seq: DegreeSequence | Sequence[int], k: int) -> bool:
    """Whether some realization is k-edge-connected."""
    s = as_sequence(seq)
    if k <= 0:
        raise ValidationError(f"k must be positive, got {k}")
    if not is_graphic(s):
        raise NotGraphic(f"sequence ({s}) is not graphic")
    if s.n == 0 or s.terms[-1] < k:
        return False
    if s.terms[-1] == 1:
        return s.total >= 2 * (s.n - 1)
    return True
