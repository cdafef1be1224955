"""Realizing a prescribed set of distinct degrees.

Two constructions: a loop-free graph of order p1 + 1 whose degree set is
exactly the requested set (joins of complete graphs, built recursively),
and a mirror bipartite graph with stable sets of size p1 realizing the set
on both sides (a staircase grown by universal pairs when the set is a run
of consecutive values, otherwise a product construction patched on the
diagonal at the first gap).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import BipartiteGraph, DegreeSet, LGraph, MirrorPairing
from .errors import InternalContradiction
from .realize import MirrorRealization, staircase
from .transform import kronecker_k2

__all__ = [
    "SimpleGraph",
    "kapoor_realize",
    "augment_universal_pair",
    "degset_mirror_realize",
]


@dataclass(frozen=True)
class SimpleGraph:
    """A loop-free graph, stored like LGraph but with an empty diagonal."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        # reuse LGraph's symmetry validation, then forbid the diagonal
        LGraph(self.n, self.rows)
        for v in range(self.n):
            if (self.rows[v] >> v) & 1:
                raise ValueError(f"vertex {v} carries a loop")

    def degree_list(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_set(self) -> DegreeSet:
        return DegreeSet.from_values(set(self.degree_list()))

    def as_lgraph(self) -> LGraph:
        return LGraph(self.n, self.rows)


def _as_set(s: DegreeSet | Iterable[int]) -> DegreeSet:
    if isinstance(s, DegreeSet):
        return s
    return DegreeSet(tuple(s))


def _empty(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def _complete(n: int) -> SimpleGraph:
    mask = (1 << n) - 1
    return SimpleGraph(n, tuple(mask ^ (1 << v) for v in range(n)))


def _union(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    rows = list(a.rows) + [r << a.n for r in b.rows]
    return SimpleGraph(a.n + b.n, tuple(rows))


def _join(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every edge between the two parts."""
    u = _union(a, b)
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    rows = [r | bmask for r in u.rows[: a.n]] + [r | amask for r in u.rows[a.n:]]
    return SimpleGraph(u.n, tuple(rows))


def kapoor_realize(s: DegreeSet | Iterable[int]) -> SimpleGraph:
    """A loop-free graph of order s[0] + 1 whose degree set is exactly s.

    Recursive join construction; every return is checked against the order
    and degree-set postconditions rather than trusted.
    """
    s = _as_set(s)
    if len(s) == 0:
        raise ValueError("degree set must be non-empty")
    g = _kapoor(s)
    if g.n != s[0] + 1:
        raise InternalContradiction(f"order {g.n} != {s[0] + 1} for {s.values}")
    if g.degree_set() != s:
        raise InternalContradiction(f"degree set {g.degree_set().values} != {s.values}")
    return g


def _kapoor(s: DegreeSet) -> SimpleGraph:
    k = len(s)
    if k == 1:
        return _complete(s[0] + 1)
    p1, pk = s[0], s[-1]
    if k == 2:
        inner: SimpleGraph = _empty(1)
    else:
        inner = _kapoor(DegreeSet(tuple(v - pk for v in s.values[1:-1])))
    rest = _union(inner, _empty(s[0] - s[1]))
    return _join(_complete(pk), rest)


def augment_universal_pair(m: MirrorRealization) -> MirrorRealization:
    """Add one new pair joined to everything, including each other.

    The new row and column go in front, so degree-sorted orders stay put.
    """
    n = m.graph.n1
    rows = [(1 << (n + 1)) - 1]
    rows += [(r << 1) | 1 for r in m.graph.rows]
    graph = BipartiteGraph(n + 1, n + 1, tuple(rows))
    pairing = MirrorPairing((0,) + tuple(j + 1 for j in m.pairing))
    return MirrorRealization.build(graph, pairing)


def degset_mirror_realize(s: DegreeSet | Iterable[int]) -> MirrorRealization:
    """A mirror graph with stable sets of size s[0] whose degree set is s
    on both sides.

    A run of consecutive values comes from a staircase grown by universal
    pairs.  Otherwise, split at the first gap: realize the set with the
    head shifted down by one, take its product with a single edge, and add
    the missing diagonal edges on every vertex whose degree sits in the
    shifted head.
    """
    s = _as_set(s)
    if len(s) == 0:
        raise ValueError("degree set must be non-empty")
    k = len(s)
    p1, pk = s[0], s[-1]
    if p1 - pk == k - 1:
        m = staircase(k)
        for _ in range(p1 - k):
            m = augment_universal_pair(m)
    else:
        gap = next(i for i in range(k - 1) if s[i] - s[i + 1] > 1)
        head = tuple(v - 1 for v in s.values[: gap + 1])
        tail = s.values[gap + 1:]
        try:
            reduced = DegreeSet(head + tail)
        except ValueError as exc:
            raise InternalContradiction(f"shifted set collapsed: {head + tail}") from exc
        inner = kapoor_realize(reduced)
        m = kronecker_k2(inner.as_lgraph())
        bump = set(head)
        rows = list(m.graph.rows)
        for v, d in enumerate(inner.degree_list()):
            if d in bump:
                if (rows[v] >> v) & 1:
                    raise InternalContradiction(f"diagonal already set at {v}")
                rows[v] |= 1 << v
        patched = BipartiteGraph(m.graph.n1, m.graph.n2, tuple(rows))
        m = MirrorRealization.build(patched, m.pairing)
    degs = m.graph.row_degree_list()
    if m.graph.n1 != p1 or DegreeSet.from_values(set(degs)) != s:
        raise InternalContradiction(f"realization misses the target set {s.values}")
    cdegs = m.graph.column_degree_list()
    if DegreeSet.from_values(set(cdegs)) != s:
        raise InternalContradiction("column side misses the target set")
    return m
