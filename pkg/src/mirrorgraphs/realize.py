"""Degree-sequence checks and constructive realizers.

Two independent bigraphic tests (a counting inequality and an iterated
reduction) feed the constructions: plain bipartite realization, mirror
realization by recursion on the paired sequence, loop-graph realization,
and the staircase family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    BipartiteGraph,
    DegreeSequence,
    LGraph,
    MirrorPairing,
    left_degrees,
    verify_pairing,
)
from .errors import InternalContradiction, NotBigraphic, NotLoopGraphic

__all__ = [
    "MirrorRealization",
    "gale_ryser_check",
    "hh_check",
    "realize_bigraphic",
    "mirror_realize",
    "loop_check",
    "loop_realize",
    "staircase",
]


def _as_sequence(p: DegreeSequence | Iterable[int]) -> DegreeSequence:
    if isinstance(p, DegreeSequence):
        return p
    return DegreeSequence(tuple(p))


@dataclass(frozen=True)
class MirrorRealization:
    """A balanced bipartite graph together with a verified mirror pairing.

    ``left_order[k]`` is the row holding the vertex of the k-th largest
    degree, so the graph's rows need not themselves be degree-sorted.
    """

    graph: BipartiteGraph
    pairing: MirrorPairing
    left_order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "left_order", tuple(self.left_order))
        if not verify_pairing(self.graph, self.pairing):
            raise ValueError("pairing does not make the biadjacency symmetric")
        n = self.graph.n1
        if sorted(self.left_order) != list(range(n)):
            raise ValueError("left_order is not a permutation of the rows")
        degs = self.graph.row_degree_list()
        ordered = [degs[i] for i in self.left_order]
        if any(a < b for a, b in zip(ordered, ordered[1:])):
            raise ValueError("left_order does not sort row degrees non-increasingly")

    @classmethod
    def build(cls, graph: BipartiteGraph, pairing: MirrorPairing) -> "MirrorRealization":
        degs = graph.row_degree_list()
        order = sorted(range(graph.n1), key=lambda i: (-degs[i], i))
        return cls(graph, pairing, tuple(order))

    def degrees(self) -> DegreeSequence:
        return left_degrees(self.graph)


def gale_ryser_check(p: DegreeSequence | Iterable[int], q: DegreeSequence | Iterable[int]) -> bool:
    """Counting test: (p, q) is bigraphic iff the sums agree and every
    prefix of p is dominated by the column capacities of q."""
    p = _as_sequence(p)
    q = _as_sequence(q)
    if p.total() != q.total():
        return False
    for k in range(1, len(p) + 1):
        lhs = sum(p.values[:k])
        rhs = sum(min(x, k) for x in q)
        if lhs > rhs:
            return False
    return True


def hh_check(
    p: DegreeSequence | Iterable[int],
    q: DegreeSequence | Iterable[int],
    alternate: bool = False,
) -> bool:
    """Reduction test: peel the largest left degree, subtract one from that
    many largest right degrees, re-sort, repeat.

    ``alternate`` peels the larger of the two current maxima instead of
    always reducing the left; both schedules must agree.
    """
    p = _as_sequence(p)
    q = _as_sequence(q)
    left = sorted(p, reverse=True)
    right = sorted(q, reverse=True)
    while True:
        while left and left[-1] == 0:
            left.pop()
        while right and right[-1] == 0:
            right.pop()
        if not left and not right:
            return True
        if not left or not right:
            return False
        if alternate and right[0] > left[0]:
            left, right = right, left
        d = left.pop(0)
        if d > len(right):
            return False
        for i in range(d):
            right[i] -= 1
            if right[i] < 0:
                return False
        right.sort(reverse=True)


def realize_bigraphic(
    p: DegreeSequence | Iterable[int], q: DegreeSequence | Iterable[int]
) -> BipartiteGraph:
    """Build some bipartite graph with row degrees p and column degrees q.

    Greedy: each row takes the columns with the most remaining capacity,
    lowest index first on ties.  Raises NotBigraphic when no graph exists.
    """
    p = _as_sequence(p)
    q = _as_sequence(q)
    if not gale_ryser_check(p, q):
        raise NotBigraphic(f"({p.values}, {q.values}) is not bigraphic")
    n2 = len(q)
    caps = list(q)
    rows = []
    for d in p:
        order = sorted(range(n2), key=lambda j: (-caps[j], j))
        chosen = order[:d]
        if d > 0 and (len(chosen) < d or caps[chosen[-1]] <= 0):
            raise InternalContradiction("greedy packing failed on a bigraphic pair")
        r = 0
        for j in chosen:
            caps[j] -= 1
            r |= 1 << j
        rows.append(r)
    if any(c != 0 for c in caps):
        raise InternalContradiction("column capacities left over after packing")
    return BipartiteGraph(len(p), n2, tuple(rows))


def _mirror_rows(p: tuple[int, ...]) -> list[int]:
    """Symmetric bit matrix with row i of degree p[i]; p non-increasing.

    Recursion on the paired sequence: remove the first entry, subtract one
    from the next p[0] - 1 entries, re-sort with provenance, realize, and
    map the block back before attaching the new pair's edges.  The new pair
    contributes the diagonal bit (its own cross edge) plus one bit for each
    decremented entry.
    """
    n = len(p)
    if n == 0:
        return []
    p1 = p[0]
    if p1 == 0:
        return [0] * n
    rest = list(p[1:])
    if p1 - 1 > len(rest):
        raise InternalContradiction(f"first degree {p1} exceeds available pairs")
    for j in range(p1 - 1):
        rest[j] -= 1
        if rest[j] < 0:
            raise InternalContradiction("reduction produced a negative degree")
    order = sorted(range(n - 1), key=lambda j: (-rest[j], j))
    sorted_rest = tuple(rest[j] for j in order)
    if not gale_ryser_check(sorted_rest, sorted_rest):
        raise InternalContradiction(
            f"reduced sequence {sorted_rest} is not bigraphic"
        )
    sub = _mirror_rows(sorted_rest)
    pos = [0] * (n - 1)
    for r, j in enumerate(order):
        pos[j] = r
    rows = [0] * n
    rows[0] = 1  # the new pair's own cross edge
    for j in range(p1 - 1):
        rows[0] |= 1 << (j + 1)
        rows[j + 1] |= 1
    for j in range(n - 1):
        block = sub[pos[j]]
        for k in range(n - 1):
            if (block >> pos[k]) & 1:
                rows[j + 1] |= 1 << (k + 1)
    return rows


def mirror_realize(p: DegreeSequence | Iterable[int]) -> MirrorRealization:
    """Mirror realization of the paired sequence (p, p).

    The construction keeps the matrix symmetric throughout, so the pairing
    is the identity and row i has degree p[i] exactly.
    """
    p = _as_sequence(p)
    if not gale_ryser_check(p, p):
        raise NotBigraphic(f"({p.values}, {p.values}) is not bigraphic")
    rows = _mirror_rows(p.values)
    n = len(p)
    graph = BipartiteGraph(n, n, tuple(rows))
    if graph.row_degree_list() != list(p.values):
        raise InternalContradiction("realized degrees do not match the request")
    return MirrorRealization(graph, MirrorPairing.identity(n), tuple(range(n)))


def loop_check(p: DegreeSequence | Iterable[int]) -> bool:
    """True iff p is the degree sequence of some graph with loops allowed,
    at most one per vertex and each loop counting one."""
    p = _as_sequence(p)
    return gale_ryser_check(p, p)


def loop_realize(p: DegreeSequence | Iterable[int]) -> LGraph:
    """Realize p as a loop graph by folding a mirror realization."""
    from .transform import fold_to_lgraph

    p = _as_sequence(p)
    if not loop_check(p):
        raise NotLoopGraphic(f"{p.values} has no loop-graph realization")
    return fold_to_lgraph(mirror_realize(p))


def staircase(n: int) -> MirrorRealization:
    """The unique mirror graph with degrees (n, n-1, ..., 1) on each side.

    Row i is adjacent to columns 0..n-1-i; the matrix is symmetric, so the
    identity pairing verifies.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    rows = tuple(((1 << (n - i)) - 1) for i in range(n))
    graph = BipartiteGraph(n, n, rows)
    return MirrorRealization(graph, MirrorPairing.identity(n), tuple(range(n)))
