"""Exhaustive, isomorph-free enumeration of bipartite realizations.

Desk-scale machinery: backtracking over biadjacency matrices row by row
under degree constraints, emitting only matrices that are minimal in their
orbit under row and column permutations preserving degree classes (checked
exactly; affordable because everything here has at most 6 vertices per
side).  On top of that sit the Bipp/Mirr report and the regular survey.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import BipartiteGraph, DegreeSequence, MirrorPairing
from .detect import find_mirror_pairing
from .errors import BudgetExceeded, NotBigraphic
from .realize import gale_ryser_check

__all__ = [
    "DEFAULT_BUDGET",
    "Witness",
    "RealizationReport",
    "enumerate_realizations",
    "bipp_mirr_report",
    "regular_survey",
]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Witness:
    graph: BipartiteGraph
    mirror: bool
    pairing: MirrorPairing | None


@dataclass(frozen=True)
class RealizationReport:
    """Isomorphism classes realizing (P,P) and how many of them are mirror."""

    sequence: DegreeSequence
    bipp_count: int
    mirr_count: int
    witnesses: tuple[Witness, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "witnesses", tuple(self.witnesses))
        if not 0 <= self.mirr_count <= self.bipp_count:
            raise ValueError("mirror count out of range")


def _as_sequence(p: DegreeSequence | Iterable[int]) -> DegreeSequence:
    if isinstance(p, DegreeSequence):
        return p
    return DegreeSequence(tuple(p))


def _revkey(row: int, width: int) -> int:
    """Bit-reverse a row so integer order is row-major lexicographic order
    with column 0 most significant."""
    out = 0
    for j in range(width):
        if (row >> j) & 1:
            out |= 1 << (width - 1 - j)
    return out


def _classes(values: tuple[int, ...]) -> list[tuple[int, int]]:
    """Contiguous (start, end) runs of equal entries in a sorted tuple."""
    runs = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] != values[start]:
            runs.append((start, i))
            start = i
    return runs


def _class_perms(classes: list[tuple[int, int]], n: int):
    """All permutations of 0..n-1 preserving each class block."""
    pools = [itertools.permutations(range(a, b)) for a, b in classes]
    for parts in itertools.product(*pools):
        perm = [0] * n
        i = 0
        for part in parts:
            for v in part:
                perm[i] = v
                i += 1
        yield tuple(perm)


def _min_key(
    rows: list[int],
    row_classes: list[tuple[int, int]],
    col_classes: list[tuple[int, int]],
    n2: int,
) -> tuple[int, ...]:
    """Minimal key tuple over class-preserving column permutations, with
    rows sorted within their degree classes for each choice of columns."""
    best: tuple[int, ...] | None = None
    for perm in _class_perms(col_classes, n2):
        keys = []
        for r in rows:
            k = 0
            for jnew in range(n2):
                if (r >> perm[jnew]) & 1:
                    k |= 1 << (n2 - 1 - jnew)
            keys.append(k)
        for a, b in row_classes:
            keys[a:b] = sorted(keys[a:b])
        t = tuple(keys)
        if best is None or t < best:
            best = t
    assert best is not None
    return best


def enumerate_realizations(
    p: DegreeSequence | Iterable[int],
    q: DegreeSequence | Iterable[int],
    allow_side_swap: bool | None = None,
    budget: int | None = None,
) -> list[BipartiteGraph]:
    """One representative per isomorphism class realizing (p, q).

    Intended for sides of at most 6 vertices.  Raises BudgetExceeded when
    the backtracking tree outgrows the node budget.
    """
    p = _as_sequence(p)
    q = _as_sequence(q)
    if allow_side_swap is None:
        allow_side_swap = p == q
    if budget is None:
        budget = DEFAULT_BUDGET
    if not gale_ryser_check(p, q):
        return []
    n1, n2 = len(p), len(q)
    row_classes = _classes(p.values)
    col_classes = _classes(q.values)
    swap = allow_side_swap and p == q

    columns = list(range(n2))
    caps = list(q.values)
    rows: list[int] = []
    keys: list[int] = []
    found: list[tuple[tuple[int, ...], BipartiteGraph]] = []
    nodes = 0

    def feasible_rest(i: int) -> bool:
        rest = p.values[i:]
        remaining = DegreeSequence.from_values(caps)
        return gale_ryser_check(DegreeSequence(rest), remaining)

    def emit() -> None:
        mat = list(rows)
        self_key = tuple(keys)
        best = _min_key(mat, row_classes, col_classes, n2)
        if swap:
            cols = BipartiteGraph(n1, n2, tuple(mat)).column_list()
            tbest = _min_key(cols, col_classes, row_classes, n1)
            if tbest < best:
                best = tbest
        if self_key == best:
            found.append((self_key, BipartiteGraph(n1, n2, tuple(mat))))

    def place(i: int) -> None:
        nonlocal nodes
        if i == n1:
            if all(c == 0 for c in caps):
                emit()
            return
        d = p[i]
        open_cols = [j for j in columns if caps[j] > 0]
        if len(open_cols) < d:
            return
        floor_key = keys[i - 1] if i > 0 and p[i - 1] == d else -1
        for combo in itertools.combinations(open_cols, d):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} nodes")
            r = 0
            for j in combo:
                r |= 1 << j
            k = _revkey(r, n2)
            if k < floor_key:
                continue
            for j in combo:
                caps[j] -= 1
            rows.append(r)
            keys.append(k)
            if feasible_rest(i + 1):
                place(i + 1)
            rows.pop()
            keys.pop()
            for j in combo:
                caps[j] += 1

    place(0)
    found.sort(key=lambda t: t[0])
    return [g for _, g in found]


def bipp_mirr_report(
    p: DegreeSequence | Iterable[int], budget: int | None = None
) -> RealizationReport:
    """Count isomorphism classes realizing (p, p) and their mirror subset.

    Exploration tool for the open question of when the two counts agree;
    it reports numbers and witnesses, nothing more.
    """
    p = _as_sequence(p)
    if not gale_ryser_check(p, p):
        raise NotBigraphic(f"({p.values}, {p.values}) is not bigraphic")
    classes = enumerate_realizations(p, p, allow_side_swap=True, budget=budget)
    witnesses = []
    for g in classes:
        pairing = find_mirror_pairing(g)
        witnesses.append(Witness(g, pairing is not None, pairing))
    mirr = sum(1 for w in witnesses if w.mirror)
    return RealizationReport(p, len(classes), mirr, tuple(witnesses))


def regular_survey(
    n: int, r: int, budget: int | None = None
) -> list[tuple[BipartiteGraph, bool]]:
    """All classes of r-regular balanced bipartite graphs on n + n vertices,
    each with its mirror verdict."""
    if not 0 <= r <= n:
        raise ValueError(f"regularity {r} out of range for side size {n}")
    seq = DegreeSequence((r,) * n)
    classes = enumerate_realizations(seq, seq, allow_side_swap=True, budget=budget)
    return [(g, find_mirror_pairing(g) is not None) for g in classes]
