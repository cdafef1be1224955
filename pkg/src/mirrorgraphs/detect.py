"""Deciding whether a balanced bipartite graph admits a mirror pairing.

Cheap certificates go first: both sides must carry the same degree
sequence, and twins (vertices with identical neighborhoods) must match up
class by class, because a pairing maps twin classes onto twin classes of
the same size and degree.  What survives goes to an exact backtracking
search over candidate pairings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BipartiteGraph, MirrorPairing, left_degrees, right_degrees

__all__ = ["TwinSignature", "twin_signature", "find_mirror_pairing", "is_mirror"]


@dataclass(frozen=True)
class TwinSignature:
    """Multiset of (degree, twin class size), sorted descending."""

    classes: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))


def _signature(vectors: list[int]) -> TwinSignature:
    groups: dict[int, int] = {}
    for v in vectors:
        groups[v] = groups.get(v, 0) + 1
    classes = sorted(
        ((v.bit_count(), size) for v, size in groups.items()), reverse=True
    )
    return TwinSignature(tuple(classes))


def twin_signature(g: BipartiteGraph) -> tuple[TwinSignature, TwinSignature]:
    """Signatures of the row side and the column side."""
    return _signature(list(g.rows)), _signature(g.column_list())


def find_mirror_pairing(g: BipartiteGraph) -> MirrorPairing | None:
    """Exact search for a pairing, or None.

    Rows are processed in order of decreasing degree and candidate columns
    in increasing index, so the result is deterministic.  A column is a
    candidate for a row only if degree and twin class size agree, and each
    assignment is checked for symmetry against all earlier ones.
    """
    if g.n1 != g.n2:
        return None
    n = g.n1
    rows = list(g.rows)
    cols = g.column_list()
    rdeg = [r.bit_count() for r in rows]
    cdeg = [c.bit_count() for c in cols]
    if sorted(rdeg) != sorted(cdeg):
        return None

    def class_sizes(vectors: list[int]) -> list[int]:
        counts: dict[int, int] = {}
        for v in vectors:
            counts[v] = counts.get(v, 0) + 1
        return [counts[v] for v in vectors]

    rtwin = class_sizes(rows)
    ctwin = class_sizes(cols)
    sig_r, sig_c = twin_signature(g)
    if sig_r != sig_c:
        return None

    order = sorted(range(n), key=lambda i: (-rdeg[i], i))
    candidates = [
        [c for c in range(n) if cdeg[c] == rdeg[i] and ctwin[c] == rtwin[i]]
        for i in range(n)
    ]
    pi = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        ri = rows[i]
        for c in candidates[i]:
            if used[c]:
                continue
            ok = True
            for t in range(k):
                j = order[t]
                if (ri >> pi[j]) & 1 != (rows[j] >> c) & 1:
                    ok = False
                    break
            if not ok:
                continue
            pi[i] = c
            used[c] = True
            if place(k + 1):
                return True
            used[c] = False
            pi[i] = -1
        return False

    if place(0):
        return MirrorPairing(tuple(pi))
    return None


def is_mirror(g: BipartiteGraph) -> bool:
    """True iff some pairing makes the biadjacency symmetric."""
    if g.n1 != g.n2:
        return False
    if left_degrees(g) != right_degrees(g):
        return False
    sig_r, sig_c = twin_signature(g)
    if sig_r != sig_c:
        return False
    return find_mirror_pairing(g) is not None
