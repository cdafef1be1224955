"""Moves between loop graphs and mirror bipartite graphs.

A loop graph H and the mirror realization H x K2 carry the same matrix:
the biadjacency of the product is H's adjacency, and folding a mirror
realization back reads the symmetric matrix as a loop graph (diagonal
entries become loops).
"""

from __future__ import annotations

from .core import BipartiteGraph, LGraph, MirrorPairing, verify_pairing
from .errors import InvalidPairing
from .realize import MirrorRealization

__all__ = [
    "kronecker_k2",
    "fold_to_lgraph",
    "bipartite_complement",
    "complement_pairing",
]


def kronecker_k2(h: LGraph) -> MirrorRealization:
    """The tensor product of h with a single edge.

    Vertex i on the left is paired with its copy on the right, and the
    biadjacency equals h's adjacency matrix, loops landing on the diagonal.
    """
    graph = BipartiteGraph(h.n, h.n, h.rows)
    return MirrorRealization.build(graph, MirrorPairing.identity(h.n))


def fold_to_lgraph(m: MirrorRealization) -> LGraph:
    """Inverse of the product: column-permute by the pairing and read the
    symmetric matrix as a loop graph."""
    if not verify_pairing(m.graph, m.pairing):
        raise InvalidPairing("realization's pairing does not verify")
    pi = m.pairing.pairing
    rows = []
    for r in m.graph.rows:
        folded = 0
        for j, col in enumerate(pi):
            if (r >> col) & 1:
                folded |= 1 << j
        rows.append(folded)
    return LGraph(m.graph.n1, tuple(rows))


def bipartite_complement(g: BipartiteGraph) -> BipartiteGraph:
    mask = (1 << g.n2) - 1
    return BipartiteGraph(g.n1, g.n2, tuple(r ^ mask for r in g.rows))


def complement_pairing(m: MirrorRealization) -> MirrorRealization:
    """Complement the graph; the very same pairing still verifies."""
    return MirrorRealization.build(bipartite_complement(m.graph), m.pairing)
