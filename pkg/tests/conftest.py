"""Shared brute-force oracles and builders.

Everything here is deliberately independent of the library's own
algorithms: existence via max flow, realizability via exhaustive or
backtracking search over raw matrices, pairings via trying all n!
permutations.  Slow and dumb on purpose.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from mirrorgraphs import (
    BipartiteGraph,
    LGraph,
    MirrorPairing,
    MirrorRealization,
    kronecker_k2,
)


def flow_bigraphic(p, q) -> bool:
    """(p, q) is bigraphic iff the unit-capacity transport network between
    the two sides carries all of sum(p)."""
    p, q = list(p), list(q)
    if sum(p) != sum(q):
        return False
    if sum(p) == 0:
        return True
    g = nx.DiGraph()
    for i, d in enumerate(p):
        g.add_edge("s", ("L", i), capacity=d)
        for j in range(len(q)):
            g.add_edge(("L", i), ("R", j), capacity=1)
    for j, d in enumerate(q):
        g.add_edge(("R", j), "t", capacity=d)
    value, _ = nx.maximum_flow(g, "s", "t")
    return value == sum(p)


def iter_lgraphs(n: int):
    """Every loop graph on n vertices, one per assignment of the n(n+1)/2
    upper-triangle bits."""
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    for bits in range(1 << len(slots)):
        rows = [0] * n
        for b, (i, j) in enumerate(slots):
            if (bits >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield LGraph(n, tuple(rows))


def lgraph_degree_multisets(n: int) -> set[tuple[int, ...]]:
    """All degree multisets (sorted non-increasing) of loop graphs on n
    vertices."""
    return {
        tuple(sorted(h.degree_list(), reverse=True)) for h in iter_lgraphs(n)
    }


def lgraph_exists_search(p) -> bool:
    """Targeted existence search for one loop graph with degrees p, used
    where full enumeration is too big.  p non-increasing."""
    p = list(p)
    n = len(p)
    rem = list(p)

    def dfs(v: int) -> bool:
        if v == n:
            return True
        need = rem[v]
        later = [w for w in range(v + 1, n) if rem[w] > 0]
        for loop in (1, 0):
            k = need - loop
            if k < 0 or k > len(later):
                continue
            for combo in itertools.combinations(later, k):
                for w in combo:
                    rem[w] -= 1
                rem[v] = 0
                # a later vertex can still gain at most one edge per
                # remaining vertex plus its own loop
                if all(rem[w] <= n - v - 1 for w in range(v + 1, n)) and dfs(v + 1):
                    rem[v] = need
                    for w in combo:
                        rem[w] += 1
                    return True
                rem[v] = need
                for w in combo:
                    rem[w] += 1
        return False

    return dfs(0)


def brute_isomorphic(
    g1: BipartiteGraph, g2: BipartiteGraph, allow_side_swap: bool = False
) -> bool:
    """Isomorphism by trying every row and column permutation."""

    def fixed_sides(a: BipartiteGraph, b: BipartiteGraph) -> bool:
        if (a.n1, a.n2) != (b.n1, b.n2):
            return False
        for rp in itertools.permutations(range(a.n1)):
            for cp in itertools.permutations(range(a.n2)):
                if all(
                    ((a.rows[rp[i]] >> cp[j]) & 1) == ((b.rows[i] >> j) & 1)
                    for i in range(a.n1)
                    for j in range(a.n2)
                ):
                    return True
        return False

    if fixed_sides(g1, g2):
        return True
    return allow_side_swap and fixed_sides(g1.transpose(), g2)


def brute_pairing(g: BipartiteGraph):
    """First mirror pairing found by trying every permutation, or None."""
    if g.n1 != g.n2:
        return None
    n = g.n1
    rows = g.rows
    for pi in itertools.permutations(range(n)):
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> pi[j]) & 1 != (rows[j] >> pi[i]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return MirrorPairing(pi)
    return None


def shuffle_graph(g: BipartiteGraph, rng: random.Random):
    """Relabel rows and columns at random; returns (graph, sigma, tau)
    where new row i is old row sigma[i] and new column j is old tau[j]."""
    sigma = list(range(g.n1))
    tau = list(range(g.n2))
    rng.shuffle(sigma)
    rng.shuffle(tau)
    rows = []
    for i in range(g.n1):
        old = g.rows[sigma[i]]
        r = 0
        for j in range(g.n2):
            if (old >> tau[j]) & 1:
                r |= 1 << j
        rows.append(r)
    return BipartiteGraph(g.n1, g.n2, tuple(rows)), sigma, tau


def transport_pairing(pi, sigma, tau) -> MirrorPairing:
    """The pairing matching shuffle_graph's relabeling."""
    tau_inv = {c: j for j, c in enumerate(tau)}
    return MirrorPairing(tuple(tau_inv[pi[sigma[i]]] for i in range(len(sigma))))


def random_mirror_realization(rng: random.Random, max_n: int = 5) -> MirrorRealization:
    """kron of a random loop graph, relabeled so the pairing is nontrivial."""
    n = rng.randrange(1, max_n + 1)
    h = LGraph.from_edges(
        n,
        [(i, j) for i in range(n) for j in range(i, n) if rng.random() < 0.5],
    )
    m = kronecker_k2(h)
    shuffled, sigma, tau = shuffle_graph(m.graph, rng)
    moved = transport_pairing(m.pairing.pairing, sigma, tau)
    return MirrorRealization.build(shuffled, moved)


def cycle_graph(m: int) -> BipartiteGraph:
    """C_{2m} with rows v_0, v_2, ... and columns v_1, v_3, ...; row i is
    adjacent to columns i and i-1 (mod m)."""
    assert m >= 2
    rows = [(1 << i) | (1 << ((i - 1) % m)) for i in range(m)]
    return BipartiteGraph(m, m, tuple(rows))


def disjoint_union(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    rows = list(g1.rows) + [r << g1.n2 for r in g2.rows]
    return BipartiteGraph(g1.n1 + g2.n1, g1.n2 + g2.n2, tuple(rows))


def nonincreasing_sequences(max_len: int, max_entry: int):
    """All non-increasing tuples with 1..max_len entries in 0..max_entry."""
    for n in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(
            range(max_entry, -1, -1), n
        ):
            yield combo
