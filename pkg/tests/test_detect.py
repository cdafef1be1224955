"""Mirror detection: fast certificates and the exact pairing search."""

import random

import pytest

from conftest import (
    brute_pairing,
    cycle_graph,
    disjoint_union,
    shuffle_graph,
)
from mirrorgraphs import (
    BipartiteGraph,
    LGraph,
    TwinSignature,
    bipartite_complement,
    find_mirror_pairing,
    is_mirror,
    kronecker_k2,
    staircase,
    twin_signature,
    verify_pairing,
)

# 3-regular on 6+6 with a twin pair on one side only; the smallest kind of
# balanced regular graph that admits no pairing
NON_MIRROR_EDGES = [
    (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 1), (2, 2), (2, 5),
    (3, 0), (3, 2), (3, 4), (4, 0), (4, 1), (4, 3), (5, 0), (5, 1), (5, 2),
]


def non_mirror_cubic() -> BipartiteGraph:
    return BipartiteGraph.from_edges(6, 6, NON_MIRROR_EDGES)


class TestTwinSignature:
    def test_complete_3_3(self):
        sr, sc = twin_signature(BipartiteGraph(3, 3, (7, 7, 7)))
        assert sr == sc == TwinSignature(((3, 3),))

    def test_staircase_3(self):
        sr, sc = twin_signature(staircase(3).graph)
        assert sr == sc == TwinSignature(((3, 1), (2, 1), (1, 1)))

    def test_twin_asymmetric_witness(self):
        sr, sc = twin_signature(non_mirror_cubic())
        assert sr == TwinSignature(((3, 2), (3, 1), (3, 1), (3, 1), (3, 1)))
        assert sc == TwinSignature(((3, 1),) * 6)
        assert sr != sc


class TestFindMirrorPairing:
    def test_complete_2_2(self):
        p = find_mirror_pairing(BipartiteGraph(2, 2, (3, 3)))
        assert p.pairing == (0, 1)

    def test_staircase_4(self):
        g = staircase(4).graph
        p = find_mirror_pairing(g)
        assert p is not None and verify_pairing(g, p)

    def test_unbalanced_refused(self):
        assert find_mirror_pairing(BipartiteGraph(1, 2, (0,))) is None

    def test_degree_mismatch_refused(self):
        g = BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1)])
        assert find_mirror_pairing(g) is None

    def test_twin_asymmetric_witness_refused(self):
        assert find_mirror_pairing(non_mirror_cubic()) is None

    def test_exhaustive_n2_n3(self):
        for n in (1, 2, 3):
            for bits in range(1 << (n * n)):
                mask = (1 << n) - 1
                rows = tuple((bits >> (n * i)) & mask for i in range(n))
                g = BipartiteGraph(n, n, rows)
                got = find_mirror_pairing(g)
                want = brute_pairing(g)
                assert (got is None) == (want is None), rows
                if got is not None:
                    assert verify_pairing(g, got)

    def test_exhaustive_n4(self):
        # every 4x4 biadjacency matrix against the 24-permutation oracle
        disagreements = 0
        for bits in range(1 << 16):
            rows = tuple((bits >> (4 * i)) & 15 for i in range(4))
            g = BipartiteGraph(4, 4, rows)
            got = find_mirror_pairing(g)
            if (got is None) != (brute_pairing(g) is None):
                disagreements += 1
            if got is not None and not verify_pairing(g, got):
                disagreements += 1
        assert disagreements == 0

    def test_finds_pairing_after_shuffle(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randrange(1, 6)
            h = LGraph.from_edges(
                n,
                [
                    (i, j)
                    for i in range(n)
                    for j in range(i, n)
                    if rng.random() < 0.5
                ],
            )
            shuffled, _, _ = shuffle_graph(kronecker_k2(h).graph, rng)
            p = find_mirror_pairing(shuffled)
            assert p is not None and verify_pairing(shuffled, p)


class TestIsMirror:
    def test_unbalanced(self):
        assert not is_mirror(BipartiteGraph(1, 2, (3,)))

    def test_even_cycles(self):
        for m in range(2, 9):
            assert is_mirror(cycle_graph(m))

    def test_cycle_unions(self):
        g = disjoint_union(cycle_graph(2), cycle_graph(3))
        assert is_mirror(g)

    def test_complete_minus_matching(self):
        g = bipartite_complement(
            BipartiteGraph.from_edges(3, 3, [(i, i) for i in range(3)])
        )
        assert g.row_degree_list() == [2, 2, 2]
        assert is_mirror(g)

    def test_twin_witness(self):
        assert not is_mirror(non_mirror_cubic())
