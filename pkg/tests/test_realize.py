"""Degree-sequence checks and the constructive realizers."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import flow_bigraphic, lgraph_degree_multisets, nonincreasing_sequences
from mirrorgraphs import (
    BipartiteGraph,
    DegreeSequence,
    MirrorPairing,
    MirrorRealization,
    NotBigraphic,
    NotLoopGraphic,
    gale_ryser_check,
    hh_check,
    left_degrees,
    lgraph_degrees,
    loop_check,
    loop_realize,
    mirror_realize,
    realize_bigraphic,
    right_degrees,
    staircase,
    verify_pairing,
)

sequences = st.lists(st.integers(0, 5), min_size=0, max_size=5).map(
    lambda v: DegreeSequence.from_values(v)
)


class TestBigraphicChecks:
    @pytest.mark.parametrize(
        "p,q,want",
        [
            ((1,), (1,), True),
            ((2, 2), (1, 1), False),
            ((3, 3), (2, 2, 2), True),
            ((2, 1), (2, 1), True),
            ((3, 1), (2, 2), False),
            ((4, 3, 2, 1), (4, 3, 2, 1), True),
            ((0, 0), (0, 0), True),
            ((), (), True),
            ((2,), (1, 1), True),
            ((1,), (), False),
        ],
    )
    def test_known_verdicts(self, p, q, want):
        assert gale_ryser_check(p, q) is want
        assert hh_check(p, q) is want
        assert hh_check(p, q, alternate=True) is want

    def test_agrees_with_flow_oracle(self):
        # exhaustive over every ordered pair of short sequences
        pool = list(nonincreasing_sequences(3, 3)) + [()]
        for p in pool:
            for q in pool:
                want = flow_bigraphic(p, q)
                assert gale_ryser_check(p, q) == want, (p, q)
                assert hh_check(p, q) == want, (p, q)

    @settings(max_examples=150, deadline=None)
    @given(sequences, sequences)
    def test_reductions_agree(self, p, q):
        v = gale_ryser_check(p, q)
        assert hh_check(p, q) == v
        assert hh_check(p, q, alternate=True) == v
        assert gale_ryser_check(q, p) == v  # the relation is symmetric


class TestRealizeBigraphic:
    def test_unique_2x2(self):
        g = realize_bigraphic((2, 1), (2, 1))
        assert g.edges() == [(0, 0), (0, 1), (1, 0)]

    def test_zero_sequence(self):
        g = realize_bigraphic((0,), (0,))
        assert g.edge_count() == 0 and (g.n1, g.n2) == (1, 1)

    def test_raises_when_infeasible(self):
        with pytest.raises(NotBigraphic):
            realize_bigraphic((3, 1), (2, 2))

    def test_degrees_match_on_feasible_pairs(self):
        for p in nonincreasing_sequences(4, 4):
            for q in nonincreasing_sequences(4, 4):
                if not gale_ryser_check(p, q):
                    continue
                g = realize_bigraphic(p, q)
                assert left_degrees(g).values == p
                assert right_degrees(g).values == q


class TestMirrorRealize:
    def test_single_edge(self):
        m = mirror_realize((1,))
        assert m.graph.rows == (1,)
        assert m.pairing.pairing == (0,)

    def test_zero_sequence(self):
        m = mirror_realize((0, 0, 0))
        assert m.graph.edge_count() == 0
        assert m.graph.n1 == 3

    def test_complete_2(self):
        m = mirror_realize((2, 2))
        assert m.graph.rows == (3, 3)
        assert m.pairing.pairing == (0, 1)

    def test_not_bigraphic(self):
        with pytest.raises(NotBigraphic):
            mirror_realize((3, 1))

    def test_sweep_small_sequences(self):
        hits = 0
        for p in nonincreasing_sequences(5, 5):
            if not gale_ryser_check(p, p):
                continue
            hits += 1
            m = mirror_realize(p)
            assert verify_pairing(m.graph, m.pairing)
            assert left_degrees(m.graph).values == p
            assert right_degrees(m.graph).values == p
            assert m.graph.row_degree_list() == list(p)  # rows stay sorted
        assert hits > 100


class TestLoopSequences:
    @pytest.mark.parametrize(
        "p,want", [((1,), True), ((2, 1, 1), True), ((3, 1), False)]
    )
    def test_loop_check_known(self, p, want):
        assert loop_check(p) is want

    def test_loop_check_matches_enumeration(self):
        # compare against the set of degree multisets of every loop graph
        for n in range(1, 5):
            table = lgraph_degree_multisets(n)
            for p in itertools.combinations_with_replacement(
                range(n, -1, -1), n
            ):
                assert loop_check(p) == (p in table), p

    def test_loop_realize_known(self):
        assert loop_realize((1,)).edges() == [(0, 0)]
        assert loop_realize((2, 1, 1)).edges() == [(0, 0), (0, 1), (2, 2)]
        assert loop_realize((2, 2)).edges() == [(0, 0), (0, 1), (1, 1)]

    def test_loop_realize_degrees(self):
        for p in nonincreasing_sequences(5, 5):
            if not loop_check(p):
                continue
            h = loop_realize(p)
            assert h.degree_list() == list(p)

    def test_loop_realize_raises(self):
        with pytest.raises(NotLoopGraphic):
            loop_realize((3, 1))


class TestStaircase:
    def test_order_zero(self):
        m = staircase(0)
        assert m.graph.n1 == 0

    def test_single(self):
        assert staircase(1).graph.rows == (1,)

    def test_two(self):
        assert staircase(2).graph.edges() == [(0, 0), (0, 1), (1, 0)]

    def test_four_matrix(self):
        m = staircase(4)
        assert m.graph.rows == (15, 7, 3, 1)
        assert m.pairing.pairing == (0, 1, 2, 3)
        assert verify_pairing(m.graph, m.pairing)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            staircase(-1)

    def test_degrees_and_feasibility(self):
        for n in range(1, 9):
            m = staircase(n)
            want = tuple(range(n, 0, -1))
            assert left_degrees(m.graph).values == want
            assert right_degrees(m.graph).values == want
            assert hh_check(want, want)


class TestMirrorRealizationType:
    def test_rejects_bad_pairing(self):
        g = BipartiteGraph.from_edges(2, 2, [(0, 1)])
        with pytest.raises(ValueError, match="symmetric"):
            MirrorRealization(g, MirrorPairing.identity(2), (0, 1))

    def test_rejects_bad_left_order(self):
        g = staircase(3).graph
        with pytest.raises(ValueError, match="left_order"):
            MirrorRealization(g, MirrorPairing.identity(3), (2, 1, 0))
        with pytest.raises(ValueError, match="permutation"):
            MirrorRealization(g, MirrorPairing.identity(3), (0, 0, 1))

    def test_build_sorts_rows(self):
        # rows out of degree order: build must find the sorting permutation
        g = BipartiteGraph(2, 2, (2, 3))
        m = MirrorRealization.build(g, MirrorPairing.identity(2))
        assert m.left_order == (1, 0)
        assert m.degrees().values == (2, 1)
