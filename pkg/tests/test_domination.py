"""Validators, exact solvers, and the sequence-length properties."""

from itertools import combinations, permutations

import pytest

from totaldom import _pykernels
from totaldom.bitset import bits, vset
from totaldom.domination import (
    domination_report,
    even_length_tds,
    exists_tds_of_length,
    extend_to_total_dominating_sequence,
    grundy_total_domination_number,
    is_dominating_set,
    is_legal_sequence,
    is_total_dominating_sequence,
    is_total_dominating_set,
    open_uniformity_lengths,
    total_domination_number,
)
from totaldom.errors import (
    BruteForceLimitError,
    DuplicateVertexError,
    IllegalPrefixError,
    IsolatedVertexError,
    MemoLimitError,
    TimeLimitError,
    VertexIndexError,
)
from totaldom.families import (
    complete_graph,
    crown,
    cycle,
    line_of_complete,
    path,
    star,
)
from totaldom.graph import Graph
from totaldom.kernels import HAVE_COMPILED, kernel_for
from totaldom.oracles import brute_gamma_t, brute_grundy
from totaldom.sweeps import random_graphs_no_isolated, uniformity_table


class TestSetValidators:
    def test_k2(self):
        g = complete_graph(2)
        assert is_total_dominating_set(g, vset([0, 1]))
        assert not is_total_dominating_set(g, vset([0]))

    def test_crown3_pairs(self):
        g = crown(3)
        for members in combinations(range(6), 4):
            mask = vset(members)
            covered = 0
            for v in members:
                covered |= g.adj[v]
            assert is_total_dominating_set(g, mask) == (covered == g.full_mask)

    def test_dominating_vs_total(self):
        g = star(3)
        assert is_dominating_set(g, vset([0]))
        assert not is_total_dominating_set(g, vset([0]))

    def test_empty_graph_rejected(self):
        with pytest.raises(IsolatedVertexError):
            is_total_dominating_set(Graph(0), 0)


class TestSequenceValidators:
    def test_path3(self):
        g = path(3)
        assert is_legal_sequence(g, (0, 1))
        assert is_total_dominating_sequence(g, (0, 1))

    def test_star_rejects_second_leaf(self):
        g = star(3)
        assert not is_legal_sequence(g, (0, 1, 2))

    def test_lk9_length7(self):
        lk9, labels = line_of_complete(9)
        index = {pair: i for i, pair in enumerate(labels)}
        seq = [index[(a, 8)] for a in range(7)]
        assert is_total_dominating_sequence(lk9, seq)

    def test_duplicate_raises(self):
        with pytest.raises(DuplicateVertexError):
            is_legal_sequence(path(3), (0, 0))

    def test_out_of_range_raises(self):
        with pytest.raises(VertexIndexError):
            is_legal_sequence(path(3), (0, 5))

    def test_lonely_vertex_sequence_is_legal(self):
        g = Graph(2, [])
        assert is_legal_sequence(g, (0,))
        assert is_legal_sequence(g, ())


class TestSolvers:
    def test_complete_graphs(self):
        for n in range(2, 7):
            value, witness = total_domination_number(complete_graph(n))
            assert value == 2 and witness == 0b11

    def test_crown3(self):
        assert total_domination_number(crown(3))[0] == 4

    def test_lk6(self):
        lk6, _ = line_of_complete(6)
        assert total_domination_number(lk6)[0] == 4
        assert grundy_total_domination_number(lk6)[0] == 4

    def test_p4_grundy(self):
        value, witness = grundy_total_domination_number(path(4))
        assert value == 4
        assert is_total_dominating_sequence(path(4), witness)

    def test_rejects_isolated(self):
        with pytest.raises(IsolatedVertexError):
            total_domination_number(Graph(3, [(0, 1)]))
        with pytest.raises(IsolatedVertexError):
            grundy_total_domination_number(Graph(1))

    def test_witness_is_lex_least(self):
        # Against direct lexicographic enumeration of minimum-size sets.
        for rec in uniformity_table(5)[::7]:
            g = rec.graph()
            value, witness = total_domination_number(g)
            best = next(
                vset(s)
                for s in combinations(range(g.n), value)
                if is_total_dominating_set(g, vset(s))
            )
            assert witness == best

    def test_report_witnesses_verify(self):
        for g in random_graphs_no_isolated(25, (6, 7, 8), (0.4, 0.6), seed=2718):
            report = domination_report(g)
            assert report.gamma_t <= report.grundy
            assert report.gamma_t_witness.bit_count() == report.gamma_t
            assert is_total_dominating_set(g, report.gamma_t_witness)
            assert len(report.grundy_witness) == report.grundy
            assert is_total_dominating_sequence(g, report.grundy_witness)

    def test_min_set_permutations_are_sequences(self):
        # Any ordering of a minimum total dominating set stays legal.
        for rec in uniformity_table(5)[::5]:
            g = rec.graph()
            _, witness = total_domination_number(g)
            for perm in permutations(bits(witness)):
                assert is_total_dominating_sequence(g, perm)


class TestBackendParity:
    @pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
    def test_same_values_and_witnesses(self):
        from totaldom import _kernels

        for g in random_graphs_no_isolated(40, (5, 6, 7, 8, 9), (0.3, 0.5, 0.7), seed=11):
            pure_g = _pykernels.grundy(g.adj, 1 << 20, None)
            fast_g = _kernels.grundy(g.adj, 1 << 20, None)
            assert pure_g[0] == fast_g[0] and list(pure_g[1]) == list(fast_g[1])
            pure_t = _pykernels.gamma_t(g.adj, None)
            fast_t = _kernels.gamma_t(g.adj, None)
            assert pure_t == tuple(fast_t)
            for length in range(1, g.n + 1):
                a = _pykernels.tds_of_length(g.adj, length, 1 << 20, None)
                b = _kernels.tds_of_length(g.adj, length, 1 << 20, None)
                assert (a is None) == (b is None)
                if a is not None:
                    assert list(a) == list(b)

    def test_pure_backend_selected_for_wide_graphs(self):
        assert kernel_for(65) is _pykernels

    def test_memo_free_oracle_matches_memoized(self):
        # The brute oracle enumerates without the footprint memo; 200 graphs.
        for g in random_graphs_no_isolated(200, (7, 8, 9, 10), (0.4, 0.55, 0.7), seed=31):
            assert grundy_total_domination_number(g)[0] == brute_grundy(g)


class TestExtension:
    def test_c6_prefix(self):
        g = cycle(6)
        seq = extend_to_total_dominating_sequence(g, (0,))
        assert seq[0] == 0 and is_total_dominating_sequence(g, seq)

    def test_fixed_point(self):
        g = path(3)
        assert extend_to_total_dominating_sequence(g, (0, 1)) == (0, 1)

    def test_empty_prefix_k2(self):
        assert extend_to_total_dominating_sequence(complete_graph(2)) == (0, 1)

    def test_illegal_prefix_raises(self):
        with pytest.raises(IllegalPrefixError):
            extend_to_total_dominating_sequence(star(3), (0, 1, 2))

    def test_maximality_implies_domination(self):
        # Greedy extensions from every start are maximal; all must dominate.
        for rec in uniformity_table(5):
            g = rec.graph()
            for v in range(g.n):
                seq = extend_to_total_dominating_sequence(g, (v,))
                assert is_total_dominating_sequence(g, seq)


class TestExactLength:
    def test_p4(self):
        assert exists_tds_of_length(path(4), 3) is not None
        assert exists_tds_of_length(path(4), 5) is None

    def test_k2(self):
        assert exists_tds_of_length(complete_graph(2), 2) == (0, 1)

    def test_interpolation_exhaustive_n5(self):
        for rec in uniformity_table(5):
            g = rec.graph()
            for length in range(0, g.n + 2):
                found = exists_tds_of_length(g, length)
                expected = rec.gamma_t <= length <= rec.grundy
                assert (found is not None) == expected, (rec, length)
                if found is not None:
                    assert len(found) == length
                    assert is_total_dominating_sequence(g, found)


class TestEvenLength:
    def test_examples(self):
        assert len(even_length_tds(complete_graph(2))) == 2
        assert len(even_length_tds(path(4))) in (2, 4)
        assert len(even_length_tds(crown(3))) == 4

    def test_exhaustive_n5(self):
        for rec in uniformity_table(5):
            g = rec.graph()
            seq = even_length_tds(g)
            assert len(seq) % 2 == 0
            assert is_total_dominating_sequence(g, seq)


class TestOpenLengths:
    def test_small_families(self):
        assert open_uniformity_lengths(complete_graph(3)) == frozenset({1, 2})
        assert open_uniformity_lengths(complete_graph(2)) == frozenset({1, 2})
        assert open_uniformity_lengths(cycle(4)) == frozenset({2})
        assert len(open_uniformity_lengths(path(4))) > 1

    def test_guard(self):
        with pytest.raises(BruteForceLimitError):
            open_uniformity_lengths(crown(8))

    def test_open_uniform_implies_total_uniform(self):
        from totaldom.uniformity import total_uniformity

        for rec in uniformity_table(5)[::3]:
            g = rec.graph()
            lengths = open_uniformity_lengths(g)
            if len(lengths) == 1:
                (k,) = lengths
                assert total_uniformity(g).k == k


class TestResourceLimits:
    def test_time_limit(self):
        lk9, _ = line_of_complete(9)
        with pytest.raises(TimeLimitError):
            grundy_total_domination_number(lk9, time_limit=0.0)
        with pytest.raises(TimeLimitError):
            total_domination_number(lk9, time_limit=0.0)

    def test_memo_limit(self):
        with pytest.raises(MemoLimitError):
            grundy_total_domination_number(crown(4), memo_limit_bytes=1)

    def test_pure_kernel_limits(self):
        g = crown(4)
        with pytest.raises(MemoLimitError):
            _pykernels.grundy(g.adj, 1, None)
        with pytest.raises(TimeLimitError):
            _pykernels.grundy(g.adj, 1 << 20, 0.0)
