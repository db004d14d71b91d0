"""Uniformity verdicts, the reduction operation, and the theorem predicates."""

import pytest

from helpers import find_isomorphism
from totaldom.domination import grundy_total_domination_number, total_domination_number
from totaldom.errors import HypothesisViolatedError, NotAnEdgeError
from totaldom.families import (
    complete_graph,
    complete_multipartite,
    crown,
    cycle,
    disjoint_union,
    line_of_complete,
    path,
    star,
)
from totaldom.graph import (
    Graph,
    collapse_false_twins,
    girth,
    has_induced_c5_or_c6,
    is_connected,
    is_false_twin_free,
)
from totaldom.sweeps import corpus_n7, uniformity_table
from totaldom.uniformity import (
    GirthBranch,
    UniformityVerdict,
    chordal_uniform_classification,
    double_cover_uniformity,
    g_k_membership,
    girth_dichotomy,
    reduction,
    regularity_theorem_check,
    total_uniformity,
)


class TestVerdicts:
    def test_lk6(self):
        lk6, _ = line_of_complete(6)
        verdict = total_uniformity(lk6)
        assert verdict.uniform and verdict.k == 4 and verdict.kind == "uniform"

    def test_lk9_not_uniform(self):
        lk9, _ = line_of_complete(9)
        verdict = total_uniformity(lk9)
        assert not verdict.uniform and verdict.kind == "not_uniform"
        assert verdict.gamma_t == 6 and verdict.grundy >= 7

    def test_isolated_vertex_undefined(self):
        g = Graph(3, [(0, 1)])
        verdict = total_uniformity(g)
        assert verdict.kind == "undefined" and not verdict.defined and verdict.k is None

    def test_empty_graph_undefined(self):
        assert total_uniformity(Graph(0)).kind == "undefined"

    def test_component_additivity_matches_whole_graph(self):
        for rec in uniformity_table(6)[::97]:
            g = rec.graph()
            verdict = total_uniformity(g)
            assert verdict.gamma_t == total_domination_number(g)[0]
            assert verdict.grundy == grundy_total_domination_number(g)[0]

    def test_verdict_value_object(self):
        v = UniformityVerdict(3, 5)
        assert v.defined and not v.uniform and v.k is None


class TestReduction:
    def test_crown3_drops_to_k2(self):
        g = crown(3)
        for u, v in g.edges():
            sub, _ = reduction(g, u, v)
            assert sub == complete_graph(2)
            assert total_uniformity(sub).k == 2

    def test_lk6_edge_reduction(self):
        lk6, labels = line_of_complete(6)
        index = {pair: i for i, pair in enumerate(labels)}
        sub, _ = reduction(lk6, index[(0, 1)], index[(1, 2)])
        assert total_uniformity(sub).k == 2

    def test_non_edge_rejected(self):
        with pytest.raises(NotAnEdgeError):
            reduction(path(4), 0, 3)

    def test_lk9_reductions_are_lk6(self):
        lk9, _ = line_of_complete(9)
        lk6, _ = line_of_complete(6)
        for u, v in lk9.edges():
            sub, _ = reduction(lk9, u, v)
            assert sub.n == 15
            assert find_isomorphism(sub, lk6) is not None
        # ... yet the original is not uniform (non-converse witness).
        assert total_uniformity(lk9).k is None


class TestFamilyMembership:
    def test_complete_graphs(self):
        for n in range(2, 7):
            assert g_k_membership(complete_graph(n)) == 2

    def test_crown3(self):
        assert g_k_membership(crown(3)) == 4

    def test_false_twins_excluded(self):
        assert g_k_membership(complete_multipartite([2, 3])) is None

    def test_membership_survives_reduction(self):
        # Members with k >= 4 drop to members with k-2 under any edge reduction.
        for n in range(2, 7):
            for rec in uniformity_table(n):
                k = rec.uniform_k
                if k is None or k < 4:
                    continue
                g = rec.graph()
                if not is_false_twin_free(g):
                    continue
                for u, v in g.edges():
                    sub, _ = reduction(g, u, v)
                    assert g_k_membership(sub) == k - 2


class TestFalseTwinInsensitivity:
    def test_collapse_preserves_numbers(self):
        cases = [
            complete_multipartite([2, 3]),
            complete_multipartite([1, 4]),
            star(5),
            crown(3),
            disjoint_union(complete_multipartite([2, 2]), complete_graph(3)),
        ]
        for rec in uniformity_table(5)[::11]:
            cases.append(rec.graph())
        for g in cases:
            collapsed = collapse_false_twins(g)
            if 0 in collapsed.adj or collapsed.n == 0:
                continue
            assert total_domination_number(collapsed)[0] == total_domination_number(g)[0]
            assert grundy_total_domination_number(collapsed)[0] == grundy_total_domination_number(g)[0]


class TestChordalClassification:
    def test_examples(self):
        assert chordal_uniform_classification(disjoint_union(complete_graph(5), star(4)))
        assert not chordal_uniform_classification(cycle(4))
        assert chordal_uniform_classification(star(6))

    def test_uniform_values(self):
        g = disjoint_union(complete_graph(5), star(4))
        assert total_uniformity(g).k == 4
        assert total_uniformity(star(6)).k == 2


class TestGirthDichotomy:
    def test_star_union(self):
        g = disjoint_union(star(3), star(2))
        assert total_uniformity(g).k == 4
        assert girth_dichotomy(g, 4) is GirthBranch.STARS_UNION

    def test_lk6_small_girth(self):
        lk6, _ = line_of_complete(6)
        assert girth_dichotomy(lk6, 4) is GirthBranch.GIRTH_AT_MOST_6
        assert girth(lk6) == 3

    def test_crown3_girth6(self):
        assert girth_dichotomy(crown(3), 4) is GirthBranch.GIRTH_AT_MOST_6
        assert girth(crown(3)) == 6

    def test_violation_raises(self):
        with pytest.raises(HypothesisViolatedError):
            girth_dichotomy(path(8), 2)


class TestRegularityTheorem:
    def test_examples(self):
        lk6, _ = line_of_complete(6)
        assert regularity_theorem_check(lk6)
        assert regularity_theorem_check(star(3))  # leaves are false twins
        assert regularity_theorem_check(crown(4))

    def test_sweep_n5(self):
        for rec in uniformity_table(5):
            assert regularity_theorem_check(rec.graph())


class TestDoubleCoverTheorem:
    def test_odd_complete_graphs(self):
        assert double_cover_uniformity(complete_graph(3)) == 4
        assert double_cover_uniformity(complete_graph(5)) == 4

    def test_bipartite_rejected(self):
        with pytest.raises(HypothesisViolatedError):
            double_cover_uniformity(cycle(6))

    def test_disconnected_rejected(self):
        with pytest.raises(HypothesisViolatedError):
            double_cover_uniformity(disjoint_union(complete_graph(3), complete_graph(3)))

    def test_non_uniform_rejected(self):
        with pytest.raises(HypothesisViolatedError):
            double_cover_uniformity(cycle(5))


class TestInducedHoleLemma:
    def test_connected_members_have_c5_or_c6(self):
        lk6, _ = line_of_complete(6)
        witnesses = [crown(n) for n in range(3, 7)] + [lk6]
        for n in range(2, 7):
            for rec in uniformity_table(n):
                k = rec.uniform_k
                if k is None or k < 4:
                    continue
                g = rec.graph()
                if is_connected(g) and is_false_twin_free(g):
                    witnesses.append(g)
        for g in witnesses:
            assert has_induced_c5_or_c6(g) is not None


class TestTwoUniformCharacterization:
    def test_exhaustive_n6(self):
        from totaldom.graph import is_complete_multipartite

        for n in range(2, 7):
            for rec in uniformity_table(n):
                g = rec.graph()
                expected = is_complete_multipartite(g) is not None
                assert (rec.uniform_k == 2) == expected, rec

    def test_corpus_n7(self):
        from totaldom.graph import is_complete_multipartite

        for g in corpus_n7(400):
            if 0 in g.adj:
                continue
            verdict = total_uniformity(g)
            assert (verdict.k == 2) == (is_complete_multipartite(g) is not None)
