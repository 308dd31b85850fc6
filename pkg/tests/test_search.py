"""Enumeration, extremal search, and the exact verification suites."""

from __future__ import annotations

import json

import pytest

from cyclekit.counting import count_cycles
from cyclekit.graphs import complete_multipartite, turan_graph
from cyclekit.graph_io import graph_from_graph6, named_graph
from cyclekit.morphisms import contains_subgraph, is_isomorphic
from cyclekit.search import (
    SearchResult,
    brute_force_graph_classes,
    compositions_exact,
    enumerate_graphs,
    extremal_number,
    max_cycles_h_free,
    partitions_at_most,
    partitions_exact,
    report_rooted_class_share,
    verify_balanced_code_probability,
    verify_rooted_move_inequality,
    verify_rooted_turan_envelope,
    verify_turan_dominance,
)

K3 = named_graph("K3")


class TestCompositions:
    def test_partitions_at_most(self):
        assert sorted(partitions_at_most(4, 2)) == [(2, 2), (3, 1), (4,)]
        assert sorted(partitions_at_most(3, 3)) == [(1, 1, 1), (2, 1), (3,)]

    def test_partitions_exact(self):
        assert sorted(partitions_exact(5, 2)) == [(3, 2), (4, 1)]

    def test_compositions_exact(self):
        assert sorted(compositions_exact(4, 2)) == [(1, 3), (2, 2), (3, 1)]
        assert len(list(compositions_exact(10, 3))) == 36


class TestEnumeration:
    def test_unrestricted_counts(self):
        # numbers of graphs up to isomorphism on 1..7 vertices
        assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == [
            1, 2, 4, 11, 34, 156, 1044,
        ]

    def test_triangle_free_counts(self):
        assert [len(list(enumerate_graphs(n, K3))) for n in range(1, 9)] == [
            1, 2, 3, 7, 14, 38, 107, 410,
        ]

    def test_every_emitted_graph_is_forbid_free(self):
        for g in enumerate_graphs(6, K3):
            assert not contains_subgraph(g, K3)

    def test_no_two_emitted_graphs_isomorphic(self):
        graphs = list(enumerate_graphs(5, K3))
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not is_isomorphic(graphs[i], graphs[j])

    def test_matches_independent_mask_sweep(self):
        # fully independent generation: every edge mask, dedup by minimum
        # adjacency key over all permutations
        for n in range(1, 6):
            assert len(list(enumerate_graphs(n))) == len(brute_force_graph_classes(n))

    def test_cap(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(10))


class TestExtremalNumbers:
    def test_triangle_free_edge_maxima(self):
        # floor(t^2/4), attained by balanced bipartite graphs
        for t in range(2, 8):
            assert extremal_number(t, K3) == t * t // 4

    def test_k4_free_edge_maxima(self):
        k4 = named_graph("K4")
        for t in range(3, 7):
            assert extremal_number(t, k4) == turan_graph(t, 3).edge_count

    def test_search_backed_table_matches_formula(self):
        from cyclekit.bounds import ExtremalFunction
        from cyclekit.search import extremal_function_from_search

        searched = extremal_function_from_search(K3, 7)
        formula = ExtremalFunction.turan_formula(2, 7)
        assert searched.values == formula.values
        assert searched.provenance == "exhaustive"


class TestMaxCyclesSearch:
    def test_m5_triangle_free(self):
        result = max_cycles_h_free(5, K3)
        assert result.max_cycles == 3
        assert result.unique
        extremal = graph_from_graph6(result.extremal_graphs[0])
        assert is_isomorphic(extremal, complete_multipartite((2, 3)))

    def test_m4_triangle_free(self):
        result = max_cycles_h_free(4, K3)
        assert result.max_cycles == 1
        extremal = graph_from_graph6(result.extremal_graphs[0])
        assert is_isomorphic(extremal, turan_graph(4, 2))

    def test_extremal_graphs_reverify(self):
        result = max_cycles_h_free(6, K3)
        for g6 in result.extremal_graphs:
            g = graph_from_graph6(g6)
            assert not contains_subgraph(g, K3)
            assert count_cycles(g) == result.max_cycles

    def test_k4_free_small_report(self):
        # no asserted expectation: report whether the 3-class Turán graph
        # attains the maximum at this tiny size
        result = max_cycles_h_free(4, named_graph("K4"))
        t34 = turan_graph(4, 3)
        attained = any(
            is_isomorphic(graph_from_graph6(s), t34) for s in result.extremal_graphs
        )
        assert result.max_cycles >= count_cycles(t34)
        assert isinstance(attained, bool)

    def test_cache_roundtrip(self, tmp_path):
        first = max_cycles_h_free(5, K3, cache_dir=tmp_path)
        assert not first.from_cache
        second = max_cycles_h_free(5, K3, cache_dir=tmp_path)
        assert second.from_cache
        assert second.max_cycles == first.max_cycles
        assert second.extremal_graphs == first.extremal_graphs
        files = list(tmp_path.glob("*.json"))
        assert len(files) == 1
        raw = json.loads(files[0].read_text())
        assert SearchResult.from_dict(raw).max_cycles == 3


class TestVerifySuites:
    def test_turan_dominance_small(self):
        rep = verify_turan_dominance(8, 3, sample_subgraphs=50, seed=42)
        assert rep.passed
        assert rep.failures == 0

    def test_turan_dominance_strictness_exemption(self):
        rep = verify_turan_dominance(4, 2, sample_subgraphs=20, seed=1)
        assert rep.passed
        assert all("strict" not in case for case in rep.cases)

    def test_turan_dominance_strict_at_five(self):
        rep = verify_turan_dominance(5, 2, sample_subgraphs=100, seed=1)
        assert rep.passed
        unbalanced = [c for c in rep.cases if c["composition"] != [3, 2]]
        assert all(c["strict"] for c in unbalanced)

    def test_turan_dominance_deterministic(self):
        a = verify_turan_dominance(6, 2, sample_subgraphs=30, seed=9)
        b = verify_turan_dominance(6, 2, sample_subgraphs=30, seed=9)
        assert a.to_json() == b.to_json()

    def test_major_frozen_case(self):
        rep = verify_balanced_code_probability(4, 2)
        assert rep.passed
        by_comp = {tuple(c["composition"]): c["prob"] for c in rep.cases}
        assert by_comp[(2, 2)] == "1/3"
        assert by_comp[(3, 1)] == "0/1"

    def test_major_balanced_wins_sweep(self):
        for k in (2, 3, 4):
            for n in range(2, 13):
                assert verify_balanced_code_probability(n, k).passed, (n, k)

    def test_major_degenerate_k1(self):
        rep = verify_balanced_code_probability(6, 1)
        assert rep.passed

    def test_move_inequality_example(self):
        rep = verify_rooted_move_inequality(5, 3)
        assert rep.passed
        comps = {tuple(c["composition"]) for c in rep.cases}
        assert (1, 3, 1) in comps

    def test_move_inequality_sweep(self):
        for n in range(3, 13):
            assert verify_rooted_move_inequality(n, 3).passed, n

    def test_move_inequality_balanced_vacuous(self):
        rep = verify_rooted_move_inequality(3, 3)
        assert rep.passed
        assert rep.cases == []

    def test_envelope_sweep(self):
        for n in range(3, 13):
            rep = verify_rooted_turan_envelope(n, 3)
            assert rep.passed, n

    def test_envelope_skips_unmatchable(self):
        rep = verify_rooted_turan_envelope(7, 3)
        skipped = [c for c in rep.cases if "skipped" in c]
        checked = [c for c in rep.cases if "ok" in c]
        assert skipped and checked
        assert all(c["ok"] for c in checked)

    def test_class_share_reports_only(self):
        rep = report_rooted_class_share(9, 3)
        assert rep.passed is None
        assert len(rep.cases) == 6
        assert all(isinstance(c["holds"], bool) for c in rep.cases)

    def test_class_share_rejects_k2(self):
        with pytest.raises(ValueError):
            report_rooted_class_share(8, 2)
