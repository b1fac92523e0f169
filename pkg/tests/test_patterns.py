import itertools
import random

import pytest

from mincayley import (
    CandidateOrientation,
    Digraph,
    DisconnectedGraphError,
    EdgeColoring,
    Graph,
    all_colorings,
    cayley_digraph,
    check_cycles,
    cyclic_group,
    enumerate_cycles,
    enumerate_orientations,
    follow_pattern,
    obstruction_pipeline,
    reverse_color,
    verdict_to_json,
    verify_coloring,
)
from mincayley.patterns import (
    OUTCOME_CLOSED_SIMPLE,
    OUTCOME_NO_PATH,
    OUTCOME_OPEN,
    _cycle_patterns,
    _pattern_fails_somewhere,
    _StepTables,
)

from conftest import random_connected_graph

DIRECTED_TRIANGLE = CandidateOrientation(
    Digraph(3, [(0, 1), (1, 2), (2, 0)]),
    (1, 1, 1),
    Graph(3, [(0, 1), (1, 2), (0, 2)]),
    EdgeColoring((1, 1, 1)),
)

# a directed 3-cycle plus a directed 3-arc path, all one color
SUM_GRAPH = Graph(7, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (5, 6)])
COMPONENT_SUM = CandidateOrientation(
    Digraph(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)]),
    (1, 1, 1, 1, 1, 1),
    SUM_GRAPH,
    EdgeColoring((1, 1, 1, 1, 1, 1)),
)


class TestFollowPattern:
    def test_directed_triangle_closes(self):
        for v in range(3):
            trace = follow_pattern(DIRECTED_TRIANGLE, v, (1, 1, 1), (1, 1, 1))
            assert trace.outcome == OUTCOME_CLOSED_SIMPLE
            assert trace.visited[0] == trace.visited[-1] == v

    def test_path_start_leaks(self):
        trace = follow_pattern(COMPONENT_SUM, 3, (1, 1, 1), (1, 1, 1))
        assert trace.outcome == OUTCOME_OPEN
        assert trace.visited == (3, 4, 5, 6)

    def test_no_outgoing_arc(self):
        trace = follow_pattern(COMPONENT_SUM, 6, (1, 1, 1), (1, 1, 1))
        assert trace.outcome == OUTCOME_NO_PATH

    def test_backward_signs(self):
        trace = follow_pattern(DIRECTED_TRIANGLE, 0, (1, 1, 1), (-1, -1, -1))
        assert trace.outcome == OUTCOME_CLOSED_SIMPLE
        assert trace.visited == (0, 2, 1, 0)

    def test_missing_color(self):
        trace = follow_pattern(DIRECTED_TRIANGLE, 0, (2,), (1,))
        assert trace.outcome == OUTCOME_NO_PATH

    def test_bi_oriented_edge_satisfies_both_signs(self):
        g = Graph(2, [(0, 1)])
        d = CandidateOrientation(
            Digraph(2, [(0, 1), (1, 0)]), (1, 1), g, EdgeColoring((1,))
        )
        for sign in (1, -1):
            trace = follow_pattern(d, 0, (1, 1), (sign, -sign))
            assert trace.outcome == OUTCOME_CLOSED_SIMPLE

    def test_determinism_assertion(self):
        # two arcs of one color out of vertex 0: step tables must refuse
        g = Graph(3, [(0, 1), (0, 2)])
        bad = CandidateOrientation(
            Digraph(3, [(0, 1), (0, 2)]), (1, 1), g, EdgeColoring((1, 1))
        )
        with pytest.raises(AssertionError):
            _StepTables(bad)


class TestCheckCycles:
    def test_cayley_cyclic_3(self):
        assert check_cycles(cayley_digraph(cyclic_group(3), [1]))

    def test_component_sum_fails(self):
        assert not check_cycles(COMPONENT_SUM)

    def test_scalar_and_vector_traces_agree(self):
        rng = random.Random(71)
        for _ in range(12):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 3))
            for f in all_colorings(g):
                for d in itertools.islice(enumerate_orientations(g, f), 3):
                    tables = _StepTables(d)
                    for cycle in enumerate_cycles(g):
                        for colors, signs in _cycle_patterns(d, cycle):
                            scalar_fail = any(
                                follow_pattern(d, v, colors, signs, tables).outcome
                                == OUTCOME_OPEN
                                for v in range(g.vertex_count)
                            )
                            assert scalar_fail == _pattern_fails_somewhere(
                                tables, colors, signs
                            )

    def test_reversal_closure(self):
        rng = random.Random(73)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 3))
            for f in all_colorings(g):
                for d in itertools.islice(enumerate_orientations(g, f), 3):
                    base = check_cycles(d)
                    for c in sorted(f.classes):
                        assert check_cycles(reverse_color(d, c)) == base


class TestPipeline:
    def test_k4_minus_e(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        verdict = obstruction_pipeline(g)
        assert verdict.status == "NotSubgraph"
        assert verdict.colorings_total == 0
        assert verdict.witnesses == ()

    def test_triangle_inconclusive(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        verdict = obstruction_pipeline(g)
        assert verdict.status == "Inconclusive"
        assert len(verdict.witnesses) >= 1

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            obstruction_pipeline(Graph(4, [(0, 1), (2, 3)]))

    def test_first_witness_flag(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        verdict = obstruction_pipeline(g, first_witness=True)
        assert verdict.status == "Inconclusive"
        assert len(verdict.witnesses) == 1

    def test_witnesses_reverify(self):
        from mincayley import is_valid_local

        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        verdict = obstruction_pipeline(g)
        assert verdict.status == "Inconclusive"
        for f, d in verdict.witnesses:
            assert verify_coloring(g, f).valid
            assert is_valid_local(d)
            assert check_cycles(d)

    def test_jobs_parity(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        seq = obstruction_pipeline(g, jobs=1)
        par = obstruction_pipeline(g, jobs=2)
        assert verdict_to_json(seq) == verdict_to_json(par)

    def test_embedded_patterns_not_excluded(self):
        """Graphs realized inside minimal Cayley graphs by the embedding
        module must never be ruled out by the pipeline."""
        from mincayley import generalized_petersen

        for n, k in [(3, 1), (4, 1)]:
            g = generalized_petersen(n, k)
            verdict = obstruction_pipeline(g)
            assert verdict.status != "NotSubgraph", (n, k)

    def test_json_schema(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        payload = verdict_to_json(obstruction_pipeline(g))
        assert set(payload) == {
            "status",
            "colorings_total",
            "colorings_reduced",
            "candidates_checked",
            "witnesses",
        }
        for witness in payload["witnesses"]:
            assert set(witness) == {"coloring", "arcs"}
            assert all(len(arc) == 3 for arc in witness["arcs"])
