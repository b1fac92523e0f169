import itertools
import random

import pytest

from mincayley import (
    CandidateOrientation,
    Digraph,
    EdgeColoring,
    Graph,
    all_colorings,
    candidate_count,
    color_components,
    enumerate_orientations,
    is_valid_local,
    reverse_color,
)
from mincayley.orientation import ColorComponent

from conftest import random_connected_graph

C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
MATCHING3 = Graph(6, [(0, 1), (2, 3), (4, 5)])


class TestColorComponents:
    def test_cycle_class(self):
        comps = color_components(C5, EdgeColoring((1,) * 5), 1)
        assert len(comps) == 1
        assert comps[0].kind == "cycle"
        assert len(comps[0].vertices) == 5

    def test_matching_class(self):
        comps = color_components(MATCHING3, EdgeColoring((1, 1, 1)), 1)
        assert [c.kind for c in comps] == ["path", "path", "path"]
        assert all(c.is_single_edge for c in comps)

    def test_single_edge(self):
        g = Graph(2, [(0, 1)])
        comps = color_components(g, EdgeColoring((1,)), 1)
        assert len(comps) == 1 and comps[0].kind == "path"

    def test_unused_color(self):
        with pytest.raises(ValueError, match="unused"):
            color_components(C5, EdgeColoring((1,) * 5), 2)

    def test_plus_traversal_convention(self):
        # path 2-0-4: plus runs from endpoint 2 (smaller endpoint)
        g = Graph(5, [(0, 2), (0, 4)])
        comp = color_components(g, EdgeColoring((1, 1)), 1)[0]
        assert comp.vertices == (2, 0, 4)
        assert comp.plus_arcs() == ((2, 0), (0, 4))
        # cycle: starts at min vertex toward its smaller neighbour
        comp = color_components(C5, EdgeColoring((1,) * 5), 1)[0]
        assert comp.vertices[0] == 0
        assert comp.vertices[1] == 1  # smaller of 0's neighbours {1, 4}


class TestEnumerate:
    def test_two_cycle_classes_single_candidate(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        f = EdgeColoring((1, 1, 1, 2, 2, 2))
        cands = list(enumerate_orientations(g, f))
        assert len(cands) == 1 == candidate_count(g, f)

    def test_matching_five_variants(self):
        f = EdgeColoring((1, 1, 1))
        cands = list(enumerate_orientations(MATCHING3, f))
        assert len(cands) == 5 == candidate_count(MATCHING3, f)
        bi = [d for d in cands if d.digraph.arc_count == 6]
        assert len(bi) == 1  # exactly one fully bi-oriented variant

    def test_path_class_single_variant(self):
        g = Graph(3, [(0, 1), (1, 2)])
        f = EdgeColoring((1, 1))
        cands = list(enumerate_orientations(g, f))
        assert len(cands) == 1
        assert cands[0].digraph.arcs == ((0, 1), (1, 2))

    def test_partial_rejected(self):
        with pytest.raises(ValueError, match="partial"):
            list(enumerate_orientations(MATCHING3, EdgeColoring((1, 0, 1))))

    def test_gap_in_colors_rejected(self):
        with pytest.raises(ValueError, match="1..k"):
            list(enumerate_orientations(MATCHING3, EdgeColoring((1, 3, 1))))

    def test_all_candidates_locally_valid(self):
        rng = random.Random(53)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 4))
            for f in all_colorings(g):
                for d in enumerate_orientations(g, f):
                    assert is_valid_local(d)

    def test_count_formula(self):
        rng = random.Random(59)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 4))
            for f in all_colorings(g):
                got = sum(1 for _ in enumerate_orientations(g, f))
                assert got == candidate_count(g, f)

    def test_monochromatic_cycles_directed(self):
        # Per-color cycles come out as directed cycles in every candidate.
        for d in enumerate_orientations(C5, EdgeColoring((1,) * 5)):
            out_deg = {v: 0 for v in range(5)}
            for u, v in d.digraph.arcs:
                out_deg[u] += 1
            assert all(x == 1 for x in out_deg.values())

    def test_stream_covers_all_reversal_classes(self):
        """Brute force every per-component plus/minus choice (and the
        bi-oriented variants); normalizing the pinned component to plus must
        land in the enumerated stream."""
        rng = random.Random(61)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 3))
            for f in all_colorings(g):
                colors = sorted(f.classes)
                per_color = []
                for c in colors:
                    comps = color_components(g, f, c)
                    options = [
                        ("arcs", flags)
                        for flags in itertools.product((True, False), repeat=len(comps))
                    ]
                    if all(comp.is_single_edge for comp in comps):
                        options.append(("bi", ()))
                    per_color.append((c, comps, options))

                stream = {
                    d.digraph.arcs for d in enumerate_orientations(g, f)
                }
                for pick in itertools.product(*(o for _, _, o in per_color)):
                    arcs_by_edge = {}
                    flips = []
                    for (c, comps, _), (mode, flags) in zip(per_color, pick):
                        if mode == "bi":
                            for comp in comps:
                                (eid,) = comp.edge_ids
                                u, v = g.edges[eid]
                                arcs_by_edge[eid] = [(u, v), (v, u)]
                            flips.append(False)
                        else:
                            # normalization: flip the whole class when the
                            # pinned (first) component is minus
                            flip = not flags[0]
                            flips.append(flip)
                            for comp, plus in zip(comps, flags):
                                arcs = comp.plus_arcs() if plus != flip else comp.minus_arcs()
                                # plus != flip: apply the class flip
                                for x, y in arcs:
                                    arcs_by_edge[g.index_of(x, y)] = [(x, y)]
                    arcs = []
                    for eid in range(g.edge_count):
                        arcs.extend(arcs_by_edge[eid])
                    assert tuple(arcs) in stream


class TestIsValidLocal:
    def test_directed_path(self):
        g = Graph(3, [(0, 1), (1, 2)])
        d = CandidateOrientation(
            Digraph(3, [(0, 1), (1, 2)]), (1, 1), g, EdgeColoring((1, 1))
        )
        assert is_valid_local(d)

    def test_two_out_arcs_one_color(self):
        g = Graph(3, [(0, 1), (0, 2)])
        d = CandidateOrientation(
            Digraph(3, [(0, 1), (0, 2)]), (1, 1), g, EdgeColoring((1, 1))
        )
        assert not is_valid_local(d)

    def test_bi_oriented_single_edge(self):
        g = Graph(2, [(0, 1)])
        d = CandidateOrientation(
            Digraph(2, [(0, 1), (1, 0)]), (1, 1), g, EdgeColoring((1,))
        )
        assert is_valid_local(d)


class TestReverseColor:
    def test_reversal_keeps_validity(self):
        rng = random.Random(67)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 3))
            for f in all_colorings(g):
                for d in itertools.islice(enumerate_orientations(g, f), 4):
                    for c in sorted(f.classes):
                        assert is_valid_local(reverse_color(d, c))

    def test_double_reversal_is_identity(self):
        f = EdgeColoring((1,) * 5)
        d = next(enumerate_orientations(C5, f))
        assert reverse_color(reverse_color(d, 1), 1).digraph.arcs == d.digraph.arcs
