import random

import pytest

from mincayley import (
    EdgeColoring,
    Graph,
    all_colorings,
    automorphisms,
    canonical_form,
    reduce_colorings,
    verify_coloring,
)

from conftest import random_connected_graph

C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C4_AUTS = automorphisms(C4)

ADJACENT_A = EdgeColoring((1, 1, 2, 2))  # pairs meeting at vertex 0 / vertex 2
ADJACENT_B = EdgeColoring((1, 2, 1, 2))  # pairs meeting at vertex 1 / vertex 3
OPPOSITE = EdgeColoring((1, 2, 2, 1))


class TestCanonicalForm:
    def test_rotated_adjacent_pairs_same_key(self):
        ka = canonical_form(C4, ADJACENT_A, C4_AUTS).key
        kb = canonical_form(C4, ADJACENT_B, C4_AUTS).key
        assert ka == kb

    def test_opposite_vs_adjacent_distinct(self):
        ka = canonical_form(C4, ADJACENT_A, C4_AUTS).key
        ko = canonical_form(C4, OPPOSITE, C4_AUTS).key
        assert ka != ko

    def test_color_swap_same_key(self):
        swapped = EdgeColoring(tuple(3 - c for c in ADJACENT_A.colors))
        assert (
            canonical_form(C4, swapped, C4_AUTS).key
            == canonical_form(C4, ADJACENT_A, C4_AUTS).key
        )

    def test_identity_required(self):
        non_group = [p for p in C4_AUTS if p != (0, 1, 2, 3)]
        with pytest.raises(ValueError, match="identity"):
            canonical_form(C4, ADJACENT_A, non_group)

    def test_key_is_reachable_word(self):
        got = canonical_form(C4, ADJACENT_A, C4_AUTS)
        assert got.representative.colors == got.key


class TestReduce:
    def test_c4_reduces_to_three(self):
        reduced = reduce_colorings(C4, all_colorings(C4))
        assert [f.colors for f in reduced] == [
            (1, 1, 1, 1),
            (1, 1, 2, 2),
            (1, 2, 2, 1),
        ]

    def test_singleton(self):
        reduced = reduce_colorings(C4, [OPPOSITE])
        assert len(reduced) == 1

    def test_idempotent(self):
        rng = random.Random(31)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 4))
            once = reduce_colorings(g, all_colorings(g))
            twice = reduce_colorings(g, once)
            assert [f.colors for f in once] == [f.colors for f in twice]

    def test_input_order_and_relabel_invariance(self):
        rng = random.Random(37)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 4))
            colorings = all_colorings(g)
            if not colorings:
                continue
            shuffled = colorings[:]
            rng.shuffle(shuffled)
            relabeled = []
            for f in shuffled:
                k = f.color_count
                perm = list(range(1, k + 1))
                rng.shuffle(perm)
                relabeled.append(
                    EdgeColoring(tuple(perm[c - 1] if c else 0 for c in f.colors))
                )
            base = [f.colors for f in reduce_colorings(g, colorings)]
            assert [f.colors for f in reduce_colorings(g, shuffled)] == base
            assert [f.colors for f in reduce_colorings(g, relabeled)] == base

    def test_representatives_verify(self):
        rng = random.Random(41)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 4))
            for f in reduce_colorings(g, all_colorings(g)):
                assert verify_coloring(g, f).valid
