"""Deduplication of colorings modulo graph automorphisms and color relabeling.

Two colorings are equivalent when one can be obtained from the other by
applying a graph automorphism and renaming colors.  The canonical key of a
coloring is the lexicographically smallest first-use-relabeled color word
over the fixed edge order, taken over the whole automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import EdgeColoring, first_use_relabel
from .graphs import Graph, VertexPermutation, automorphisms


@dataclass(frozen=True)
class CanonicalColoring:
    """Canonical key plus the representative coloring carrying that key."""

    key: tuple[int, ...]
    representative: EdgeColoring


def edge_permutation(g: Graph, perm: Sequence[int]) -> tuple[int, ...]:
    """Induced permutation on edge indices: edge i maps to edge out[i]."""
    out = []
    for u, v in g.edges:
        out.append(g.index_of(perm[u], perm[v]))
    return tuple(out)


def canonical_form(
    g: Graph, f: EdgeColoring, auts: Sequence[VertexPermutation]
) -> CanonicalColoring:
    """Minimum relabeled color word over all automorphisms.

    ``auts`` must be the full automorphism group; at minimum the identity
    must be present.
    """
    identity = tuple(range(g.vertex_count))
    if identity not in set(auts):
        raise ValueError("automorphism list is not a group: identity missing")
    if len(f.colors) != g.edge_count:
        raise ValueError("coloring length does not match edge count")
    best: tuple[int, ...] | None = None
    word = f.colors
    for perm in auts:
        eperm = edge_permutation(g, perm)
        moved = [0] * len(word)
        for i, c in enumerate(word):
            moved[eperm[i]] = c
        candidate = first_use_relabel(moved)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return CanonicalColoring(best, EdgeColoring(best))


def reduce_colorings(
    g: Graph,
    colorings: Sequence[EdgeColoring],
    auts: Sequence[VertexPermutation] | None = None,
) -> list[EdgeColoring]:
    """One representative per (automorphism, relabeling) class, in ascending
    canonical-key order."""
    if auts is None:
        auts = automorphisms(g)
    keys = {canonical_form(g, f, auts).key for f in colorings}
    return [EdgeColoring(key) for key in sorted(keys)]
