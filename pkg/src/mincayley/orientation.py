"""Candidate orientations of a colored graph, color class by color class.

Every color class of a valid coloring is a disjoint union of paths and
cycles.  Each non-trivial component has exactly two orientations with
in/out-degree at most 1, called plus and minus here.  Reversing a whole
color class is a symmetry of the problem, so within each color the
orientation of one fixed component (the one holding the smallest edge
index) is pinned to plus, and the remaining components range over all
plus/minus combinations.  A class that is a perfect matching of its
support may additionally be bi-oriented as a whole: every edge becomes an
antiparallel arc pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import EdgeColoring
from .graphs import Digraph, Graph


@dataclass(frozen=True)
class ColorComponent:
    """A connected component of one color class.

    ``vertices`` is ordered along the plus traversal: a path runs from its
    smaller-indexed endpoint; a cycle starts at its smallest vertex and
    leaves toward its smaller-indexed neighbour.
    """

    kind: str  # "path" | "cycle"
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def is_single_edge(self) -> bool:
        return len(self.edge_ids) == 1

    def plus_arcs(self) -> tuple[tuple[int, int], ...]:
        verts = self.vertices
        if self.kind == "path":
            return tuple((verts[i], verts[i + 1]) for i in range(len(verts) - 1))
        return tuple(
            (verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
        )

    def minus_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, u) for u, v in self.plus_arcs())


def color_components(g: Graph, f: EdgeColoring, color: int) -> list[ColorComponent]:
    """Components of one color class, ordered by their smallest edge index.

    Assumes the class has maximum degree 2 (a property of valid colorings);
    raises if the color is unused.
    """
    edge_ids = [i for i, c in enumerate(f.colors) if c == color]
    if not edge_ids:
        raise ValueError(f"color {color} is unused")
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in edge_ids:
        u, v = g.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    if any(len(ns) > 2 for ns in adj.values()):
        raise ValueError("color class has maximum degree above 2")

    seen: set[int] = set()
    components = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp_vertices = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in comp_vertices:
                    comp_vertices.add(y)
                    stack.append(y)
        seen |= comp_vertices
        comp_edges = sorted(
            {i for x in comp_vertices for _, i in adj[x]}
        )
        endpoints = sorted(x for x in comp_vertices if len(adj[x]) == 1)
        if endpoints:
            kind = "path"
            first = endpoints[0]
        else:
            kind = "cycle"
            first = min(comp_vertices)
        # Walk the path/cycle to fix the plus traversal order.
        order = [first]
        prev = None
        cur = first
        if kind == "cycle":
            nxt = min(y for y, _ in adj[cur])
            order.append(nxt)
            prev, cur = cur, nxt
        while len(order) < len(comp_vertices):
            nxt = next(y for y, _ in adj[cur] if y != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        components.append(ColorComponent(kind, tuple(order), tuple(comp_edges)))
    components.sort(key=lambda comp: comp.edge_ids[0])
    return components


@dataclass(frozen=True)
class CandidateOrientation:
    """A digraph realizing a colored graph, the object the cycle-pattern
    check runs on.

    Each undirected edge appears as a single arc or as an antiparallel arc
    pair; ``arc_colors[i]`` colors ``digraph.arcs[i]``.
    """

    digraph: Digraph
    arc_colors: tuple[int, ...]
    graph: Graph
    coloring: EdgeColoring

    def arcs_with_colors(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (u, v, c) for (u, v), c in zip(self.digraph.arcs, self.arc_colors)
        )


def is_valid_local(d: CandidateOrientation) -> bool:
    """Each color's subdigraph has maximum in-degree and out-degree 1."""
    out_seen: set[tuple[int, int]] = set()
    in_seen: set[tuple[int, int]] = set()
    for (u, v), c in zip(d.digraph.arcs, d.arc_colors):
        if (c, u) in out_seen or (c, v) in in_seen:
            return False
        out_seen.add((c, u))
        in_seen.add((c, v))
    return True


def _color_variants(components: list[ColorComponent]) -> list[tuple[str, tuple[bool, ...]]]:
    """Orientation variants for one color.

    Each variant is ("arcs", plus_flags) with the first component pinned to
    plus, or ("bi", ()) when the class is a matching.
    """
    rest = len(components) - 1
    variants: list[tuple[str, tuple[bool, ...]]] = []
    for bits in itertools.product((True, False), repeat=rest):
        variants.append(("arcs", (True,) + bits))
    if all(c.is_single_edge for c in components):
        variants.append(("bi", ()))
    return variants


def candidate_count(g: Graph, f: EdgeColoring) -> int:
    """Number of candidate orientations: product over colors of
    2^(components-1), plus one variant when the class is a matching."""
    total = 1
    for color in sorted(f.classes):
        comps = color_components(g, f, color)
        total *= 2 ** (len(comps) - 1) + (1 if all(c.is_single_edge for c in comps) else 0)
    return total


def enumerate_orientations(g: Graph, f: EdgeColoring) -> Iterator[CandidateOrientation]:
    """Stream all candidate orientations of a validly colored graph.

    Requires a total coloring using colors 1..k contiguously.
    """
    if len(f.colors) != g.edge_count:
        raise ValueError("coloring length does not match edge count")
    if not f.is_total:
        raise ValueError("partial coloring rejected")
    colors_used = sorted(f.classes)
    if colors_used != list(range(1, len(colors_used) + 1)):
        raise ValueError("colors must be 1..k with every color used")

    per_color_components = {c: color_components(g, f, c) for c in colors_used}
    per_color_variants = [
        (c, _color_variants(per_color_components[c])) for c in colors_used
    ]

    for choice in itertools.product(*(v for _, v in per_color_variants)):
        # edge id -> list of arcs realizing it under this choice
        arc_plan: dict[int, list[tuple[int, int]]] = {}
        for (color, _), (mode, flags) in zip(per_color_variants, choice):
            comps = per_color_components[color]
            if mode == "bi":
                for comp in comps:
                    (eid,) = comp.edge_ids
                    u, v = g.edges[eid]
                    arc_plan[eid] = [(u, v), (v, u)]
            else:
                for comp, plus in zip(comps, flags):
                    arcs = comp.plus_arcs() if plus else comp.minus_arcs()
                    for (x, y) in arcs:
                        eid = g.index_of(x, y)
                        arc_plan[eid] = [(x, y)]
        arcs: list[tuple[int, int]] = []
        arc_colors: list[int] = []
        for eid in range(g.edge_count):
            for arc in arc_plan[eid]:
                arcs.append(arc)
                arc_colors.append(f.colors[eid])
        yield CandidateOrientation(
            Digraph(g.vertex_count, arcs), tuple(arc_colors), g, f
        )


def reverse_color(d: CandidateOrientation, color: int) -> CandidateOrientation:
    """Reverse every arc of one color class (bi-oriented pairs are unchanged)."""
    pair_index = d.digraph.arc_index
    arcs = []
    for (u, v), c in zip(d.digraph.arcs, d.arc_colors):
        if c == color and (v, u) not in pair_index:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return CandidateOrientation(
        Digraph(d.digraph.vertex_count, arcs), d.arc_colors, d.graph, d.coloring
    )
