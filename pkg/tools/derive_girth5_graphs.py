#!/usr/bin/env python3
"""Derive the two cubic girth-5 graphs on 12 vertices and write them as
edge-list data files.

Any cubic graph of girth at least 5 looks like a tree to depth 2 from every
vertex: a root, its 3 neighbours, and 6 distinct second neighbours.  On 12
vertices that tree covers 10 vertices, leaving 2 more.  Fixing the tree

    0-1 0-2 0-3   1-4 1-5   2-6 2-7   3-8 3-9

every such graph (up to isomorphism) appears among the completions that add
9 edges over {4..9} (degree 2 missing) and {10, 11} (degree 3 missing)
without creating a cycle shorter than 5.  The Moore bound rules out girth 6
at 12 vertices, so every completion has girth exactly 5.

The two resulting graphs are told apart by the obstruction pipeline: the
one that is not a subgraph of any minimal Cayley graph (216 colorings, 15
after reduction, no surviving orientation) is written to triplex.edges, the
inconclusive one to twinplex.edges.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mincayley import (  # noqa: E402
    Graph,
    all_colorings,
    format_edge_list,
    induced_subgraph_search,
    obstruction_pipeline,
    reduce_colorings,
)

N = 12
TREE = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]
TARGET_DEGREE = 3


def complete_tree() -> list[Graph]:
    """All degree-3, girth>=5 completions of the fixed depth-2 tree."""
    adj = {v: set() for v in range(N)}
    for u, v in TREE:
        adj[u].add(v)
        adj[v].add(u)

    open_vertices = [v for v in range(N) if len(adj[v]) < TARGET_DEGREE]
    candidates = sorted(
        (u, v)
        for u, v in combinations(open_vertices, 2)
    )
    results: list[Graph] = []

    def distance(a: int, b: int) -> int:
        if a == b:
            return 0
        seen = {a}
        frontier = [a]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y == b:
                        return d
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return 10**9

    def deficit(v: int) -> int:
        return TARGET_DEGREE - len(adj[v])

    def extend(start: int) -> None:
        open_now = [v for v in range(N) if deficit(v) > 0]
        if not open_now:
            results.append(Graph(N, [(u, v) for u in range(N) for v in adj[u] if u < v]))
            return
        # Branch on the smallest open vertex to kill permutation duplicates.
        anchor = open_now[0]
        for i in range(start, len(candidates)):
            u, v = candidates[i]
            if u != anchor and v != anchor:
                continue
            if deficit(u) == 0 or deficit(v) == 0 or v in adj[u]:
                continue
            if distance(u, v) < 4:  # the new edge would close a short cycle
                continue
            adj[u].add(v)
            adj[v].add(u)
            # Edges at one anchor are added in ascending order; the next
            # anchor may be smaller, so restart the candidate scan.
            extend(i + 1 if open_now[0] == anchor and deficit(anchor) > 0 else 0)
            adj[u].remove(v)
            adj[v].remove(u)

    extend(0)
    return results


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    result = induced_subgraph_search(g, h)
    assert result.complete
    return result.embedding is not None


def dedupe(graphs: list[Graph]) -> list[Graph]:
    classes: list[Graph] = []
    for g in graphs:
        if not any(isomorphic(g, h) for h in classes):
            classes.append(g)
    return classes


def bfs_relabel(g: Graph) -> Graph:
    """Deterministic labeling: breadth-first from vertex 0, neighbours in
    ascending old-label order."""
    order = []
    seen = [False] * g.vertex_count
    queue = [0]
    seen[0] = True
    while queue:
        x = queue.pop(0)
        order.append(x)
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    relabel = [0] * g.vertex_count
    for new, old in enumerate(order):
        relabel[old] = new
    return g.relabel(relabel)


def main() -> None:
    completions = complete_tree()
    print(f"completions of the fixed tree: {len(completions)}")
    classes = dedupe(completions)
    print(f"isomorphism classes: {len(classes)}")
    assert len(classes) == 2, "expected exactly two cubic girth-5 graphs on 12 vertices"

    named = {}
    for g in classes:
        colorings = all_colorings(g)
        reduced = reduce_colorings(g, colorings)
        verdict = obstruction_pipeline(g)
        print(
            f"graph with {g.edge_count} edges: {len(colorings)} colorings, "
            f"{len(reduced)} reduced, verdict {verdict.status}, "
            f"{verdict.candidates_checked} candidates, {len(verdict.witnesses)} witnesses"
        )
        if verdict.status == "NotSubgraph":
            named["triplex"] = g
        else:
            named["twinplex"] = g
    assert set(named) == {"triplex", "twinplex"}, "verdicts did not separate the two graphs"

    out_dir = Path(__file__).resolve().parent.parent / "src" / "mincayley" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, g in named.items():
        path = out_dir / f"{name}.edges"
        path.write_text(format_edge_list(bfs_relabel(g)))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
