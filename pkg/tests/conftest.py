"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own search strategies:
cycles are recovered from the cycle space or from vertex-subset
permutations, colorings from plain assignment scans, so agreement between
library and oracle is meaningful.
"""

from __future__ import annotations

import itertools
import random

import pytest

from mincayley import Graph


def subset_cycle_oracle(g: Graph) -> set[frozenset[int]]:
    """Every simple cycle as an edge-id set, from vertex subsets and cyclic
    arrangements.  Feasible up to ~8 vertices."""
    cycles: set[frozenset[int]] = set()
    vertices = range(g.vertex_count)
    for size in range(3, g.vertex_count + 1):
        for subset in itertools.combinations(vertices, size):
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # each cyclic arrangement once
                arrangement = (first,) + perm
                if all(
                    g.has_edge(arrangement[i], arrangement[(i + 1) % size])
                    for i in range(size)
                ):
                    cycles.add(
                        frozenset(
                            g.index_of(arrangement[i], arrangement[(i + 1) % size])
                            for i in range(size)
                        )
                    )
    return cycles


def cycle_space_oracle(g: Graph) -> set[frozenset[int]]:
    """Every simple cycle as an edge-id set, from the cycle space: XOR
    combinations of fundamental cycles that form connected 2-regular
    subgraphs.  Needs a small cycle-space dimension, not small order."""
    n, m = g.vertex_count, g.edge_count
    parent: dict[int, int | None] = {}
    tree_edges: set[int] = set()
    for start in range(n):
        if start in parent:
            continue
        parent[start] = None
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if v not in parent:
                    parent[v] = u
                    tree_edges.add(g.index_of(u, v))
                    stack.append(v)

    def tree_path_mask(u: int, v: int) -> int:
        def root_path(x: int) -> list[int]:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path
        pu, pv = root_path(u), root_path(v)
        anc = {x: i for i, x in enumerate(pu)}
        mask = 0
        x = v
        for x in pv:
            if x in anc:
                break
        meet = x
        for path, stop in ((pu, meet), (pv, meet)):
            for i in range(len(path)):
                if path[i] == stop:
                    break
                mask ^= 1 << g.index_of(path[i], path[i + 1])
        return mask

    basis = []
    for i, (u, v) in enumerate(g.edges):
        if i not in tree_edges:
            basis.append((1 << i) ^ tree_path_mask(u, v))

    cycles: set[frozenset[int]] = set()
    for bits in range(1, 1 << len(basis)):
        mask = 0
        b = bits
        idx = 0
        while b:
            if b & 1:
                mask ^= basis[idx]
            b >>= 1
            idx += 1
        edge_ids = [i for i in range(m) if mask >> i & 1]
        if not edge_ids:
            continue
        degree: dict[int, int] = {}
        for i in edge_ids:
            for x in g.edges[i]:
                degree[x] = degree.get(x, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        # connected?
        verts = set(degree)
        seen = {min(verts)}
        frontier = [min(verts)]
        adj: dict[int, list[int]] = {x: [] for x in verts}
        for i in edge_ids:
            u, v = g.edges[i]
            adj[u].append(v)
            adj[v].append(u)
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if seen == verts:
            cycles.add(frozenset(edge_ids))
    return cycles


def atlas_graphs(max_vertices: int = 7, max_edges: int = 12) -> list[Graph]:
    """All connected nonempty graphs from the atlas within the bounds."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0 or n > max_vertices or G.number_of_edges() > max_edges:
            continue
        if not nx.is_connected(G):
            continue
        mapping = {v: i for i, v in enumerate(G.nodes())}
        out.append(Graph(n, [(mapping[u], mapping[v]) for u, v in G.edges()]))
    return out


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """A random tree plus a few extra edges; always connected and simple."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph(n, sorted(edges))


@pytest.fixture(scope="session")
def small_atlas() -> list[Graph]:
    return atlas_graphs(max_vertices=6, max_edges=10)


def petersen_via_kneser() -> Graph:
    """Petersen as the Kneser graph K(5,2): an independent construction."""
    pairs = list(itertools.combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[p], index[q])
        for p, q in itertools.combinations(pairs, 2)
        if not (set(p) & set(q))
    ]
    return Graph(10, edges)


def hypercube_graph(dim: int) -> Graph:
    edges = []
    for x in range(1 << dim):
        for b in range(dim):
            y = x ^ (1 << b)
            if x < y:
                edges.append((x, y))
    return Graph(1 << dim, edges)
