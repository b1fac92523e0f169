"""Generalized Petersen graphs and their induced embeddings into Cayley
graphs of semidirect products, plus a small induced-subgraph matcher.

G(n, k) has outer vertices u_0..u_{n-1} (indices 0..n-1), inner vertices
v_0..v_{n-1} (indices n..2n-1), outer cycle edges u_i u_{i+1}, inner edges
v_i v_{i+k}, and spokes u_i v_i.  When gcd(n, k) = 1, mapping u_i to b^i
and v_i to b^i a realizes G(n, k) as an induced subgraph of the Cayley
graph of C_n x| C_r over the minimal generating set {a, b}, where r >= 2
satisfies k^r = 1 mod n.  The embedding is always verified against the
constructed multiplication table, never trusted from the algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import GroupInvariantError
from .graphs import Graph
from .groups import SemidirectGroup, cayley_graph, is_minimal_generating, semidirect

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class GPParams:
    n: int
    k: int

    def __post_init__(self):
        if not (0 < self.k and 2 * self.k < self.n):
            raise ValueError(f"need 0 < k < n/2, got n={self.n}, k={self.k}")


def generalized_petersen(n: int, k: int) -> Graph:
    """The cubic graph G(n, k) on 2n vertices and 3n edges."""
    GPParams(n, k)
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))           # outer cycle
        edges.append((n + i, n + (i + k) % n))   # inner steps
        edges.append((i, n + i))                 # spokes
    return Graph(2 * n, edges)


@dataclass(frozen=True)
class Embedding:
    """An injective vertex map realizing ``pattern`` as an induced subgraph
    of ``host``."""

    vertex_map: tuple[int, ...]
    pattern: Graph
    host: Graph


def verify_induced_embedding(pattern: Graph, host: Graph, vertex_map: Sequence[int]) -> bool:
    """True iff the map is injective and preserves and reflects adjacency."""
    if len(vertex_map) != pattern.vertex_count:
        return False
    if any(not (0 <= x < host.vertex_count) for x in vertex_map):
        return False
    if len(set(vertex_map)) != len(vertex_map):
        return False
    for u in range(pattern.vertex_count):
        for v in range(u + 1, pattern.vertex_count):
            if pattern.has_edge(u, v) != host.has_edge(vertex_map[u], vertex_map[v]):
                return False
    return True


@dataclass(frozen=True)
class PetersenEmbedding:
    group: SemidirectGroup
    generators: frozenset[int]
    embedding: Embedding

    @property
    def r(self) -> int:
        return self.group.r

    @property
    def host_order(self) -> int:
        return self.group.order


def twist_exponent(n: int, k: int) -> int:
    """Smallest r >= 2 with k^r = 1 mod n (requires gcd(n, k) = 1)."""
    if math.gcd(n, k) != 1:
        raise GroupInvariantError(f"gcd(n, k) must be 1, got gcd({n},{k})")
    r = 2
    while pow(k, r, n) != 1 % n:
        r += 1
    return r


def petersen_embedding(n: int, k: int) -> PetersenEmbedding:
    """Build and verify the induced embedding of G(n, k) into the Cayley
    graph of C_n x| C_r over {a, b}."""
    pattern = generalized_petersen(n, k)
    if math.gcd(n, k) != 1:
        raise GroupInvariantError(f"embedding requires gcd(n, k) = 1, got gcd({n},{k})")
    r = twist_exponent(n, k)
    group = semidirect(n, k, r)
    gens = frozenset((group.a, group.b))
    if not is_minimal_generating(group, gens):
        raise AssertionError("designated generators are not inclusion-minimal")
    host = cayley_graph(group, gens)
    vertex_map = tuple(
        [i * r for i in range(n)]          # u_i -> b^i  (index (j=i, i=0))
        + [i * r + 1 for i in range(n)]    # v_i -> b^i a
    )
    embedding = Embedding(vertex_map, pattern, host)
    if not verify_induced_embedding(pattern, host, vertex_map):
        raise AssertionError("embedding failed verification against the table")
    return PetersenEmbedding(group, gens, embedding)


# ---------------------------------------------------------------------------
# Induced-subgraph search


@dataclass(frozen=True)
class SearchResult:
    """Outcome of the backtracking matcher.

    ``complete`` is True when the search space was exhausted, so an absent
    embedding proves non-existence; within a spent budget absence proves
    nothing.
    """

    embedding: Embedding | None
    complete: bool
    nodes_used: int


def induced_subgraph_search(
    pattern: Graph, host: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> SearchResult:
    """Find one induced embedding of ``pattern`` in ``host`` by backtracking
    with degree and neighbour-degree pruning."""
    p_n, h_n = pattern.vertex_count, host.vertex_count
    if p_n > h_n:
        return SearchResult(None, True, 0)
    if p_n == 0:
        return SearchResult(Embedding((), pattern, host), True, 0)

    def neigh_degrees(g: Graph, v: int) -> list[int]:
        return sorted((g.degree(u) for u in g.adjacency[v]), reverse=True)

    host_nd = [neigh_degrees(host, w) for w in range(h_n)]
    pattern_nd = [neigh_degrees(pattern, v) for v in range(p_n)]

    def dominates(big: list[int], small: list[int]) -> bool:
        if len(big) < len(small):
            return False
        return all(b >= s for b, s in zip(big, small))

    candidates = [
        [
            w
            for w in range(h_n)
            if host.degree(w) >= pattern.degree(v) and dominates(host_nd[w], pattern_nd[v])
        ]
        for v in range(p_n)
    ]
    if any(not c for c in candidates):
        return SearchResult(None, True, 0)

    # Most-constrained first, preferring vertices adjacent to placed ones.
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < p_n:
        pool = [v for v in range(p_n) if v not in placed]
        touching = [v for v in pool if any(u in placed for u in pattern.adjacency[v])]
        pick = min(touching or pool, key=lambda v: (len(candidates[v]), v))
        order.append(pick)
        placed.add(pick)

    mapping = [-1] * p_n
    used = [False] * h_n
    nodes = 0
    budget_hit = False

    def extend(depth: int) -> bool:
        nonlocal nodes, budget_hit
        if depth == p_n:
            return True
        v = order[depth]
        for w in candidates[v]:
            if used[w]:
                continue
            if nodes >= node_budget:
                budget_hit = True
                return False
            nodes += 1
            ok = True
            for u in order[:depth]:
                if pattern.has_edge(v, u) != host.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                used[w] = False
                mapping[v] = -1
            if budget_hit:
                return False
        return False

    found = extend(0)
    if found:
        embedding = Embedding(tuple(mapping), pattern, host)
        assert verify_induced_embedding(pattern, host, embedding.vertex_map)
        return SearchResult(embedding, True, nodes)
    return SearchResult(None, not budget_hit, nodes)


# ---------------------------------------------------------------------------
# Parameter scan


@dataclass(frozen=True)
class ScanRow:
    n: int
    k: int
    gcd: int
    r: int | None
    host_order: int | None
    status: str  # "theorem_applies" | "gcd_excluded"


def petersen_plane_scan(n_max: int) -> list[ScanRow]:
    """Classify every (n, k) with 0 < k < n/2 and n <= n_max: gcd 1 cells get
    a verified embedding, others carry no claim."""
    rows = []
    for n in range(3, n_max + 1):
        for k in range(1, (n + 1) // 2):  # exactly 0 < k < n/2
            g = math.gcd(n, k)
            if g == 1:
                result = petersen_embedding(n, k)
                rows.append(ScanRow(n, k, g, result.r, result.host_order, "theorem_applies"))
            else:
                rows.append(ScanRow(n, k, g, None, None, "gcd_excluded"))
    return rows


def scan_to_csv(rows: Sequence[ScanRow]) -> str:
    lines = ["n,k,gcd,r,host_order,status"]
    for row in rows:
        r = "" if row.r is None else str(row.r)
        ho = "" if row.host_order is None else str(row.host_order)
        lines.append(f"{row.n},{row.k},{row.gcd},{r},{ho},{row.status}")
    return "\n".join(lines) + "\n"
