"""Small simple graphs and digraphs: parsing, cycles, components, automorphisms.

Vertices are dense integers starting at 0.  Edges of an undirected graph are
stored sorted, so every graph has one fixed edge order; edge indices into that
order are what colorings and cycle records refer to.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleCapExceeded, GraphFormatError, SizeBoundExceeded

VertexPermutation = tuple[int, ...]

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_AUT_BOUND = 64


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..vertex_count-1.

    Edges are normalized to (u, v) with u < v and stored in sorted order;
    the position of an edge in ``edges`` is its edge index.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            normalized.append((u, v) if u < v else (v, u))
        ordered = tuple(sorted(normalized))
        for i in range(1, len(ordered)):
            if ordered[i] == ordered[i - 1]:
                raise ValueError(f"duplicate edge {ordered[i]}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", ordered)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neigh: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        return Graph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass(frozen=True)
class Digraph:
    """A directed graph; at most one arc per ordered pair, no loops.

    Antiparallel pairs (u,v) and (v,u) are allowed.  Arc order is the
    construction order and arc indices refer to it.
    """

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]]):
        arcs = tuple((int(u), int(v)) for u, v in arcs)
        seen = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"arc ({u},{v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "arcs", arcs)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_index(self) -> dict[tuple[int, int], int]:
        return {a: i for i, a in enumerate(self.arcs)}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_index

    @cached_property
    def underlying_graph(self) -> Graph:
        return Graph(self.vertex_count, set((u, v) if u < v else (v, u) for u, v in self.arcs))


@dataclass(frozen=True)
class Walk:
    """A walk through a digraph: arc indices plus traversal signs (+1/-1).

    Sign +1 means the arc is traversed tail-to-head, -1 head-to-tail.
    """

    arc_refs: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arc_refs) != len(self.signs):
            raise ValueError("arc_refs and signs must have equal length")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def vertex_sequence(self, d: Digraph, start: int | None = None) -> tuple[int, ...]:
        """Vertices visited, checking step-to-step incidence."""
        seq = []
        cur = start
        for ref, sign in zip(self.arc_refs, self.signs):
            tail, head = d.arcs[ref]
            src, dst = (tail, head) if sign == 1 else (head, tail)
            if cur is None:
                cur = src
                seq.append(cur)
            if src != cur:
                raise ValueError("walk steps are not incident")
            cur = dst
            seq.append(cur)
        if cur is None:
            raise ValueError("empty walk needs an explicit start vertex")
        return tuple(seq)

    def underline(self, d: Digraph) -> Digraph:
        """The subdigraph carrying the walk's arcs."""
        return Digraph(d.vertex_count, sorted({d.arcs[r] for r in self.arc_refs}))


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, canonically rotated.

    ``vertices`` starts at the smallest vertex of the cycle and runs toward
    its smaller-indexed neighbour, so each cycle has one representation.
    ``edge_refs[i]`` is the edge index of {vertices[i], vertices[i+1]} with
    the wrap-around edge last.
    """

    vertices: tuple[int, ...]
    edge_refs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_refs)


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """All simple cycles of ``g``, each exactly once, sorted by (length, vertices).

    Raises CycleCapExceeded when more than ``cap`` cycles exist.
    """
    adjacency = g.adjacency
    cycles: list[Cycle] = []
    n = g.vertex_count
    adj_mask = [0] * n
    use_matrix = n * n <= 1 << 22
    edge_at: list[int] | dict[int, int]
    edge_at = [-1] * (n * n) if use_matrix else {}
    for i, (u, v) in enumerate(g.edges):
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
        edge_at[u * n + v] = i
        edge_at[v * n + u] = i
    for s in range(n):
        # Paths s, v1, ..., vk with all vi > s; a cycle closes when vk sees s.
        # Each cycle appears once per direction; keeping v1 < vk picks one.
        adj_s = [[w for w in adjacency[v] if w > s] for v in range(n)]
        path = [s]
        path_edges: list[int] = []
        on_mask = 1 << s
        frame_lists = [adj_s[s]]
        frame_pos = [0]
        while frame_lists:
            lst = frame_lists[-1]
            pos = frame_pos[-1]
            if pos == len(lst):
                frame_lists.pop()
                frame_pos.pop()
                on_mask &= ~(1 << path.pop())
                if path_edges:
                    path_edges.pop()
                continue
            frame_pos[-1] = pos + 1
            w = lst[pos]
            if on_mask >> w & 1:
                continue
            path_edges.append(edge_at[path[-1] * n + w])
            path.append(w)
            on_mask |= 1 << w
            if len(path) >= 3 and adj_mask[w] >> s & 1 and path[1] < w:
                if len(cycles) >= cap:
                    raise CycleCapExceeded(cap)
                cycles.append(
                    Cycle(tuple(path), tuple(path_edges) + (edge_at[w * n + s],))
                )
            frame_lists.append(adj_s[w])
            frame_pos.append(0)
    cycles.sort(key=lambda c: (len(c), c.vertices))
    return cycles


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex partition into connected components, each sorted, ordered by minimum."""
    n = g.vertex_count
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _distance_rows(g: Graph) -> list[list[int]]:
    n = g.vertex_count
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        rows.append(dist)
    return rows


def compose(p: VertexPermutation, q: VertexPermutation) -> VertexPermutation:
    """Permutation applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: VertexPermutation) -> VertexPermutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.vertex_count)):
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)


def automorphisms(g: Graph, bound: int = DEFAULT_AUT_BOUND) -> list[VertexPermutation]:
    """The full automorphism group, lexicographically sorted (identity first).

    Plain backtracking over vertex images, pruned by degree and
    distance-vector invariants.
    """
    n = g.vertex_count
    if n > bound:
        raise SizeBoundExceeded(f"automorphism search limited to {bound} vertices")
    if n == 0:
        return [()]
    dist = _distance_rows(g)
    invariant = []
    for v in range(n):
        row = sorted(dist[v])
        ndegs = sorted(g.degree(u) for u in g.adjacency[v])
        invariant.append((g.degree(v), tuple(row), tuple(ndegs)))
    candidates = [
        [w for w in range(n) if invariant[w] == invariant[v]] for v in range(n)
    ]

    # Process most-constrained vertices first, preferring neighbours of
    # already-placed vertices so adjacency pruning bites early.
    order: list[int] = []
    placed = set()
    while len(order) < n:
        pool = [v for v in range(n) if v not in placed]
        adjacent_pool = [v for v in pool if any(u in placed for u in g.adjacency[v])]
        pick_from = adjacent_pool or pool
        v = min(pick_from, key=lambda x: (len(candidates[x]), x))
        order.append(v)
        placed.add(v)

    result: list[VertexPermutation] = []
    mapping = [-1] * n
    used = [False] * n

    def extend(depth: int) -> None:
        if depth == n:
            result.append(tuple(mapping))
            return
        v = order[depth]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:depth]:
                if g.has_edge(v, u) != g.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                extend(depth + 1)
                used[w] = False
                mapping[v] = -1

    extend(0)
    result.sort()
    return result


# ---------------------------------------------------------------------------
# graph6 format


def _parse_graph6_number(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise GraphFormatError("missing graph6 size header", pos)
    b = data[pos]
    if b < 63 or b > 126:
        raise GraphFormatError(f"byte {b} outside graph6 range 63..126", pos)
    if b != 126:
        return b - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk, start = data[pos + 2 : pos + 8], pos + 2
        width = 6
    else:
        chunk, start = data[pos + 1 : pos + 4], pos + 1
        width = 3
    if len(chunk) < width:
        raise GraphFormatError("truncated graph6 size header", len(data))
    value = 0
    for i, byte in enumerate(chunk):
        if byte < 63 or byte > 126:
            raise GraphFormatError(f"byte {byte} outside graph6 range 63..126", start + i)
        value = (value << 6) | (byte - 63)
    return value, start + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` prefix allowed)."""
    try:
        data = text.strip().encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII byte in graph6 input", exc.start) from None
    offset = 0
    if data.startswith(b">>graph6<<"):
        offset = len(b">>graph6<<")
    n, pos = _parse_graph6_number(data, offset)
    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    if len(data) - pos < byte_count:
        raise GraphFormatError(
            f"graph6 body too short: need {byte_count} bytes for {n} vertices", len(data)
        )
    if len(data) - pos > byte_count:
        raise GraphFormatError("trailing garbage after graph6 body", pos + byte_count)
    edges = []
    bit = 0
    value = 0
    filled = 0
    cursor = pos
    for col in range(1, n):
        for row in range(col):
            if filled == 0:
                b = data[cursor]
                if b < 63 or b > 126:
                    raise GraphFormatError(f"byte {b} outside graph6 range 63..126", cursor)
                value = b - 63
                filled = 6
                cursor += 1
            filled -= 1
            bit = (value >> filled) & 1
            if bit:
                edges.append((row, col))
    if filled and value & ((1 << filled) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 body", cursor - 1)
    # Remaining body bytes (if any) were counted above, so cursor is final.
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (minimal size header, zero padding)."""
    n = g.vertex_count
    if n <= 62:
        header = bytes([n + 63])
    elif n <= 258047:
        header = bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise SizeBoundExceeded("graph6 encoding limited to 258047 vertices")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = (value << 1) | b
        body.append(value + 63)
    return (header + bytes(body)).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a graph.

    Vertices are the nonnegative integer labels themselves; the graph has
    max(label)+1 vertices.  Duplicate edges and loops are rejected.
    """
    tokens = [(m.group(0), m.start()) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise GraphFormatError("empty edge list", 0)
    if len(tokens) % 2 != 0:
        raise GraphFormatError("odd number of tokens in edge list", tokens[-1][1])
    pairs = []
    for (tok_u, off_u), (tok_v, off_v) in zip(tokens[::2], tokens[1::2]):
        try:
            u = int(tok_u)
        except ValueError:
            raise GraphFormatError(f"non-integer token {tok_u!r}", off_u) from None
        try:
            v = int(tok_v)
        except ValueError:
            raise GraphFormatError(f"non-integer token {tok_v!r}", off_v) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex label", off_u)
        if u == v:
            raise GraphFormatError(f"loop {u} {v}", off_u)
        pairs.append(((u, v) if u < v else (v, u), off_u))
    seen: dict[tuple[int, int], int] = {}
    for e, off in pairs:
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", off)
        seen[e] = off
    n = 1 + max(max(e) for e, _ in pairs)
    return Graph(n, [e for e, _ in pairs])


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# ---------------------------------------------------------------------------
# DOT rendering

DOT_PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple", "brown",
    "deepskyblue", "magenta", "goldenrod", "gray40", "darkcyan", "olive",
)


def _dot_color(c: int, palette: Sequence[str]) -> str:
    return palette[(c - 1) % len(palette)]


def to_dot(
    obj,
    *,
    name: str = "G",
    edge_colors: Sequence[int] | None = None,
    highlight: Iterable[int] = (),
    palette: Sequence[str] = DOT_PALETTE,
) -> str:
    """Render a Graph, Digraph, or candidate orientation as DOT.

    ``edge_colors`` colors the edges of an undirected graph (by edge index).
    ``highlight`` fills the given vertices.  Candidate orientations carry
    their own arc colors; antiparallel same-color pairs render as one edge
    with ``dir=both``.
    """
    digraph = getattr(obj, "digraph", None)
    arc_colors = getattr(obj, "arc_colors", None)
    if digraph is None and isinstance(obj, Digraph):
        digraph = obj
    highlight = set(highlight)
    lines = []
    if digraph is not None:
        lines.append(f"digraph {name} {{")
        for v in range(digraph.vertex_count):
            style = ' [style=filled, fillcolor=black, fontcolor=white]' if v in highlight else ""
            lines.append(f"  {v}{style};")
        emitted = set()
        for i, (u, v) in enumerate(digraph.arcs):
            if i in emitted:
                continue
            attrs = []
            color = arc_colors[i] if arc_colors is not None else None
            j = digraph.arc_index.get((v, u))
            both = (
                j is not None
                and (arc_colors is None or arc_colors[j] == color)
            )
            if both:
                emitted.add(j)
                attrs.append("dir=both")
            if color is not None:
                attrs.append(f'color={_dot_color(color, palette)}')
                attrs.append(f'tooltip="color {color}"')
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  {u} -> {v}{suffix};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    g: Graph = obj
    lines.append(f"graph {name} {{")
    for v in range(g.vertex_count):
        style = ' [style=filled, fillcolor=black, fontcolor=white]' if v in highlight else ""
        lines.append(f"  {v}{style};")
    for i, (u, v) in enumerate(g.edges):
        attrs = []
        if edge_colors is not None:
            c = edge_colors[i]
            attrs.append(f"color={_dot_color(c, palette)}")
            attrs.append(f'tooltip="color {c}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
