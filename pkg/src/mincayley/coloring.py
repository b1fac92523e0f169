"""Faithful no-lonely-color edge colorings: verification and enumeration.

A total coloring of a graph is *faithful no-lonely-color* when

  1. every color class has maximum degree at most 2,
  2. no cycle of the graph contains exactly one edge of any color,
  3. within each color class, all cycles have the same length.

Condition 2 is checked through its cut reformulation: every edge of a color
class must have its endpoints in different components of the graph minus
that class.

Colorings are kept in *canonical first-use labeling*: color classes are
numbered 1, 2, ... by the smallest edge index they contain.  Validity only
depends on the partition into classes, so the canonical form is the natural
deduplicated representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import DisconnectedGraphError, SizeBoundExceeded
from .graphs import DEFAULT_CYCLE_CAP, Graph, enumerate_cycles

BRUTE_FORCE_EDGE_BOUND = 12


@dataclass(frozen=True)
class EdgeColoring:
    """Edge colors by edge index; 0 means uncolored.

    A total coloring has no zeros, and a canonical total coloring uses the
    colors 1..color_count with classes numbered by first use along the edge
    order.
    """

    colors: tuple[int, ...]

    def __init__(self, colors):
        colors = tuple(int(c) for c in colors)
        if any(c < 0 for c in colors):
            raise ValueError("colors must be nonnegative (0 = uncolored)")
        object.__setattr__(self, "colors", colors)

    @property
    def color_count(self) -> int:
        return max(self.colors, default=0)

    @property
    def is_total(self) -> bool:
        return 0 not in self.colors

    @cached_property
    def classes(self) -> dict[int, tuple[int, ...]]:
        """Edge indices per color, uncolored (0) excluded."""
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            if c:
                out.setdefault(c, []).append(i)
        return {c: tuple(v) for c, v in sorted(out.items())}

    def canonical(self) -> "EdgeColoring":
        return EdgeColoring(first_use_relabel(self.colors))


def first_use_relabel(word) -> tuple[int, ...]:
    """Relabel nonzero colors to 1, 2, ... in order of first occurrence."""
    mapping: dict[int, int] = {}
    out = []
    for c in word:
        if c == 0:
            out.append(0)
            continue
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


@dataclass(frozen=True)
class ColoringVerdict:
    """Outcome of verify_coloring.

    For an invalid coloring, ``violated_condition`` is one of "degree",
    "lonely_cycle", "cycle_length" and ``witness`` holds edge indices:
    the offending class edges at a vertex, a cycle meeting a class in
    exactly one edge, or the union of two same-class cycles of different
    lengths.
    """

    valid: bool
    violated_condition: str | None = None
    witness: tuple[int, ...] | None = None


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def cut_condition(g: Graph, f: EdgeColoring, color: int) -> bool:
    """True iff every edge of the class has its endpoints in different
    components of the graph minus the class."""
    class_edges = [i for i, c in enumerate(f.colors) if c == color]
    if not class_edges:
        raise ValueError(f"color {color} is unused")
    return _cut_ok(g, f.colors, color)


def _cut_ok(g: Graph, colors, color: int) -> bool:
    dsu = _DSU(g.vertex_count)
    for i, (u, v) in enumerate(g.edges):
        if colors[i] != color:
            dsu.union(u, v)
    for i, (u, v) in enumerate(g.edges):
        if colors[i] == color and dsu.find(u) == dsu.find(v):
            return False
    return True


def _class_components(g: Graph, edge_ids) -> list[tuple[list[int], list[int]]]:
    """Connected components of an edge subset as (vertices, edge_ids) pairs."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in edge_ids:
        u, v = g.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    seen_v: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen_v:
            continue
        verts = [start]
        seen_v.add(start)
        queue = [start]
        comp_edges = set()
        while queue:
            x = queue.pop()
            for y, i in adj[x]:
                comp_edges.add(i)
                if y not in seen_v:
                    seen_v.add(y)
                    verts.append(y)
                    queue.append(y)
        comps.append((sorted(verts), sorted(comp_edges)))
    return comps


def _lonely_cycle_witness(g: Graph, colors, color: int) -> tuple[int, ...]:
    """A cycle containing exactly one edge of the class (the class edge plus
    a connecting path that avoids the class)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(g.edges):
        if colors[i] != color:
            adj[u].append((v, i))
            adj[v].append((u, i))
    for i, (u, v) in enumerate(g.edges):
        if colors[i] != color:
            continue
        prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = [u]
        head = 0
        while head < len(queue) and v not in prev:
            x = queue[head]
            head += 1
            for y, j in adj[x]:
                if y not in prev:
                    prev[y] = (x, j)
                    queue.append(y)
        if v in prev:
            path_edges = [i]
            x = v
            while x != u:
                x, j = prev[x]
                path_edges.append(j)
            return tuple(sorted(path_edges))
    raise AssertionError("no lonely cycle found despite failing cut condition")


def verify_coloring(g: Graph, f: EdgeColoring) -> ColoringVerdict:
    """Check all three conditions on a total coloring, with a witness on failure."""
    if len(f.colors) != g.edge_count:
        raise ValueError("coloring length does not match edge count")
    if not f.is_total:
        raise ValueError("partial coloring rejected; verification requires a total coloring")
    for color, edge_ids in f.classes.items():
        degree: dict[int, list[int]] = {}
        for i in edge_ids:
            for x in g.edges[i]:
                degree.setdefault(x, []).append(i)
        for x, incident in degree.items():
            if len(incident) > 2:
                return ColoringVerdict(False, "degree", tuple(sorted(incident)))
    for color in f.classes:
        if not _cut_ok(g, f.colors, color):
            return ColoringVerdict(
                False, "lonely_cycle", _lonely_cycle_witness(g, f.colors, color)
            )
    for color, edge_ids in f.classes.items():
        cycle_lengths: dict[int, tuple[int, ...]] = {}
        for verts, comp_edges in _class_components(g, edge_ids):
            if len(comp_edges) == len(verts):  # max degree 2 and connected: a cycle
                length = len(comp_edges)
                if cycle_lengths and length not in cycle_lengths:
                    other = next(iter(cycle_lengths.values()))
                    return ColoringVerdict(
                        False, "cycle_length", tuple(sorted(set(other) | set(comp_edges)))
                    )
                cycle_lengths[length] = tuple(comp_edges)
    return ColoringVerdict(True)


# ---------------------------------------------------------------------------
# Exhaustive enumeration


def enumerate_colorings(
    g: Graph,
    *,
    first_only: bool = False,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> Iterator[EdgeColoring]:
    """Stream every faithful no-lonely-color coloring of a connected graph,
    exactly once, in canonical first-use labeling.

    The search extends one color class at a time.  A cycle with a unique
    uncolored edge forces that edge into the current class; otherwise, if the
    current class satisfies the cut condition the search may open a fresh
    color on the smallest uncolored edge, and also tries growing the current
    class on every uncolored edge; if the cut condition fails, growth is
    restricted to the uncolored edges of a cycle in which the current color
    is lonely.  Partial classes exceeding degree 2, acquiring cycles of two
    lengths, or leaving a lonely color on a fully colored cycle are pruned.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("coloring enumeration requires a connected graph")
    m = g.edge_count
    if m == 0:
        yield EdgeColoring(())
        return

    cycles = enumerate_cycles(g, cap=cycle_cap)
    ncyc = len(cycles)
    cycle_len = [len(c) for c in cycles]
    cycle_edges = [list(c.edge_refs) for c in cycles]
    edge_cycles: list[list[int]] = [[] for _ in range(m)]
    for ci, refs in enumerate(cycle_edges):
        for e in refs:
            edge_cycles[e].append(ci)

    colors = [0] * m
    uncolored_left = m
    unc = cycle_len[:]          # uncolored edges per cycle
    cur = [0] * ncyc            # edges of the current color per cycle
    class_deg = [0] * g.vertex_count
    full_lengths: dict[int, int] = {}  # length -> count of current-class cycles
    memo: set[bytes] = set()

    def cut_valid(color: int) -> bool:
        return _cut_ok(g, colors, color)

    def assign(e: int, newly_full: list[int]) -> bool:
        """Color edge e with the current color; gates and prunes.

        Returns False (and rolls back) if the class would exceed degree 2,
        collect cycles of two lengths, or leave a lonely color on a fully
        colored cycle.
        """
        u, v = g.edges[e]
        if class_deg[u] >= 2 or class_deg[v] >= 2:
            return False
        ok = True
        for ci in edge_cycles[e]:
            unc[ci] -= 1
            cur[ci] += 1
            if cur[ci] == cycle_len[ci]:
                newly_full.append(ci)
                full_lengths[cycle_len[ci]] = full_lengths.get(cycle_len[ci], 0) + 1
            if unc[ci] == 0 and cur[ci] == 1:
                ok = False
        if len(full_lengths) > 1:
            ok = False
        if not ok:
            unassign_cycles(e, newly_full)
            return False
        class_deg[u] += 1
        class_deg[v] += 1
        return True

    def unassign_cycles(e: int, newly_full: list[int]) -> None:
        for ci in newly_full:
            count = full_lengths[cycle_len[ci]]
            if count == 1:
                del full_lengths[cycle_len[ci]]
            else:
                full_lengths[cycle_len[ci]] = count - 1
        for ci in edge_cycles[e]:
            unc[ci] += 1
            cur[ci] -= 1

    def unassign(e: int, newly_full: list[int]) -> None:
        u, v = g.edges[e]
        class_deg[u] -= 1
        class_deg[v] -= 1
        unassign_cycles(e, newly_full)

    def try_edge(e: int, color: int) -> Iterator[EdgeColoring]:
        nonlocal uncolored_left
        newly_full: list[int] = []
        colors[e] = color
        if assign(e, newly_full):
            uncolored_left -= 1
            yield from search(color)
            uncolored_left += 1
            unassign(e, newly_full)
        colors[e] = 0

    def open_color(e: int, color: int) -> Iterator[EdgeColoring]:
        """Start class ``color`` on edge e; current-class cycle counters reset."""
        nonlocal cur, class_deg, full_lengths, uncolored_left
        saved = (cur, class_deg, full_lengths)
        cur = [0] * ncyc
        class_deg = [0] * g.vertex_count
        full_lengths = {}
        newly_full: list[int] = []
        colors[e] = color
        if assign(e, newly_full):
            uncolored_left -= 1
            yield from search(color)
            uncolored_left += 1
            unassign(e, newly_full)
        colors[e] = 0
        cur, class_deg, full_lengths = saved

    def search(c: int) -> Iterator[EdgeColoring]:
        key = bytes(colors)
        if key in memo:
            return
        memo.add(key)
        if uncolored_left == 0:
            if cut_valid(c):
                yield EdgeColoring(colors)
            return
        # A cycle with a unique uncolored edge forces that edge's color.
        for ci in range(ncyc):
            if unc[ci] == 1:
                e = next(e for e in cycle_edges[ci] if colors[e] == 0)
                yield from try_edge(e, c)
                return
        if cut_valid(c):
            e_star = colors.index(0)
            yield from open_color(e_star, c + 1)
            next_edges = [e for e in range(m) if colors[e] == 0]
        else:
            lonely = next(
                (ci for ci in range(ncyc) if cur[ci] == 1 and unc[ci] > 0), None
            )
            if lonely is None:
                return  # a lonely cycle is fully colored; no extension can fix it
            next_edges = [e for e in cycle_edges[lonely] if colors[e] == 0]
        for e in next_edges:
            yield from try_edge(e, c)

    emitted = 0
    for coloring in open_color(0, 1):
        yield coloring
        emitted += 1
        if first_only:
            return


def all_colorings(g: Graph, **kwargs) -> list[EdgeColoring]:
    return list(enumerate_colorings(g, **kwargs))


# ---------------------------------------------------------------------------
# Independent brute-force oracle


def brute_force_colorings(g: Graph, max_colors: int) -> set[EdgeColoring]:
    """All valid total colorings with at most ``max_colors`` colors, found by
    scanning canonical color assignments edge by edge.

    Independent of the class-extension search: plain first-use assignment
    order with monotone pruning (class degree, fully-assigned lonely cycles,
    same-class cycle lengths), then a full verify_coloring pass.
    """
    m = g.edge_count
    if m > BRUTE_FORCE_EDGE_BOUND:
        raise SizeBoundExceeded(
            f"brute force limited to {BRUTE_FORCE_EDGE_BOUND} edges, got {m}"
        )
    if m == 0:
        return {EdgeColoring(())}

    cycles = enumerate_cycles(g)
    cycle_len = [len(c) for c in cycles]
    cycle_edge_lists = [list(c.edge_refs) for c in cycles]
    edge_cycles: list[list[int]] = [[] for _ in range(m)]
    for ci, refs in enumerate(cycle_edge_lists):
        for e in refs:
            edge_cycles[e].append(ci)

    colors = [0] * m
    deg: list[list[int]] = []        # per color: vertex degrees in the class
    counts: list[list[int]] = []     # per color: class edges on each cycle
    class_lengths: list[dict[int, int]] = []  # per color: full-cycle length tally
    unassigned = cycle_len[:]
    found: set[EdgeColoring] = set()

    def has_lonely(ci: int, e: int, col: int) -> bool:
        tally: dict[int, int] = {}
        for x in cycle_edge_lists[ci]:
            cx = col if x == e else colors[x]
            tally[cx] = tally.get(cx, 0) + 1
        return any(v == 1 for v in tally.values())

    def fits(e: int, col: int) -> bool:
        u, v = g.edges[e]
        if deg[col - 1][u] >= 2 or deg[col - 1][v] >= 2:
            return False
        for ci in edge_cycles[e]:
            # Fully assigned cycle: its color tallies are final.
            if unassigned[ci] == 1 and has_lonely(ci, e, col):
                return False
            # Cycle absorbed whole into the class: lengths must agree.
            if counts[col - 1][ci] + 1 == cycle_len[ci]:
                lengths = class_lengths[col - 1]
                if lengths and cycle_len[ci] not in lengths:
                    return False
        return True

    def place(e: int, col: int) -> None:
        u, v = g.edges[e]
        colors[e] = col
        deg[col - 1][u] += 1
        deg[col - 1][v] += 1
        for ci in edge_cycles[e]:
            unassigned[ci] -= 1
            counts[col - 1][ci] += 1
            if counts[col - 1][ci] == cycle_len[ci]:
                lengths = class_lengths[col - 1]
                lengths[cycle_len[ci]] = lengths.get(cycle_len[ci], 0) + 1

    def remove(e: int, col: int) -> None:
        u, v = g.edges[e]
        colors[e] = 0
        deg[col - 1][u] -= 1
        deg[col - 1][v] -= 1
        for ci in edge_cycles[e]:
            unassigned[ci] += 1
            if counts[col - 1][ci] == cycle_len[ci]:
                lengths = class_lengths[col - 1]
                if lengths[cycle_len[ci]] == 1:
                    del lengths[cycle_len[ci]]
                else:
                    lengths[cycle_len[ci]] -= 1
            counts[col - 1][ci] -= 1

    def scan(e: int, used: int) -> None:
        if e == m:
            f = EdgeColoring(colors)
            if verify_coloring(g, f).valid:
                found.add(f)
            return
        limit = min(used + 1, max_colors)
        for col in range(1, limit + 1):
            if col > len(deg):
                deg.append([0] * g.vertex_count)
                counts.append([0] * len(cycles))
                class_lengths.append({})
            if fits(e, col):
                place(e, col)
                scan(e + 1, max(used, col))
                remove(e, col)

    scan(0, 0)
    return found
