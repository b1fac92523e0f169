"""Cycle-pattern consistency of candidate orientations, and the obstruction
pipeline built on top of it.

For every simple cycle of the underlying graph, both rotational traversals
and every starting offset yield a color/sign pattern.  Following such a
pattern from any vertex must either die for lack of a matching arc or come
back to the start through distinct vertices; a walk that completes but ends
elsewhere, or revisits a vertex, rules the candidate out.

Vertex-transitivity makes full Cayley digraphs pass this check, so a graph
whose every coloring/orientation candidate fails cannot be a subgraph of
any minimal Cayley graph.  Surviving candidates prove nothing: the verdict
is only ever "NotSubgraph" or "Inconclusive".
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .coloring import EdgeColoring, enumerate_colorings, verify_coloring
from .errors import DisconnectedGraphError, SizeBoundExceeded
from .graphs import DEFAULT_CYCLE_CAP, Cycle, Graph, enumerate_cycles
from .orientation import CandidateOrientation, enumerate_orientations, is_valid_local
from .symmetry import reduce_colorings

OUTCOME_NO_PATH = "no_path"
OUTCOME_CLOSED_SIMPLE = "closed_simple"
OUTCOME_OPEN = "open_or_selfintersecting"


@dataclass(frozen=True)
class PatternTrace:
    """Record of following one color/sign pattern from one start vertex."""

    start: int
    colors: tuple[int, ...]
    signs: tuple[int, ...]
    outcome: str
    visited: tuple[int, ...]


class _StepTables:
    """Unique-successor lookup per (color, sign); sentinel index n = missing.

    Construction asserts the degree discipline: at most one arc per color
    and direction at any vertex.
    """

    def __init__(self, d: CandidateOrientation):
        n = d.digraph.vertex_count
        self.n = n
        self.tables: dict[tuple[int, int], np.ndarray] = {}
        self._tensor: np.ndarray | None = None
        for (u, v), c in zip(d.digraph.arcs, d.arc_colors):
            fwd = self._table(c, 1)
            bwd = self._table(c, -1)
            assert fwd[u] == n, "two arcs of one color leave one vertex"
            assert bwd[v] == n, "two arcs of one color enter one vertex"
            fwd[u] = v
            bwd[v] = u

    def _table(self, color: int, sign: int) -> np.ndarray:
        key = (color, sign)
        table = self.tables.get(key)
        if table is None:
            table = np.full(self.n + 1, self.n, dtype=np.int64)
            self.tables[key] = table
        return table

    def step(self, vertex: int, color: int, sign: int) -> int:
        """Successor vertex or -1 when no arc matches."""
        table = self.tables.get((color, sign))
        if table is None:
            return -1
        nxt = int(table[vertex])
        return -1 if nxt == self.n else nxt

    def tensor(self) -> np.ndarray:
        """Tables stacked in sorted-key order, for batched tracing."""
        if self._tensor is None:
            self._tensor = np.stack([self.tables[k] for k in sorted(self.tables)])
        return self._tensor


def follow_pattern(
    d: CandidateOrientation,
    start: int,
    colors: Sequence[int],
    signs: Sequence[int],
    tables: _StepTables | None = None,
) -> PatternTrace:
    """Walk from ``start`` taking, at step i, the unique arc of color
    colors[i] forwards (sign +1) or backwards (sign -1)."""
    if tables is None:
        tables = _StepTables(d)
    colors = tuple(colors)
    signs = tuple(signs)
    visited = [start]
    cur = start
    for c, s in zip(colors, signs):
        nxt = tables.step(cur, c, s)
        if nxt < 0:
            return PatternTrace(start, colors, signs, OUTCOME_NO_PATH, tuple(visited))
        cur = nxt
        visited.append(cur)
    closed = visited[-1] == start and len(set(visited[:-1])) == len(visited) - 1
    outcome = OUTCOME_CLOSED_SIMPLE if closed else OUTCOME_OPEN
    return PatternTrace(start, colors, signs, outcome, tuple(visited))


def _cycle_base_pattern(
    d: CandidateOrientation, cycle: Cycle
) -> tuple[list[int], list[int]]:
    """Colors and signs of one forward traversal of a cycle."""
    has_arc = d.digraph.arc_index
    coloring = d.coloring.colors
    verts = cycle.vertices
    length = len(verts)
    colors = [coloring[e] for e in cycle.edge_refs]
    signs = [
        1 if (verts[i], verts[(i + 1) % length]) in has_arc else -1
        for i in range(length)
    ]
    return colors, signs


def _cycle_patterns(
    d: CandidateOrientation, cycle: Cycle
) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All color/sign patterns of one cycle: both rotational directions and
    every starting offset."""
    colors, signs = _cycle_base_pattern(d, cycle)
    length = len(colors)
    # Reversing the traversal reverses edge order and flips every sign.
    rev_colors = list(reversed(colors))
    rev_signs = [-s for s in reversed(signs)]
    for cols, sgns in ((colors, signs), (rev_colors, rev_signs)):
        doubled_c = cols + cols
        doubled_s = sgns + sgns
        for offset in range(length):
            yield (
                tuple(doubled_c[offset : offset + length]),
                tuple(doubled_s[offset : offset + length]),
            )


def _pattern_fails_somewhere(tables: _StepTables, colors, signs) -> bool:
    """Vectorized trace from every start vertex; True when some completed
    walk is open or self-intersecting."""
    n = tables.n
    if n == 0:
        return False
    length = len(colors)
    visited = np.empty((n, length + 1), dtype=np.int64)
    cur = np.arange(n, dtype=np.int64)
    visited[:, 0] = cur
    for i, (c, s) in enumerate(zip(colors, signs)):
        table = tables.tables.get((c, s))
        if table is None:
            return False  # nobody can finish this pattern
        cur = table[cur]
        visited[:, i + 1] = cur
    finished = cur != n
    if not finished.any():
        return False
    rows = visited[finished]
    closed = rows[:, -1] == rows[:, 0]
    prefix = np.sort(rows[:, :length], axis=1)
    distinct = (np.diff(prefix, axis=1) != 0).all(axis=1)
    return bool((~(closed & distinct)).any())


def _batch_fails(tables: _StepTables, step_rows: list[list[int]]) -> bool:
    """Trace many same-length patterns from every start vertex at once.

    ``step_rows`` holds per-pattern sequences of step-table ids (see
    check_cycles).  True when any completed walk is open or
    self-intersecting.
    """
    n = tables.n
    if n == 0 or not step_rows:
        return False
    tensor = tables.tensor()
    tid = np.asarray(step_rows, dtype=np.int64)
    count, length = tid.shape
    cur = np.tile(np.arange(n, dtype=np.int64), (count, 1))
    visited = np.empty((count, n, length + 1), dtype=np.int64)
    visited[:, :, 0] = cur
    for i in range(length):
        cur = np.take_along_axis(tensor[tid[:, i]], cur, axis=1)
        visited[:, :, i + 1] = cur
    finished = cur != n
    if not finished.any():
        return False
    closed = visited[:, :, length] == visited[:, :, 0]
    prefix = np.sort(visited[:, :, :length], axis=2)
    distinct = (np.diff(prefix, axis=2) != 0).all(axis=2)
    return bool((finished & ~(closed & distinct)).any())


def check_cycles(
    d: CandidateOrientation,
    cycles: Sequence[Cycle] | None = None,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> bool:
    """True iff every cycle's pattern, followed from every vertex, either
    finds no path or closes simply.

    Patterns are deduplicated as byte strings and traced in batches per
    cycle length (cycles come sorted by length, so failures on short
    cycles still exit early).
    """
    if cycles is None:
        cycles = enumerate_cycles(d.graph, cap=cycle_cap)
    tables = _StepTables(d)
    # step-table id per (color, sign); 0xFF marks steps with no arcs at all,
    # whose patterns die everywhere and so can never fail
    table_ids = {key: i for i, key in enumerate(sorted(tables.tables))}
    if len(table_ids) >= 255:
        raise SizeBoundExceeded("more than 127 distinct arc colors")
    # Per edge: step id when traversed small-to-large endpoint, and reversed.
    g = d.graph
    coloring = d.coloring.colors
    arc_index = d.digraph.arc_index
    asc_id = bytearray(g.edge_count)
    desc_id = bytearray(g.edge_count)
    for e, (u, v) in enumerate(g.edges):
        c = coloring[e]
        sign = 1 if (u, v) in arc_index else -1
        asc_id[e] = table_ids.get((c, sign), 0xFF)
        desc_id[e] = table_ids.get((c, -sign), 0xFF)
    seen: set[bytes] = set()
    idx = 0
    total = len(cycles)
    while idx < total:
        length = len(cycles[idx])
        batch: list[list[int]] = []
        while idx < total and len(cycles[idx]) == length:
            cycle = cycles[idx]
            idx += 1
            verts = cycle.vertices
            fw = bytearray(length)
            op = bytearray(length)  # same edges traversed the other way
            for i, e in enumerate(cycle.edge_refs):
                ascending = verts[i] < verts[(i + 1) % length]
                fw[i] = asc_id[e] if ascending else desc_id[e]
                op[i] = desc_id[e] if ascending else asc_id[e]
            forward = bytes(fw)
            backward = bytes(reversed(op))
            for doubled in (forward * 2, backward * 2):
                for offset in range(length):
                    key = doubled[offset : offset + length]
                    if key in seen:
                        continue
                    seen.add(key)
                    if 0xFF not in key:
                        batch.append(list(key))
        if _batch_fails(tables, batch):
            return False
    return True


# ---------------------------------------------------------------------------
# Pipeline


@dataclass(frozen=True)
class Verdict:
    """Outcome of the obstruction pipeline.

    "NotSubgraph" when no coloring/orientation candidate survives: the graph
    is not a subgraph of any minimal Cayley graph.  "Inconclusive" otherwise,
    with the surviving candidates as witnesses.
    """

    status: str  # "NotSubgraph" | "Inconclusive"
    witnesses: tuple[tuple[EdgeColoring, CandidateOrientation], ...]
    colorings_total: int
    colorings_reduced: int
    candidates_checked: int


def _survivors_for_coloring(
    g: Graph, f: EdgeColoring, cycles: Sequence[Cycle], first_witness: bool
) -> tuple[int, list[CandidateOrientation]]:
    checked = 0
    good: list[CandidateOrientation] = []
    for candidate in enumerate_orientations(g, f):
        checked += 1
        assert is_valid_local(candidate)
        if check_cycles(candidate, cycles):
            good.append(candidate)
            if first_witness:
                break
    return checked, good


def _pipeline_task(args) -> tuple[int, list[CandidateOrientation]]:
    g, f, cycles, first_witness = args
    return _survivors_for_coloring(g, f, cycles, first_witness)


def obstruction_pipeline(
    g: Graph,
    *,
    first_witness: bool = False,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    jobs: int = 1,
) -> Verdict:
    """Colorings -> symmetry reduction -> orientations -> cycle-pattern check.

    Collects every surviving (coloring, orientation) pair unless
    ``first_witness`` asks for the early exit.  ``jobs`` > 1 distributes the
    per-coloring work over processes; the verdict does not depend on it.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("the obstruction pipeline requires a connected graph")
    colorings = list(enumerate_colorings(g, cycle_cap=cycle_cap))
    for f in colorings:
        assert verify_coloring(g, f).valid
    reduced = reduce_colorings(g, colorings)
    cycles = enumerate_cycles(g, cap=cycle_cap)

    witnesses: list[tuple[EdgeColoring, CandidateOrientation]] = []
    checked = 0
    if jobs > 1 and len(reduced) > 1:
        tasks = [(g, f, cycles, first_witness) for f in reduced]
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_pipeline_task, tasks)
        for f, (count, good) in zip(reduced, results):
            checked += count
            witnesses.extend((f, d) for d in good)
        if first_witness and witnesses:
            witnesses = witnesses[:1]
    else:
        for f in reduced:
            count, good = _survivors_for_coloring(g, f, cycles, first_witness)
            checked += count
            witnesses.extend((f, d) for d in good)
            if first_witness and witnesses:
                break
    status = "Inconclusive" if witnesses else "NotSubgraph"
    return Verdict(status, tuple(witnesses), len(colorings), len(reduced), checked)


def verdict_to_json(verdict: Verdict) -> dict:
    return {
        "status": verdict.status,
        "colorings_total": verdict.colorings_total,
        "colorings_reduced": verdict.colorings_reduced,
        "candidates_checked": verdict.candidates_checked,
        "witnesses": [
            {
                "coloring": list(f.colors),
                "arcs": [list(a) for a in d.arcs_with_colors()],
            }
            for f, d in verdict.witnesses
        ],
    }
