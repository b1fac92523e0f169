"""Finite groups as multiplication tables; semidirect products C_n x| C_r;
generating-set minimality; Cayley graph and digraph construction.

Groups are explicit order-by-order tables, so every structural claim
(Latin square, identity, inverses, associativity at small orders) is
checked against the table rather than trusted from a formula.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .coloring import EdgeColoring
from .errors import GroupInvariantError, GroupSpecError, SizeBoundExceeded
from .graphs import Digraph, Graph, VertexPermutation
from .orientation import CandidateOrientation

EXHAUSTIVE_ASSOC_BOUND = 64
DEFAULT_GROUP_BOUND = 64
ASSOC_SPOT_SAMPLES = 1000


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[x, y]`` is the product x*y as an element index.  Validation
    checks the Latin-square property, a two-sided identity, two-sided
    inverses, and associativity (exhaustively up to order 64, by
    deterministic sampling beyond).
    """

    def __init__(self, table, names: Sequence[str] | None = None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupInvariantError("multiplication table must be square")
        n = table.shape[0]
        if n == 0:
            raise GroupInvariantError("a group has at least one element")
        if table.min() < 0 or table.max() >= n:
            raise GroupInvariantError("table entries out of range")
        expect = np.arange(n)
        if not (np.sort(table, axis=1) == expect).all():
            raise GroupInvariantError("table rows are not permutations (not a Latin square)")
        if not (np.sort(table, axis=0) == expect[:, None]).all():
            raise GroupInvariantError("table columns are not permutations (not a Latin square)")

        identity_rows = np.nonzero((table == expect).all(axis=1))[0]
        if len(identity_rows) != 1 or not (table[:, identity_rows[0]] == expect).all():
            raise GroupInvariantError("no two-sided identity element")
        self.identity = int(identity_rows[0])

        inverse = np.empty(n, dtype=np.int64)
        for x in range(n):
            ys = np.nonzero(table[x] == self.identity)[0]
            y = int(ys[0])
            if table[y, x] != self.identity:
                raise GroupInvariantError(f"element {x} has no two-sided inverse")
            inverse[x] = y

        if n <= EXHAUSTIVE_ASSOC_BOUND:
            left = table[table, :]   # left[a,b,c] = (a*b)*c
            right = table[:, table]  # right[a,b,c] = a*(b*c)
            if not (left == right).all():
                raise GroupInvariantError("multiplication is not associative")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, ASSOC_SPOT_SAMPLES))
            if not (table[table[a, b], c] == table[a, table[b, c]]).all():
                raise GroupInvariantError("multiplication is not associative")

        table.setflags(write=False)
        inverse.setflags(write=False)
        self.table = table
        self.inverse = inverse
        self.order = n
        if names is not None and len(names) != n:
            raise GroupInvariantError("names must match the group order")
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def left_translation(self, h: int) -> VertexPermutation:
        """The permutation x -> h*x."""
        return tuple(int(v) for v in self.table[h])

    def name(self, x: int) -> str:
        return self.names[x]


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupInvariantError("cyclic group order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, names=[str(i) for i in range(n)])


def klein_four_group() -> FiniteGroup:
    idx = np.arange(4)
    table = idx[:, None] ^ idx[None, :]
    return FiniteGroup(table, names=["e", "a", "b", "ab"])


class SemidirectGroup(FiniteGroup):
    """C_n x| C_r with the action b -> b^k, on normal forms b^j a^i.

    Element (j, i) has index j*r + i.  The designated generators are
    ``a`` = (0, 1) and ``b`` = (1, 0).
    """

    def __init__(self, n: int, k: int, r: int):
        if n < 1 or r < 1:
            raise GroupInvariantError("semidirect parameters must be positive")
        k %= n
        if math.gcd(k, n) != 1:
            raise GroupInvariantError(f"gcd(k, n) must be 1, got gcd({k},{n})={math.gcd(k, n)}")
        if pow(k, r, n) != 1 % n:
            raise GroupInvariantError(f"k^r must be 1 mod n: {k}^{r} = {pow(k, r, n)} mod {n}")
        self.n, self.k, self.r = n, k, r
        kp = np.array([pow(k, i, n) for i in range(r)], dtype=np.int64)
        idx = np.arange(n * r)
        J, I = idx // r, idx % r
        J1, I1 = J[:, None], I[:, None]
        J2, I2 = J[None, :], I[None, :]
        table = ((J1 + kp[I1] * J2) % n) * r + (I1 + I2) % r

        def name(j: int, i: int) -> str:
            parts = []
            if j:
                parts.append("b" if j == 1 else f"b^{j}")
            if i:
                parts.append("a" if i == 1 else f"a^{i}")
            return " ".join(parts) if parts else "e"

        super().__init__(table, names=[name(j, i) for j, i in zip(J, I)])
        self.a = (1 % r) if r > 1 else 0
        self.b = (1 % n) * r


def semidirect(n: int, k: int, r: int) -> SemidirectGroup:
    return SemidirectGroup(n, k, r)


def subgroup_closure(group: FiniteGroup, elements: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing the given elements."""
    gens = sorted(set(int(x) for x in elements))
    seen = np.zeros(group.order, dtype=bool)
    seen[group.identity] = True
    frontier = np.array([group.identity], dtype=np.int64)
    if gens:
        gens_arr = np.array(gens, dtype=np.int64)
        while frontier.size:
            products = group.table[np.ix_(frontier, gens_arr)].ravel()
            fresh = np.unique(products[~seen[products]])
            seen[fresh] = True
            frontier = fresh
    return frozenset(int(x) for x in np.nonzero(seen)[0])


def is_minimal_generating(group: FiniteGroup, elements: Iterable[int]) -> bool:
    """True iff the set generates the group and no proper subset does."""
    s = frozenset(int(x) for x in elements)
    if len(subgroup_closure(group, s)) != group.order:
        return False
    for x in s:
        if len(subgroup_closure(group, s - {x})) == group.order:
            return False
    return True


def enumerate_minimal_generating_sets(
    group: FiniteGroup,
    max_size: int | None = None,
    order_bound: int = DEFAULT_GROUP_BOUND,
) -> Iterator[frozenset[int]]:
    """All inclusion-minimal generating sets with at most ``max_size``
    elements, in size-lexicographic order.

    Any superset of a generating set is not minimal, so the subset scan
    stops extending once a prefix generates.
    """
    if group.order > order_bound:
        raise SizeBoundExceeded(f"group order {group.order} exceeds bound {order_bound}")
    if max_size is None:
        max_size = max(1, group.order.bit_length())
    if group.order == 1:
        yield frozenset()
        return
    candidates = [x for x in range(group.order) if x != group.identity]
    closure_memo: dict[frozenset[int], frozenset[int]] = {}

    def closure(s: frozenset[int]) -> frozenset[int]:
        got = closure_memo.get(s)
        if got is None:
            got = subgroup_closure(group, s)
            closure_memo[s] = got
        return got

    def extend(prefix: tuple[int, ...], start: int) -> Iterator[frozenset[int]]:
        s = frozenset(prefix)
        if len(closure(s)) == group.order:
            if all(
                len(closure(s - {x})) != group.order for x in s
            ):
                yield s
            return
        if len(prefix) >= max_size:
            return
        for i in range(start, len(candidates)):
            yield from extend(prefix + (candidates[i],), i + 1)

    yield from extend((), 0)


# ---------------------------------------------------------------------------
# Cayley constructions


def _check_connection_set(group: FiniteGroup, connection: Iterable[int]) -> list[int]:
    s = sorted(set(int(x) for x in connection))
    if any(x < 0 or x >= group.order for x in s):
        raise ValueError("connection set element out of range")
    if group.identity in s:
        raise ValueError("connection set must not contain the identity")
    if len(subgroup_closure(group, s)) != group.order:
        raise ValueError("connection set does not generate the group")
    return s


def cayley_graph(group: FiniteGroup, connection: Iterable[int]) -> Graph:
    """Undirected Cayley graph: g ~ g*s for every s in the connection set."""
    s = _check_connection_set(group, connection)
    edges = set()
    for g in range(group.order):
        for x in s:
            h = group.mul(g, x)
            edges.add((g, h) if g < h else (h, g))
    return Graph(group.order, sorted(edges))


def cayley_digraph(group: FiniteGroup, connection: Iterable[int]) -> CandidateOrientation:
    """Cayley digraph with arcs (g, g*s), arc and edge colors by generator.

    Involutions produce antiparallel arc pairs of one color.  Connection
    sets containing an inverse pair s, s^-1 of distinct elements are
    rejected: the two arcs over one edge would need two colors, and no
    minimal generating set contains such a pair.
    """
    s = _check_connection_set(group, connection)
    s_set = set(s)
    for x in s:
        if group.inv(x) in s_set and group.inv(x) != x:
            raise ValueError(
                "connection set contains an inverse pair of distinct elements; "
                "edge colors would be ambiguous"
            )
    color_of = {x: i + 1 for i, x in enumerate(s)}
    arcs: list[tuple[int, int]] = []
    arc_colors: list[int] = []
    for g in range(group.order):
        for x in s:
            arcs.append((g, group.mul(g, x)))
            arc_colors.append(color_of[x])
    graph = Graph(group.order, {tuple(sorted(a)) for a in arcs})
    edge_colors = [0] * graph.edge_count
    for (u, v), c in zip(arcs, arc_colors):
        edge_colors[graph.index_of(u, v)] = c
    coloring = EdgeColoring(edge_colors)
    return CandidateOrientation(
        Digraph(group.order, arcs), tuple(arc_colors), graph, coloring
    )


# ---------------------------------------------------------------------------
# Group specification parsing (CLI and table files)


def parse_group_table(text: str) -> FiniteGroup:
    """Parse a table file: the order followed by order^2 row-major entries."""
    tokens = text.split()
    if not tokens:
        raise GroupSpecError("empty group table")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GroupSpecError(f"non-integer token in group table: {exc}") from None
    order = values[0]
    if order < 1:
        raise GroupSpecError("group order must be positive")
    body = values[1:]
    if len(body) != order * order:
        raise GroupSpecError(
            f"expected {order * order} table entries, got {len(body)}"
        )
    try:
        return FiniteGroup(np.array(body, dtype=np.int64).reshape(order, order))
    except GroupInvariantError as exc:
        raise GroupSpecError(str(exc)) from None


def format_group_table(group: FiniteGroup) -> str:
    lines = [str(group.order)]
    for row in group.table:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse ``semidirect n k r`` or a literal table (see parse_group_table)."""
    tokens = spec.split()
    if tokens and tokens[0] == "semidirect":
        if len(tokens) != 4:
            raise GroupSpecError("semidirect spec needs exactly: semidirect n k r")
        try:
            n, k, r = (int(t) for t in tokens[1:])
        except ValueError:
            raise GroupSpecError("semidirect parameters must be integers") from None
        return semidirect(n, k, r)
    return parse_group_table(spec)
