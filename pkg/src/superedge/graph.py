"""Simple undirected graphs stored as per-vertex adjacency bitmasks.

Vertices are the integers ``0..n-1``. Row ``v`` of the adjacency is an int
whose bit ``u`` is set iff ``u`` and ``v`` are adjacent. Graph values are
immutable and hashable, so they can be shared freely between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

# Largest order representable by the graph6 extended header.
MAX_ORDER = 258047

INFINITY = float("inf")


class GraphError(ValueError):
    """Raised when a graph cannot be built or a vertex argument is invalid."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
            total += row.bit_count()
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Skip validation; callers guarantee a symmetric loop-free adjacency."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "edge_count", sum(r.bit_count() for r in rows) // 2)
        return g

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for v in range(self.n):
            for u in iter_bits(self.rows[v] & ((1 << v) - 1)):
                out.append((u, v))
        out.sort()
        return out

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices. Repeated pairs collapse to one edge."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"vertex count {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(g.degrees())
    return DegreeProfile(degs, min(degs), max(degs))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled by ascending original index."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in keep:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(keep)}
    mask = 0
    for v in keep:
        mask |= 1 << v
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.rows[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph.unchecked(len(keep), tuple(rows))


def reach_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    allowed = g.full_mask if within is None else within
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest vertex."""
    out = []
    left = g.full_mask
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach_mask(g, start)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return reach_mask(g, 0) == g.full_mask


def distance(g: Graph, u: int, v: int) -> int | float:
    """Number of edges on a shortest ``u``-``v`` path, or ``INFINITY``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.rows[x]):
            if y not in dist:
                if y == v:
                    return dist[x] + 1
                dist[y] = dist[x] + 1
                queue.append(y)
    return INFINITY


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex ``(x, y)`` becomes ``x * g2.n + y``."""
    n1, n2 = g1.n, g2.n
    if n1 * n2 > MAX_ORDER:
        raise GraphError(f"product order {n1 * n2} exceeds {MAX_ORDER}")
    edges = []
    for x in range(n1):
        for y1, y2 in g2.edges():
            edges.append((x * n2 + y1, x * n2 + y2))
    for x1, x2 in g1.edges():
        for y in range(n2):
            edges.append((x1 * n2 + y, x2 * n2 + y))
    return build_graph(n1 * n2, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return build_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def from_mask(n: int, mask: int) -> Graph:
    """Graph whose upper-triangle bits, in column-major order, are the bits of ``mask``.

    Bit ``k`` (least significant first) is the ``k``-th pair in the order
    (0,1), (0,2), (1,2), (0,3), ... used by the labelled enumerator.
    """
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph.unchecked(n, tuple(rows))


# Small named graphs used throughout the package and its tests.

def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
