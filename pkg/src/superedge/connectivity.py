"""Edge and vertex connectivity, restricted edge connectivity and the super-λ test.

All flows run on unit capacities. Undirected edges carry one unit in either
direction, and flow is stored per vertex as a bitmask of the neighbours it
currently sends a unit to.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, is_connected, iter_bits

ORACLE_MAX = 20


class ConnectivityError(ValueError):
    pass


@dataclass(frozen=True)
class CutWitness:
    side: tuple[int, ...]
    boundary: tuple[tuple[int, int], ...]
    size: int
    trivial: bool

    def to_dict(self) -> dict:
        return {
            "side": list(self.side),
            "boundary": [list(e) for e in self.boundary],
            "size": self.size,
            "trivial": self.trivial,
        }


def cut_witness(g: Graph, side: int) -> CutWitness:
    """Witness for the edge boundary of the vertex bitmask ``side``."""
    members = tuple(iter_bits(side))
    if not 1 <= len(members) <= g.n - 1:
        raise ConnectivityError("a cut side must be a non-empty proper vertex subset")
    outside = g.full_mask & ~side
    boundary = sorted(
        (min(v, u), max(v, u)) for v in members for u in iter_bits(g.rows[v] & outside)
    )
    k = len(members)
    return CutWitness(members, tuple(boundary), len(boundary), k == 1 or k == g.n - 1)


def _set_flow(g: Graph, sources: int, sinks: int, cap: int | None = None) -> tuple[int, int | None]:
    """Max flow from vertex set ``sources`` to ``sinks``, both bitmasks.

    Returns ``(value, side)`` where ``side`` is the bitmask reachable from the
    sources in the final residual graph, i.e. the source side of a minimum cut.
    If ``cap`` is reached first the search stops and ``side`` is ``None``.
    """
    rows = g.rows
    n = g.n
    fwd = [0] * n
    src_list = list(iter_bits(sources))
    value = 0
    while cap is None or value < cap:
        parent = [-1] * n
        visited = sources
        queue = list(src_list)
        hit = -1
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            cand = rows[u] & ~fwd[u] & ~visited
            if not cand:
                continue
            visited |= cand
            reached = cand & sinks
            if reached:
                hit = (reached & -reached).bit_length() - 1
                parent[hit] = u
                break
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                parent[v] = u
                queue.append(v)
                cand ^= low
        if hit < 0:
            return value, visited
        v = hit
        while not sources >> v & 1:
            u = parent[v]
            if fwd[v] >> u & 1:
                fwd[v] &= ~(1 << u)
            else:
                fwd[u] |= 1 << v
            v = u
        value += 1
    return value, None


def max_flow_min_cut(g: Graph, s: int, t: int) -> tuple[int, CutWitness]:
    """Maximum number of edge-disjoint ``s``-``t`` paths and a minimum cut on the ``s`` side."""
    if s == t:
        raise ConnectivityError("source and sink must differ")
    for v in (s, t):
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    value, side = _set_flow(g, 1 << s, 1 << t)
    assert side is not None
    return value, cut_witness(g, side)


def edge_connectivity(g: Graph) -> tuple[int, CutWitness]:
    """λ(G) from ``n - 1`` flows rooted at vertex 0.

    Among the minimum cuts these flows expose, the witness is the one whose
    sorted side is lexicographically smallest.
    """
    if g.n < 2:
        raise ConnectivityError("edge connectivity needs at least two vertices")
    best = None
    best_side: tuple[int, ...] = ()
    best_mask = 0
    for t in range(1, g.n):
        value, side = _set_flow(g, 1, 1 << t)
        assert side is not None
        members = tuple(iter_bits(side))
        if best is None or value < best or (value == best and members < best_side):
            best, best_side, best_mask = value, members, side
    assert best is not None
    return best, cut_witness(g, best_mask)


def restricted_edge_connectivity(
    g: Graph, floor: int = 0, limit: int | None = None
) -> tuple[Optional[int], Optional[CutWitness]]:
    """λ′(G): the smallest edge cut leaving no isolated vertex, or ``(None, None)``.

    Some optimal cut keeps the minimum-degree vertex ``r`` together with one
    of its neighbours ``u``, and the far side then contains an edge ``ab``
    disjoint from ``ru``. So λ′ is the least flow between the contracted
    pairs ``{r, u}`` and ``{a, b}``. Each pair's minimum cut has no isolated
    vertex on either side (moving one across would shrink it), so the witness
    is itself a restricted cut.

    ``floor`` stops the search as soon as a cut that small is found (λ is a
    valid floor). With ``limit`` only cuts strictly below it are reported,
    and ``(None, None)`` then also means none was found below the limit.
    """
    if g.n < 2:
        raise ConnectivityError("restricted edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise ConnectivityError("restricted edge connectivity needs a connected graph")
    degs = g.degrees()
    r = min(range(g.n), key=lambda v: (degs[v], v))
    edges = g.edges()
    best = limit
    best_side = None
    for u in iter_bits(g.rows[r]):
        src = 1 << r | 1 << u
        for a, b in edges:
            if a in (r, u) or b in (r, u):
                continue
            value, side = _set_flow(g, src, 1 << a | 1 << b, cap=best)
            if side is None:
                continue
            best, best_side = value, side
            if best <= floor:
                return best, cut_witness(g, best_side)
    if best_side is None:
        return None, None
    return best, cut_witness(g, best_side)


def is_super_edge_connected(g: Graph) -> tuple[bool, Optional[CutWitness]]:
    """Whether every minimum edge cut isolates a vertex.

    Returns ``(False, witness)`` with a non-trivial minimum cut when the
    answer is no. K1 and K2 count as super-edge-connected.
    """
    if not is_connected(g):
        raise ConnectivityError("super-edge-connectivity is decided for connected graphs only")
    if g.n <= 2:
        return True, None
    lam, witness = edge_connectivity(g)
    delta = min(g.degrees())
    if lam < delta:
        return False, witness
    value, rwit = restricted_edge_connectivity(g, floor=lam, limit=lam + 1)
    if value is None:
        return True, None
    return False, rwit


class _Network:
    """Directed residual network with integer capacities, for vertex connectivity."""

    def __init__(self, size: int):
        self.cap = [dict() for _ in range(size)]

    def add(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, cap: int | None = None) -> int:
        value = 0
        while cap is None or value < cap:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                x = queue.popleft()
                for y, c in self.cap[x].items():
                    if c > 0 and y not in parent:
                        parent[y] = x
                        queue.append(y)
            if t not in parent:
                break
            y = t
            while y != s:
                x = parent[y]
                self.cap[x][y] -= 1
                self.cap[y][x] += 1
                y = x
            value += 1
        return value


def _local_vertex_connectivity(g: Graph, s: int, t: int, cap: int | None) -> int:
    big = g.n
    net = _Network(2 * g.n)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        net.add(2 * u + 1, 2 * v, big)
        net.add(2 * v + 1, 2 * u, big)
    return net.max_flow(2 * s + 1, 2 * t, cap)


def vertex_connectivity(g: Graph) -> int:
    """κ(G), with κ(K_n) = n - 1 and κ = 0 for disconnected graphs."""
    if g.n < 2:
        raise ConnectivityError("vertex connectivity needs at least two vertices")
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s in range(g.n):
        non_nbrs = g.full_mask & ~g.rows[s] & ~(1 << s)
        for t in iter_bits(non_nbrs):
            if t < s:
                continue
            best = min(best, _local_vertex_connectivity(g, s, t, best))
    return best


# -- brute-force oracle ------------------------------------------------------


@dataclass
class OracleCuts:
    lam: int
    super: bool
    minimizing_sides: list[tuple[int, ...]]
    size_histogram: dict[int, int] = field(default_factory=dict)


def _subset_bits(n: int, lo: int, hi: int) -> np.ndarray:
    masks = np.arange(lo, hi, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int32)


def oracle_cut_scan(g: Graph) -> OracleCuts:
    """Every edge boundary ∂(S), one side per complementary pair, checked directly.

    S ranges over the non-empty subsets that omit vertex ``n - 1``. λ is the
    smallest boundary, and the graph is super exactly when every minimising S
    has one or ``n - 1`` vertices.
    """
    n = g.n
    if n > ORACLE_MAX:
        raise ConnectivityError(f"cut oracle is limited to n <= {ORACLE_MAX}")
    if n < 2:
        raise ConnectivityError("cut oracle needs at least two vertices")
    if not is_connected(g):
        raise ConnectivityError("cut oracle expects a connected graph")
    adj = np.array([[g.rows[v] >> u & 1 for u in range(n)] for v in range(n)], dtype=np.int32)
    deg = adj.sum(axis=1)
    total = 1 << (n - 1)
    best = None
    sides: list[tuple[int, ...]] = []
    hist: dict[int, int] = {}
    chunk = 1 << 16
    for lo in range(1, total, chunk):
        hi = min(total, lo + chunk)
        bits = _subset_bits(n, lo, hi)
        inside = ((bits @ adj) * bits).sum(axis=1)
        cut = bits @ deg - inside
        sizes, counts = np.unique(cut, return_counts=True)
        for s, c in zip(sizes.tolist(), counts.tolist()):
            hist[s] = hist.get(s, 0) + c
        low = int(cut.min())
        if best is None or low < best:
            best = low
            sides = []
        if low == best:
            for i in np.flatnonzero(cut == best).tolist():
                sides.append(tuple(np.flatnonzero(bits[i]).tolist()))
    assert best is not None
    sup = all(len(s) in (1, n - 1) for s in sides)
    return OracleCuts(best, sup, sides, dict(sorted(hist.items())))


def oracle_restricted(g: Graph) -> Optional[int]:
    """λ′ by direct search: the smallest ∂(S) with no isolated vertex on either side."""
    n = g.n
    if n > ORACLE_MAX:
        raise ConnectivityError(f"cut oracle is limited to n <= {ORACLE_MAX}")
    if n < 2:
        return None
    adj = np.array([[g.rows[v] >> u & 1 for u in range(n)] for v in range(n)], dtype=np.int32)
    deg = adj.sum(axis=1)
    best = None
    chunk = 1 << 16
    for lo in range(1, 1 << (n - 1), chunk):
        hi = min(1 << (n - 1), lo + chunk)
        bits = _subset_bits(n, lo, hi)
        inner = bits @ adj  # neighbours of each vertex inside S
        # A vertex is isolated on its side if all its neighbours lie across the cut.
        isolated_in = (bits == 1) & (inner == 0)
        isolated_out = (bits == 0) & (inner == deg)
        ok = ~(isolated_in | isolated_out).any(axis=1)
        if not ok.any():
            continue
        cut = bits @ deg - (inner * bits).sum(axis=1)
        low = int(cut[ok].min())
        if best is None or low < best:
            best = low
    return best


# -- report ----------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityReport:
    n: int
    edge_count: int
    delta: int
    Delta: int
    kappa: int
    lam: int
    lambda_restricted: Optional[int]
    maximally_edge_connected: bool
    super: bool
    witness: Optional[CutWitness]
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.edge_count,
            "delta": self.delta,
            "Delta": self.Delta,
            "kappa": self.kappa,
            "lambda": self.lam,
            "lambda_restricted": (
                "undefined" if self.lambda_restricted is None else self.lambda_restricted
            ),
            "maximally_edge_connected": self.maximally_edge_connected,
            "super": self.super,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "notes": list(self.notes),
        }


def connectivity_report(g: Graph) -> ConnectivityReport:
    """Every connectivity parameter of a connected graph in one record."""
    if not is_connected(g):
        raise ConnectivityError("connectivity report expects a connected graph")
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    if g.n == 1:
        return ConnectivityReport(
            1, 0, 0, 0, 0, 0, None, True, True, None,
            ("K1 has no edge cut; treated as super-edge-connected by convention",),
        )
    lam, witness = edge_connectivity(g)
    kappa = vertex_connectivity(g)
    restricted, rwit = restricted_edge_connectivity(g, floor=lam)
    notes: tuple[str, ...] = ()
    if g.n == 2:
        sup = True
        notes = ("K2 is super-edge-connected by convention",)
    elif lam < delta:
        sup = False
    else:
        sup = restricted is None or restricted > lam
        if not sup:
            witness = rwit
    return ConnectivityReport(
        g.n, g.edge_count, delta, Delta, kappa, lam, restricted,
        lam == delta, sup, witness, notes,
    )
