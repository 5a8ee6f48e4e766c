"""Exhaustive generation of small graphs and isomorphism-class reduction.

Labelled enumeration walks every upper-triangle bitmask in ascending order.
Class enumeration grows connected graphs one vertex at a time and keeps one
representative per canonical code; every connected graph has a vertex whose
removal leaves it connected, so extending the order ``n - 1`` classes by a
vertex with every non-empty neighbourhood reaches every class of order ``n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Literal

from .graph import Graph, from_mask, is_connected, iter_bits
from .graph6 import encode_graph6

log = logging.getLogger(__name__)

LABELED_MAX = 8
EXTENDED_LABELED_MAX = 8
CANONICAL_MAX = 10
CLASSES_MAX = 8


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    n: int
    mode: Literal["labeled", "classes"] = "labeled"
    min_degree: int | None = None
    connected: bool = True

    def __post_init__(self) -> None:
        if self.n < 1:
            raise EnumerationError("n must be at least 1")
        if self.mode not in ("labeled", "classes"):
            raise EnumerationError(f"unknown enumeration mode {self.mode!r}")

    def accepts(self, g: Graph) -> bool:
        if self.min_degree is not None and min(g.degrees()) < self.min_degree:
            return False
        return not self.connected or is_connected(g)


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled(spec: EnumSpec, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labelled graph on ``spec.n`` vertices passing the filters, by ascending mask.

    ``start``/``stop`` restrict the walk to a half-open mask range, which is
    how workers split the space.
    """
    if spec.n > LABELED_MAX:
        raise EnumerationError(
            f"labelled enumeration is limited to n <= {LABELED_MAX}; "
            "feed an isomorph-free graph6 file for larger orders"
        )
    total = labeled_count(spec.n)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        g = from_mask(spec.n, mask)
        if spec.accepts(g):
            yield g


# -- canonical labelling ---------------------------------------------------


def _refine(rows: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Split cells by neighbour counts into every cell until the partition is equitable.

    The ordering of the resulting cells depends only on the graph structure
    and the input ordering, so the refinement commutes with relabelling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sigs = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            order = sorted(cell, key=lambda v: (sigs[v], v))
            group = [order[0]]
            for v in order[1:]:
                if sigs[v] == sigs[group[0]]:
                    group.append(v)
                else:
                    out.append(tuple(group))
                    group = [v]
            out.append(tuple(group))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = code << 1 | (rj >> order[i] & 1)
    return code


def _individualize(cells: list[tuple[int, ...]], idx: int, v: int) -> list[tuple[int, ...]]:
    cell = cells[idx]
    rest = tuple(u for u in cell if u != v)
    return cells[:idx] + [(v,), rest] + cells[idx + 1:]


def _target(cells: list[tuple[int, ...]]) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


class _Search:
    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        self.best_code: int | None = None
        self.best_order: list[int] | None = None

    def _leaf(self, cells: list[tuple[int, ...]]) -> tuple[int, list[int]]:
        order = [c[0] for c in cells]
        code = _leaf_code(self.rows, order)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order
        return code, order

    def first_leaf(self, cells: list[tuple[int, ...]]) -> int:
        while True:
            idx = _target(cells)
            if idx < 0:
                return self._leaf(cells)[0]
            cells = _refine(self.rows, _individualize(cells, idx, cells[idx][0]))

    def explore(self, cells: list[tuple[int, ...]]) -> int:
        """Search the subtree below ``cells``; return the code of its leftmost leaf.

        A later child whose leftmost leaf matches the first child's is the
        image of the first child under an automorphism fixing everything
        individualized so far, so its subtree holds the same codes and is
        skipped.
        """
        idx = _target(cells)
        if idx < 0:
            return self._leaf(cells)[0]
        children = cells[idx]
        first = self.explore(_refine(self.rows, _individualize(cells, idx, children[0])))
        for v in children[1:]:
            child = _refine(self.rows, _individualize(cells, idx, v))
            if self.first_leaf(child) == first:
                continue
            self.explore(child)
        return first


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose adjacency bit string is minimal; ``order[i]`` is the new vertex ``i``."""
    if g.n > CANONICAL_MAX:
        raise EnumerationError(f"canonical labelling is limited to n <= {CANONICAL_MAX}")
    if g.n == 1:
        return [0]
    rows = g.rows
    cells = [tuple(sorted(range(g.n), key=lambda v: (rows[v].bit_count(), v)))]
    cells = _refine(rows, cells)
    search = _Search(rows)
    search.explore(cells)
    assert search.best_order is not None
    return search.best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for u in iter_bits(g.rows[v]):
            r |= 1 << pos[u]
        rows[pos[v]] = r
    return Graph.unchecked(g.n, tuple(rows))


def canonical_code(g: Graph) -> bytes:
    """Key equal for two graphs exactly when they are isomorphic.

    It is the graph6 string of the canonical form, so for a fixed order the
    byte order agrees with the order of the adjacency bit strings.
    """
    return encode_graph6(canonical_form(g)).encode("ascii")


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)


# -- isomorphism classes ---------------------------------------------------


def _extend(prev: list[Graph], n: int) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    new_bit = 1 << (n - 1)
    for g in prev:
        base = list(g.rows) + [0]
        for nbrs in range(1, 1 << (n - 1)):
            rows = list(base)
            rows[n - 1] = nbrs
            for u in iter_bits(nbrs):
                rows[u] |= new_bit
            cand = Graph.unchecked(n, tuple(rows))
            code = canonical_code(cand)
            if code not in seen:
                seen[code] = cand
    return [canonical_form(seen[c]) for c in sorted(seen)]


_CLASS_CACHE: dict[int, list[Graph]] = {}


def connected_classes(n: int) -> list[Graph]:
    """One canonical representative per connected class on ``n`` vertices, sorted by code."""
    if n < 1:
        raise EnumerationError("n must be at least 1")
    if n > CLASSES_MAX:
        raise EnumerationError(
            f"built-in class enumeration is limited to n <= {CLASSES_MAX}; "
            "feed an isomorph-free graph6 file for larger orders"
        )
    if n not in _CLASS_CACHE:
        if n == 1:
            _CLASS_CACHE[1] = [Graph.unchecked(1, (0,))]
        else:
            prev = connected_classes(n - 1)
            log.info("extending %d classes of order %d", len(prev), n - 1)
            _CLASS_CACHE[n] = _extend(prev, n)
    return list(_CLASS_CACHE[n])


def enumerate_classes(spec: EnumSpec) -> Iterator[Graph]:
    """One representative per isomorphism class, filtered by ``spec``.

    Only connected classes are generated; ``spec.connected`` must be true.
    """
    if not spec.connected:
        raise EnumerationError("class enumeration covers connected graphs only")
    for g in connected_classes(spec.n):
        if spec.accepts(g):
            yield g


def classes_up_to(n_max: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        out.extend(connected_classes(n))
    return out


def dedupe_labeled(n: int) -> list[bytes]:
    """Sorted distinct canonical codes over all labelled connected graphs of order ``n``.

    Slow but simple; it is the cross-check for the class counts.
    """
    codes = {canonical_code(g) for g in enumerate_labeled(EnumSpec(n))}
    return sorted(codes)
