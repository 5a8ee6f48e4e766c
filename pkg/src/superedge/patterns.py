"""Forbidden induced subgraphs: the pattern atlas, induced matching and pair precedence."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional

from .enumeration import canonical_code
from .graph import Graph, build_graph, complete, cycle, is_connected, path, star

log = logging.getLogger(__name__)

ORACLE_HOST_MAX = 12


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    evidence: str = ""

    def __post_init__(self) -> None:
        if not is_connected(self.graph):
            raise PatternError(f"pattern {self.name} must be connected")
        if self.graph.n > 8:
            log.warning("pattern %s has %d vertices; matching may be slow", self.name, self.graph.n)

    def __str__(self) -> str:
        return self.name


def _atlas() -> dict[str, Pattern]:
    def pat(name: str, g: Graph, evidence: str) -> tuple[str, Pattern]:
        return name, Pattern(name, g, evidence)

    entries = [
        pat("P3", path(3), "path on 3 vertices"),
        pat("P4", path(4), "path on 4 vertices"),
        pat("P5", path(5), "path on 5 vertices"),
        pat("P6", path(6), "path on 6 vertices"),
        pat("K13", star(3), "claw: centre 0, leaves 1..3"),
        pat("K14", star(4), "star: centre 0, leaves 1..4"),
        pat(
            "Z1",
            build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
            "paw: triangle 012 with pendant 3 at 0; degree sequence 3,2,2,1",
        ),
        pat(
            "Z2",
            build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]),
            "triangle 012 with pendant path 0-3-4",
        ),
        pat(
            "H0",
            build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
            "hourglass: triangles 012 and 034 sharing vertex 0",
        ),
        pat(
            "T112",
            build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)]),
            "chair: centre 0 with leaves 1, 2 and the leg 0-3-4; degree sequence 3,2,1,1,1",
        ),
        pat(
            "T113",
            build_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]),
            "centre 0 with leaves 1, 2 and the leg 0-3-4-5",
        ),
    ]
    return dict(entries)


ATLAS: dict[str, Pattern] = _atlas()


def pattern_atlas() -> dict[str, Pattern]:
    """The built-in patterns by name. H1 is not built in; register it as a custom pattern."""
    return dict(ATLAS)


def custom_pattern(name: str, g: Graph) -> Pattern:
    return Pattern(name, g, "user supplied")


_PARAMETRIC = re.compile(r"^(K|C|P)(\d+)$")


def _parametric(name: str) -> Optional[Pattern]:
    """Patterns named ``Kn``, ``Cn`` or ``Pn``."""
    m = _PARAMETRIC.match(name)
    if not m:
        return None
    kind, k = m.group(1), int(m.group(2))
    if k < 1 or (kind == "C" and k < 3):
        return None
    g = {"K": complete, "C": cycle, "P": path}[kind](k)
    return Pattern(name, g, {"K": "complete graph", "C": "cycle", "P": "path"}[kind])


def resolve(names: Iterable[str], extra: dict[str, Pattern] | None = None) -> list[Pattern]:
    """Look up patterns by name: ``extra`` first, then the atlas, then ``Kn``/``Cn``/``Pn``."""
    out = []
    for name in names:
        name = name.strip()
        if extra and name in extra:
            out.append(extra[name])
        elif name in ATLAS:
            out.append(ATLAS[name])
        elif (p := _parametric(name)) is not None:
            out.append(p)
        else:
            known = ", ".join(sorted(set(ATLAS) | set(extra or ())))
            raise PatternError(f"unknown pattern {name!r} (known: {known})")
    return out


@dataclass(frozen=True)
class PairSpec:
    members: tuple[Pattern, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not 1 <= len(self.members) <= 2:
            raise PatternError("a pattern set holds one or two patterns")
        if len(self.members) == 2:
            a, b = self.members
            if a.graph.n == b.graph.n and canonical_code(a.graph) == canonical_code(b.graph):
                raise PatternError(f"{a.name} and {b.name} are isomorphic")
        if not self.label:
            object.__setattr__(self, "label", "{" + ",".join(p.name for p in self.members) + "}")

    @classmethod
    def of(cls, *names: str, extra: dict[str, Pattern] | None = None) -> "PairSpec":
        return cls(tuple(resolve(names, extra)))

    def __str__(self) -> str:
        return self.label


def _search_order(p: Graph) -> list[int]:
    degs = p.degrees()
    return sorted(range(p.n), key=lambda v: (-degs[v], v))


def contains_induced(g: Graph, pattern: Pattern | Graph) -> Optional[tuple[int, ...]]:
    """First induced embedding of ``pattern`` in ``g``, or ``None``.

    The result maps pattern vertex ``i`` to host vertex ``result[i]``.
    Pattern vertices are placed by descending degree and host candidates are
    tried in ascending order, so the first embedding is reproducible.
    """
    p = pattern.graph if isinstance(pattern, Pattern) else pattern
    k = p.n
    if k > g.n:
        return None
    order = _search_order(p)
    pdeg = p.degrees()
    hrows = g.rows
    full = g.full_mask
    # Host vertices with enough degree for each pattern vertex.
    by_deg = {}
    for d in set(pdeg):
        m = 0
        for v in range(g.n):
            if hrows[v].bit_count() >= d:
                m |= 1 << v
        by_deg[d] = m
    # For the pattern vertex at position i: earlier positions adjacent / not adjacent to it.
    pos = {v: i for i, v in enumerate(order)}
    prev_adj = []
    prev_non = []
    for i, pv in enumerate(order):
        prev_adj.append([j for j in range(i) if p.rows[pv] >> order[j] & 1])
        prev_non.append([j for j in range(i) if not p.rows[pv] >> order[j] & 1])
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = by_deg[pdeg[order[i]]] & ~used
        for j in prev_adj[i]:
            cand &= hrows[image[j]]
        for j in prev_non[i]:
            cand &= ~hrows[image[j]]
        cand &= full
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    return tuple(image[pos[v]] for v in range(k))


def is_induced_embedding(g: Graph, p: Graph, emb: tuple[int, ...]) -> bool:
    if len(set(emb)) != len(emb) or len(emb) != p.n:
        return False
    return all(
        p.adj(a, b) == g.adj(emb[a], emb[b]) for a, b in combinations(range(p.n), 2)
    )


def is_free(g: Graph, spec: PairSpec | Iterable[Pattern]) -> bool:
    members = spec.members if isinstance(spec, PairSpec) else tuple(spec)
    return all(contains_induced(g, p) is None for p in members)


def induced_subgraph_of(small: Pattern | Graph, big: Pattern | Graph) -> bool:
    host = big.graph if isinstance(big, Pattern) else big
    return contains_induced(host, small) is not None


def pair_precedes(h1: PairSpec, h2: PairSpec) -> bool:
    """``h1 ⪯ h2``: every member of ``h2`` contains some member of ``h1`` as an induced subgraph."""
    return all(any(induced_subgraph_of(a, b) for a in h1.members) for b in h2.members)


# -- oracle ----------------------------------------------------------------


@lru_cache(maxsize=256)
def _labelled_codes(p: Graph) -> frozenset[int]:
    """Adjacency bit strings of every relabelling of ``p``."""
    k = p.n
    pairs = list(combinations(range(k), 2))
    codes = set()
    for perm in permutations(range(k)):
        code = 0
        for a, b in pairs:
            code = code << 1 | p.adj(perm[a], perm[b])
        codes.add(code)
    return frozenset(codes)


def oracle_contains_induced(g: Graph, pattern: Pattern | Graph) -> bool:
    """Check every vertex subset of the pattern's size against every relabelling of it."""
    p = pattern.graph if isinstance(pattern, Pattern) else pattern
    if g.n > ORACLE_HOST_MAX:
        raise PatternError(f"subset oracle is limited to hosts with n <= {ORACLE_HOST_MAX}")
    k = p.n
    if k > g.n:
        return False
    codes = _labelled_codes(p)
    pairs = list(combinations(range(k), 2))
    for subset in combinations(range(g.n), k):
        code = 0
        for a, b in pairs:
            code = code << 1 | g.adj(subset[a], subset[b])
        if code in codes:
            return True
    return False


def atlas_flags(g: Graph, extra: dict[str, Pattern] | None = None) -> dict[str, bool]:
    """Which atlas (and extra) patterns ``g`` contains as induced subgraphs."""
    pats = dict(ATLAS)
    if extra:
        pats.update(extra)
    return {name: contains_induced(g, p) is not None for name, p in pats.items()}


__all__ = [
    "ATLAS",
    "PairSpec",
    "Pattern",
    "PatternError",
    "atlas_flags",
    "contains_induced",
    "custom_pattern",
    "induced_subgraph_of",
    "is_free",
    "is_induced_embedding",
    "oracle_contains_induced",
    "pair_precedes",
    "pattern_atlas",
    "resolve",
]
