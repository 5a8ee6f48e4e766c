"""Named graph families, exception detection and the registry of non-super families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional

from . import graph as gr
from .connectivity import CutWitness, edge_connectivity, is_super_edge_connected
from .enumeration import canonical_code
from .graph import Graph, build_graph, cartesian_product, is_connected

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "prism",
    "grid_2x3",
    "two_cliques_shared_vertex",
    "two_cliques_bridge",
    "custom",
)

# Smallest valid size per family.
_MIN_SIZE = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "star": 1,
    "complete_bipartite": 1,
    "prism": 1,
    "grid_2x3": 6,
    "two_cliques_shared_vertex": 1,
    "two_cliques_bridge": 1,
}

ALIASES = {"prism_family": "prism", "grid": "grid_2x3", "glued_cliques": "two_cliques_shared_vertex",
           "bridged_cliques": "two_cliques_bridge"}


class FamilyError(ValueError):
    pass


class RegistryViolation(AssertionError):
    """A registered family produced a super-edge-connected instance."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    size: int = 0
    size2: Optional[int] = None
    graph: Optional[Graph] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        fam = ALIASES.get(self.family, self.family)
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise FamilyError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if fam == "custom":
            if self.graph is None:
                raise FamilyError("a custom family spec needs a graph")
            return
        if fam == "grid_2x3" and self.size == 0:
            object.__setattr__(self, "size", 6)
        if fam == "grid_2x3" and self.size != 6:
            raise FamilyError("grid_2x3 has exactly 6 vertices")
        if self.size < _MIN_SIZE[fam]:
            raise FamilyError(f"{fam} needs size >= {_MIN_SIZE[fam]}, got {self.size}")
        if self.size2 is not None and (fam != "complete_bipartite" or self.size2 < 1):
            raise FamilyError("second size parameter is only valid for complete_bipartite")

    @property
    def token(self) -> str:
        if self.family == "custom":
            from .graph6 import encode_graph6

            return f"custom:{encode_graph6(self.graph)}"
        if self.size2 is not None:
            return f"{self.family}:{self.size},{self.size2}"
        return f"{self.family}:{self.size}"


def parse_token(token: str) -> FamilySpec:
    """Parse ``family:size`` (``complete_bipartite:2,3``, ``custom:<graph6>``)."""
    if ":" not in token:
        if token in ("grid_2x3", "grid"):
            return FamilySpec("grid_2x3", 6)
        raise FamilyError(f"expected family:size, got {token!r}")
    fam, arg = token.split(":", 1)
    if fam == "custom":
        from .graph6 import decode_graph6

        return FamilySpec("custom", graph=decode_graph6(arg))
    try:
        if "," in arg:
            a, b = arg.split(",", 1)
            return FamilySpec(fam, int(a), int(b))
        return FamilySpec(fam, int(arg))
    except ValueError as exc:
        if isinstance(exc, FamilyError):
            raise
        raise FamilyError(f"size in {token!r} must be an integer") from None


def make(spec: FamilySpec) -> Graph:
    m = spec.size
    fam = spec.family
    if fam == "custom":
        assert spec.graph is not None
        return spec.graph
    if fam == "path":
        return gr.path(m)
    if fam == "cycle":
        return gr.cycle(m)
    if fam == "complete":
        return gr.complete(m)
    if fam == "star":
        return gr.star(m)
    if fam == "complete_bipartite":
        return gr.complete_bipartite(m, m if spec.size2 is None else spec.size2)
    if fam == "prism":
        return cartesian_product(gr.complete(m), gr.complete(2))
    if fam == "grid_2x3":
        return grid_2x3()
    if fam == "two_cliques_shared_vertex":
        # Clique A is 0..m-1, clique B is m-1..2m-2; vertex m-1 is shared.
        edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
        b = list(range(m - 1, 2 * m - 1))
        edges += [(b[i], b[j]) for i in range(m) for j in range(i + 1, m)]
        return build_graph(2 * m - 1, edges)
    if fam == "two_cliques_bridge":
        edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
        edges += [(m + i, m + j) for i in range(m) for j in range(i + 1, m)]
        edges.append((m - 1, m))
        return build_graph(2 * m, edges)
    raise FamilyError(f"unknown family {fam!r}")


def grid_2x3() -> Graph:
    """P2 □ P3: rows ``0,1,2`` and ``3,4,5``."""
    return cartesian_product(gr.path(2), gr.path(3))


_GRID_CODE = canonical_code(grid_2x3())


def _is_path(g: Graph) -> bool:
    degs = sorted(g.degrees())
    if g.n == 1:
        return True
    return g.edge_count == g.n - 1 and degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees())


def is_exception(g: Graph, mode: Literal["i", "ii"]) -> bool:
    """Whether ``g`` is one of the excluded graphs of the given mode.

    Mode ``"i"`` excludes C4 only. Mode ``"ii"`` excludes paths and cycles on
    at least four vertices and the 2x3 grid.
    """
    if not is_connected(g):
        raise FamilyError("exception membership is defined for connected graphs")
    if mode == "i":
        return g.n == 4 and _is_cycle(g)
    if mode == "ii":
        if g.n >= 4 and (_is_path(g) or _is_cycle(g)):
            return True
        return g.n == 6 and g.edge_count == 7 and canonical_code(g) == _GRID_CODE
    raise FamilyError(f"unknown exception mode {mode!r}")


@dataclass(frozen=True)
class ExceptionList:
    mode: Literal["i", "ii"]

    def __contains__(self, g: Graph) -> bool:
        return is_exception(g, self.mode)

    def describe(self) -> str:
        return "C4" if self.mode == "i" else "P2xP3, P_n and C_n (n >= 4)"


@dataclass(frozen=True)
class RegistryEntry:
    token: str
    n: int
    lam: int
    delta: int
    witness: CutWitness

    def to_dict(self) -> dict:
        return {"instance": self.token, "n": self.n, "lambda": self.lam,
                "delta": self.delta, "witness": self.witness.to_dict()}


def registry_verify(family: str, sizes: Iterable[int]) -> list[RegistryEntry]:
    """Check that every instance is non-super; return one entry with its cut witness per size.

    Raises ``RegistryViolation`` at the first super-edge-connected instance.
    """
    out = []
    for m in sizes:
        spec = FamilySpec(family, m)
        g = make(spec)
        sup, witness = is_super_edge_connected(g)
        if sup or witness is None or witness.trivial:
            raise RegistryViolation(f"{spec.token} is super-edge-connected; it cannot stand in as a non-super family")
        lam, _ = edge_connectivity(g)
        out.append(RegistryEntry(spec.token, g.n, lam, min(g.degrees()), witness))
    return out


# Families verified non-super over these sizes.
REGISTRY: dict[str, range] = {
    "path": range(4, 13),
    "cycle": range(4, 13),
    "prism": range(2, 7),
    "two_cliques_shared_vertex": range(3, 7),
    "two_cliques_bridge": range(2, 7),
    "grid_2x3": range(6, 7),
}


def registry_instances() -> list[FamilySpec]:
    return [FamilySpec(fam, m) for fam, sizes in REGISTRY.items() for m in sizes]


def verify_registry() -> list[RegistryEntry]:
    out = []
    for fam, sizes in REGISTRY.items():
        out.extend(registry_verify(fam, sizes))
    return out


__all__ = [
    "ExceptionList",
    "FamilyError",
    "FamilySpec",
    "REGISTRY",
    "RegistryViolation",
    "grid_2x3",
    "is_exception",
    "make",
    "parse_token",
    "registry_instances",
    "registry_verify",
    "verify_registry",
]
