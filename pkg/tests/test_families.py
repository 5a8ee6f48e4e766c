import pytest

from superedge.connectivity import edge_connectivity, is_super_edge_connected, oracle_cut_scan
from superedge.enumeration import canonical_code
from superedge.families import (
    REGISTRY,
    ExceptionList,
    FamilyError,
    FamilySpec,
    RegistryViolation,
    is_exception,
    make,
    parse_token,
    registry_instances,
    registry_verify,
    verify_registry,
)
from superedge.graph import build_graph, cartesian_product, complete, components, cycle, induced_subgraph, path
from superedge.patterns import ATLAS, PairSpec, contains_induced, is_free, resolve

GRID = cartesian_product(path(2), path(3))


def test_make_examples():
    assert make(FamilySpec("cycle", 4)) == cycle(4)
    prism = make(FamilySpec("prism_family", 3))
    assert (prism.n, prism.edge_count) == (6, 9)
    glued = make(FamilySpec("two_cliques_shared_vertex", 4))
    assert (glued.n, glued.edge_count) == (7, 12)
    cut_vertices = [v for v in range(7) if len(components(induced_subgraph(glued, [u for u in range(7) if u != v]))) > 1]
    assert cut_vertices == [3]
    bridged = make(FamilySpec("two_cliques_bridge", 3))
    assert (bridged.n, bridged.edge_count) == (6, 7)
    assert make(parse_token("complete_bipartite:2,3")).edge_count == 6
    assert make(parse_token("grid_2x3")) == GRID


@pytest.mark.parametrize("token", ["cycle:2", "nope:3", "path:x", "grid_2x3:5", "cycle:4,5", "cycle"])
def test_bad_tokens(token):
    with pytest.raises(FamilyError):
        make(parse_token(token))


def test_token_round_trip():
    for spec in registry_instances():
        assert parse_token(spec.token) == spec
    assert parse_token("custom:C~").token == "custom:C~"


def test_exception_examples():
    assert is_exception(cycle(4), "i")
    assert is_exception(path(7), "ii")
    assert not is_exception(cartesian_product(complete(3), complete(2)), "ii")
    assert is_exception(GRID, "ii")
    assert not is_exception(path(3), "ii") and not is_exception(cycle(3), "ii")
    assert not is_exception(cycle(5), "i")
    assert cycle(4) in ExceptionList("i")
    with pytest.raises(FamilyError):
        is_exception(build_graph(4, [(0, 1), (2, 3)]), "i")


def test_exception_detection_is_exact_on_small_classes(classes7):
    mode_i = {canonical_code(cycle(4))}
    mode_ii = {canonical_code(GRID)}
    for n in range(4, 8):
        mode_ii |= {canonical_code(path(n)), canonical_code(cycle(n))}
    for g in classes7:
        code = canonical_code(g)
        assert is_exception(g, "i") == (code in mode_i)
        assert is_exception(g, "ii") == (code in mode_ii)


def test_exceptions_are_needed():
    """Each excluded graph satisfies its hypothesis yet is not super."""
    h0p4 = PairSpec.of("H0", "P4")
    g = cycle(4)
    assert is_free(g, h0p4) and not is_super_edge_connected(g)[0]
    z1t = PairSpec.of("Z1", "T112")
    for g in [GRID] + [path(n) for n in range(4, 13)] + [cycle(n) for n in range(4, 13)]:
        assert is_free(g, z1t)
        sup, w = is_super_edge_connected(g)
        assert not sup and not w.trivial


def test_shared_clique_structure():
    k4, h0, p4 = resolve(["K4", "H0", "P4"])
    for m in range(4, 7):
        g = make(FamilySpec("two_cliques_shared_vertex", m))
        assert contains_induced(g, k4) is not None
        assert contains_induced(g, h0) is not None
        # Longest induced path has three vertices.
        assert contains_induced(g, p4) is None
        assert contains_induced(g, ATLAS["P3"]) is not None


def test_registry_examples():
    entries = registry_verify("path", range(4, 13))
    assert all(e.lam == e.delta == 1 and not e.witness.trivial for e in entries)
    entries = registry_verify("prism", range(2, 7))
    assert [e.lam for e in entries] == [2, 3, 4, 5, 6]
    for e in entries[:3]:
        m = e.lam
        oc = oracle_cut_scan(make(FamilySpec("prism", m)))
        assert (oc.lam, oc.super) == (m, False)
    for e in registry_verify("two_cliques_shared_vertex", range(3, 7)):
        assert e.lam == e.delta == int(e.token.split(":")[1]) - 1


def test_registry_rejects_super_family():
    with pytest.raises(RegistryViolation):
        registry_verify("complete", [5])


def test_full_registry():
    entries = verify_registry()
    assert len(entries) == sum(len(r) for r in REGISTRY.values())
    for e in entries:
        g = make(parse_token(e.token))
        assert e.witness.size == e.lam == edge_connectivity(g)[0]
        assert not e.witness.trivial
