import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from superedge.graph import build_graph, cartesian_product, complete, cycle, induced_subgraph, path, star
from superedge.patterns import (
    ATLAS,
    PairSpec,
    PatternError,
    atlas_flags,
    contains_induced,
    custom_pattern,
    induced_subgraph_of,
    is_free,
    is_induced_embedding,
    oracle_contains_induced,
    pair_precedes,
    resolve,
)

GRID = cartesian_product(path(2), path(3))
PRISM = cartesian_product(complete(3), complete(2))


def test_atlas_has_eleven_connected_patterns():
    assert sorted(ATLAS) == sorted(["P3", "P4", "P5", "P6", "K13", "K14", "Z1", "Z2", "H0", "T112", "T113"])


@pytest.mark.parametrize(
    "name, degrees",
    [
        ("Z1", [1, 2, 2, 3]),
        ("Z2", [1, 2, 2, 2, 3]),
        ("H0", [2, 2, 2, 2, 4]),
        ("T112", [1, 1, 1, 2, 3]),
        ("T113", [1, 1, 1, 2, 2, 3]),
        ("K14", [1, 1, 1, 1, 4]),
    ],
)
def test_atlas_degree_sequences(name, degrees):
    assert sorted(ATLAS[name].graph.degrees()) == degrees


def test_contains_examples():
    assert contains_induced(cycle(5), ATLAS["Z1"]) is None
    z1 = ATLAS["Z1"].graph
    assert contains_induced(z1, ATLAS["Z1"]) == (0, 1, 2, 3)
    assert contains_induced(GRID, ATLAS["T112"]) is None
    assert not oracle_contains_induced(GRID, ATLAS["T112"])
    emb = contains_induced(PRISM, ATLAS["Z1"])
    assert emb is not None and is_induced_embedding(PRISM, z1, emb)
    assert oracle_contains_induced(PRISM, ATLAS["Z1"])


def test_grid_claw():
    # Middle vertex of one row with its three neighbours.
    assert induced_subgraph(GRID, [0, 1, 2, 4]).edges() == [(0, 1), (1, 2), (1, 3)]


def test_pattern_larger_than_host():
    assert contains_induced(path(3), ATLAS["P6"]) is None
    assert not oracle_contains_induced(path(3), ATLAS["P6"])


def test_is_free_examples():
    h0p4 = PairSpec.of("H0", "P4")
    assert is_free(cycle(4), h0p4)
    assert not is_free(path(5), h0p4)
    p3 = PairSpec.of("P3")
    assert all(is_free(complete(n), p3) for n in range(1, 9))


def test_induced_subgraph_of_examples():
    assert induced_subgraph_of(ATLAS["P3"], ATLAS["P4"])
    assert not induced_subgraph_of(ATLAS["K13"], ATLAS["H0"])
    assert not induced_subgraph_of(ATLAS["T112"], ATLAS["K14"])


def test_oracle_examples():
    assert not oracle_contains_induced(complete(4), ATLAS["Z1"])
    assert not oracle_contains_induced(ATLAS["H0"].graph, ATLAS["P4"])


def test_oracle_host_bound():
    with pytest.raises(PatternError):
        oracle_contains_induced(path(13), ATLAS["P3"])


def test_precedence_examples():
    assert pair_precedes(PairSpec.of("H0", "P4"), PairSpec.of("H0", "P5"))
    assert not pair_precedes(PairSpec.of("Z1", "T112"), PairSpec.of("Z1", "K14"))
    for names in [("H0", "P4"), ("Z1", "T112"), ("K13",)]:
        x = PairSpec.of(*names)
        assert pair_precedes(x, x)


def test_pair_validation():
    with pytest.raises(PatternError):
        PairSpec.of("P4", "P4")
    with pytest.raises(PatternError):
        PairSpec(())
    with pytest.raises(PatternError):
        PairSpec.of("P3", "P4", "P5")
    with pytest.raises(PatternError):
        resolve(["nope"])
    assert str(PairSpec.of("H0", "P4")) == "{H0,P4}"


def test_parametric_names():
    k4, c5, p7 = resolve(["K4", "C5", "P7"])
    assert k4.graph == complete(4)
    assert c5.graph == cycle(5)
    assert p7.graph == path(7)
    with pytest.raises(PatternError):
        resolve(["C2"])


def test_custom_pattern_must_be_connected():
    with pytest.raises(PatternError):
        custom_pattern("X", build_graph(4, [(0, 1), (2, 3)]))
    dart = custom_pattern("D", build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4)]))
    assert resolve(["D"], {"D": dart}) == [dart]


def test_matcher_matches_oracle_on_small_classes(classes6):
    bad = []
    for g in classes6:
        for name, p in ATLAS.items():
            emb = contains_induced(g, p)
            if (emb is not None) != oracle_contains_induced(g, p):
                bad.append((g, name))
            if emb is not None and not is_induced_embedding(g, p.graph, emb):
                bad.append((g, name, emb))
    assert bad == []


@given(graphs(max_n=9), st.sampled_from(sorted(ATLAS)))
def test_matcher_matches_oracle(g, name):
    p = ATLAS[name]
    emb = contains_induced(g, p)
    assert (emb is not None) == oracle_contains_induced(g, p)
    if emb is not None:
        assert is_induced_embedding(g, p.graph, emb)


@given(graphs(min_n=2, max_n=9), st.sampled_from(sorted(ATLAS)), st.data())
def test_freeness_is_hereditary(g, name, data):
    keep = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    h = induced_subgraph(g, keep)
    if is_free(g, [ATLAS[name]]):
        assert is_free(h, [ATLAS[name]])


PAIRS = [("H0", "P4"), ("Z1", "T112"), ("Z1", "P5"), ("H0", "P5"), ("Z1", "K14"), ("K13", "Z1"), ("P4",)]


@given(graphs(max_n=8), st.sampled_from(PAIRS), st.sampled_from(PAIRS))
def test_precedence_is_monotone(g, a, b):
    h1, h2 = PairSpec.of(*a), PairSpec.of(*b)
    if pair_precedes(h1, h2) and is_free(g, h1):
        assert is_free(g, h2)


def test_atlas_flags():
    flags = atlas_flags(path(6))
    assert flags["P6"] and flags["P3"] and not flags["Z1"] and not flags["K13"]
    assert atlas_flags(star(4))["K14"]
