import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from superedge.graph import Graph, from_mask, is_connected

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_mask(n, mask)


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    # Join components with a path through their smallest vertices.
    from superedge.graph import components

    comps = components(g)
    rows = list(g.rows)
    for a, b in zip(comps, comps[1:]):
        u, v = a[0], b[0]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    out = Graph(g.n, tuple(rows))
    assert is_connected(out)
    return out


def random_connected(rng: random.Random, n_min: int, n_max: int) -> Graph:
    """Erdős–Rényi with a random density, resampled until connected."""
    while True:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.15, 0.9)
        mask = 0
        for k in range(n * (n - 1) // 2):
            if rng.random() < p:
                mask |= 1 << k
        g = from_mask(n, mask)
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def classes7():
    from superedge.enumeration import classes_up_to

    return classes_up_to(7)


@pytest.fixture(scope="session")
def classes6(classes7):
    return [g for g in classes7 if g.n <= 6]
