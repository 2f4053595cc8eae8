import random

import pytest
from hypothesis import strategies as st

from autpart.corpus import atlas_graphs, random_class_h, random_graph
from autpart.graph import Graph, in_class_h

# Lines printed by the acceptance suite; shown in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture(scope="session")
def small_class_h():
    """All connected sparse graphs with at most 6 vertices, one per isomorphism class."""
    return [g for g in atlas_graphs(6) if in_class_h(g)]


@pytest.fixture(scope="session")
def random_class_h_78():
    rng = random.Random(20240611)
    return [random_class_h(rng, rng.choice((7, 8))) for _ in range(1000)]


@pytest.fixture(scope="session")
def random_small():
    """Arbitrary graphs (possibly disconnected) with 1 <= n <= 7."""
    rng = random.Random(97)
    return [random_graph(rng, rng.randint(1, 7)) for _ in range(200)]
