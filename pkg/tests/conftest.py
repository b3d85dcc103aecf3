import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mmic.graph import from_edge_list

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def simple_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def multigraphs(draw, min_n=1, max_n=6, max_mult=3):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    if not pairs:
        return from_edge_list(n, [])
    chosen = draw(st.lists(st.tuples(st.sampled_from(pairs), st.integers(1, max_mult)), max_size=12))
    return from_edge_list(n, [p for p, m in chosen for _ in range(m)])


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


def random_simple_graph(rng: random.Random, max_n: int = 8):
    n = rng.randint(1, max_n)
    p = rng.random()
    return from_edge_list(n, [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(RESULTS):
            terminalreporter.write_line(f"{name}: {RESULTS[name]}")
