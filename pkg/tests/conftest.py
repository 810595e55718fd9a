import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from satpart.graph import Graph, Partition, Side

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE = []


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_partition(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    sides = draw(st.lists(st.sampled_from([Side.ONE, Side.TWO]), min_size=g.n, max_size=g.n))
    return g, Partition(tuple(sides))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20201015)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is not None and call.when == "call":
        ACCEPTANCE.append((marker.args[0], marker.args[1], call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    verdict: dict[int, list] = {}
    for number, title, ok in ACCEPTANCE:
        entry = verdict.setdefault(number, [title, True])
        entry[1] = entry[1] and ok
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdict):
        title, ok = verdict[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")
