import random

import pytest
from hypothesis import strategies as st

from mcsplit_rl import Graph

# Target vertices in the worked example are named a..f.
A, B, C, D, E, F = range(6)


def fig1_graphs() -> tuple[Graph, Graph]:
    """Worked-example graphs: 0 is adjacent to 1, 2, 3 but not 4; a to b, c, e, f but not d.

    Only those adjacencies are fixed by the example; the remaining edges are
    arbitrary filler.
    """
    gp = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)])
    gt = Graph(6, [(A, B), (A, C), (A, E), (A, F), (B, C), (D, E), (E, F)])
    return gp, gt


def path3() -> Graph:
    return Graph(3, [(0, 1), (1, 2)])


def triangle() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


def random_graph(
    rng: random.Random, n: int, p: float, directed: bool = False, n_labels: int = 1
) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and (directed or u < v) and rng.random() < p
    ]
    labels = [rng.randrange(n_labels) for _ in range(n)]
    return Graph(n, edges, labels, directed)


@st.composite
def graphs(draw, max_n=7, directed=None, n_labels=None):
    n = draw(st.integers(0, max_n))
    if directed is None:
        directed = draw(st.booleans())
    if n_labels is None:
        n_labels = draw(st.sampled_from([1, 2]))
    labels = draw(st.lists(st.integers(0, n_labels - 1), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (directed or u < v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep], labels, directed)


@st.composite
def graph_pairs(draw, max_n=6):
    directed = draw(st.booleans())
    n_labels = draw(st.sampled_from([1, 2]))
    gp = draw(graphs(max_n, directed, n_labels))
    gt = draw(graphs(max_n, directed, n_labels))
    return gp, gt


@pytest.fixture
def rng():
    return random.Random(20261016)


# Acceptance criteria register a pass/fail line here; printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
