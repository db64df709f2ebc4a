import random

from hypothesis import strategies as st

from lossycvc.graph import Graph

# letters a, b, c, ... map to labels 1, 2, 3, ...
A, B, C, D, E, F = 1, 2, 3, 4, 5, 6


def path(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, list(zip(vs, vs[1:])))


def cycle(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def star(leaves, center=1):
    return Graph([center], [(center, center + i) for i in range(1, leaves + 1)])


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    """Random spanning tree plus extra edges; labels 0..n-1."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in zip(range(1, n), parents)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph(range(n), edges)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, k in zip(pairs, keep) if k])


def rng(seed=0):
    return random.Random(seed)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
