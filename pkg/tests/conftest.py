import pytest
from hypothesis import settings, strategies as st

from unilabel.graph import Graph

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

ACCEPTANCE_KEY = pytest.StashKey[list]()


@st.composite
def bounded_degree_graphs(draw, max_n=12, max_degree=4, min_n=0):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(0, max_degree))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    deg = [0] * n
    edges = []
    for u, v in chosen:
        if deg[u] < d and deg[v] < d:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges), d


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(criterion, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
