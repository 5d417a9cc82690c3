import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tensorcc import generators as gen  # noqa: E402
from tensorcc.graph import Graph  # noqa: E402


def wheel(k: int) -> Graph:
    """Hub ``k`` joined to the cycle ``0..k-1``."""
    return Graph.from_edges(k + 1, [(k, i) for i in range(k)] + [(i, (i + 1) % k) for i in range(k)])


NAMED = {
    "K1": gen.complete(1),
    "K2": gen.complete(2),
    "K3": gen.complete(3),
    "K4": gen.complete(4),
    "K5": gen.complete(5),
    "P3": gen.path(3),
    "P4": gen.path(4),
    "C4": gen.cycle(4),
    "C5": gen.cycle(5),
    "C6": gen.cycle(6),
    "K23": gen.complete_bipartite(2, 3),
    "K33": gen.complete_bipartite(3, 3),
    "petersen": gen.petersen(),
    "paley13": gen.paley(13),
    "W5": wheel(5),
    "K3+K1": Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]),
    "er10": gen.erdos_renyi(10, 0.5, 42),
}


@pytest.fixture(params=sorted(NAMED))
def named_graph(request):
    return NAMED[request.param]


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines, key=lambda x: int(x[0].split("_")[2])):
            terminalreporter.write_line(f"{outcome:<7} {name}")
