import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oriented_pursuit import OrientedGraph, UndirectedGraph  # noqa: E402


@st.composite
def oriented_graphs(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for u, v in combinations(range(n), 2):
        choice = draw(st.sampled_from(["none", "fwd", "back"]))
        if choice == "fwd":
            arcs.append((u, v))
        elif choice == "back":
            arcs.append((v, u))
    return OrientedGraph(n, arcs)


@st.composite
def undirected_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph(n, [p for p, k in zip(pairs, keep) if k])


@pytest.fixture
def arc():
    return OrientedGraph(2, [(0, 1)])


@pytest.fixture
def dc3():
    return OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def transitive():
    return OrientedGraph.from_names(["u", "v", "w"], [("u", "v"), ("u", "w"), ("v", "w")])


# acceptance criteria report: one line per criterion in the terminal summary

_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    log = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(number: int, ok: bool, elapsed: float, bound, detail: str = ""):
        limit = f" (limit {bound:.0f}s)" if bound else ""
        log.append((number, f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {elapsed:7.1f}s{limit}  {detail}"))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE_KEY, [])
    if log:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(log):
            terminalreporter.write_line(line)
