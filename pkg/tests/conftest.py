from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from zdposet import build_poset, named_example  # noqa: E402
from zdposet.graphs import ZdGraph  # noqa: E402


@st.composite
def posets(draw, min_size: int = 1, max_size: int = 9):
    """Random poset: a DAG on labels 1..n-1 (forward pairs), bottom 0 adjoined,
    labels shuffled before building so the bottom is not always listed first."""
    n = draw(st.integers(min_size, max_size))
    labels = [f"e{i}" for i in range(n)]
    pairs = [(labels[0], labels[i]) for i in range(1, n)]
    for i in range(1, n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                pairs.append((labels[i], labels[j]))
    order = draw(st.permutations(labels))
    return build_poset(order, pairs)


@st.composite
def graphs(draw, max_size: int = 10):
    n = draw(st.integers(0, max_size))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if draw(st.booleans())
    ]
    return ZdGraph.from_edges(n, edges)


@pytest.fixture(scope="session")
def deg_poset():
    return named_example("deg_counterexample")


@pytest.fixture(scope="session")
def powerset3():
    return named_example("powerset", 3)


@pytest.fixture(scope="session")
def p0_3():
    return named_example("p0_trunc", 3)


@pytest.fixture(scope="session")
def antichain3():
    return named_example("antichain", 3)


@pytest.fixture(scope="session")
def chain3():
    return build_poset(["0", "a", "b"], [("0", "a"), ("a", "b")])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
