import random

import pytest
from hypothesis import strategies as st

from dicycles.digraph import Digraph

_criteria: dict[int, tuple[str, str]] = {}


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, arcs)


@st.composite
def digraphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Digraph(n, arcs)


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number = mark.args[0]
    title = mark.kwargs.get("title", item.name)
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _criteria[number] = (outcome, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcome, title = _criteria[number]
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {title}")


@pytest.fixture
def rng():
    return random.Random(20261018)
