import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from unicolor import Hypergraph, hkr  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=7, min_r=1, max_r=4, nonempty=False):
    r = draw(st.integers(min_r, max_r))
    n = draw(st.integers(r, max(r, max_n)))
    pool = list(combinations(range(1, n + 1), r))
    edges = draw(st.lists(st.sampled_from(pool), min_size=1 if nonempty else 0, max_size=min(len(pool), 14)))
    return Hypergraph(r, n, edges)


@pytest.fixture
def k43():
    return Hypergraph(3, 4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


@pytest.fixture
def single():
    return Hypergraph(3, 3, [(1, 2, 3)])


@pytest.fixture
def h331():
    return hkr(3, 3, 1, 1)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, limit, title): acceptance criterion with a runtime limit")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    setattr(item, f"rep_{report.when}", report)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
