from __future__ import annotations

import pytest
from hypothesis import settings, strategies as st

from cambrianrep.polygon import build_polygon
from cambrianrep.quiver import QuiverA

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def orientations(max_n: int = 5, min_n: int = 0):
    """Random orientations with min_n <= n <= max_n."""
    return st.text(alphabet="RL", min_size=min_n + 1, max_size=max_n + 1).map(QuiverA.from_string)


@pytest.fixture(scope="session")
def running():
    return QuiverA.from_string("RRRLRL")


@pytest.fixture(scope="session")
def running_polygon(running):
    return build_polygon(running)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
