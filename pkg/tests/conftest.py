from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from epscert import LinearFractionalObjective, PolyhedralSet, Problem

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
F = Fraction


@pytest.fixture
def halfplane():
    """K = {x1 >= 0} in R^2 with f(x) = (x1, x2)."""
    K = PolyhedralSet([[-1, 0]], [0], 2)
    objs = (LinearFractionalObjective.linear([1, 0]), LinearFractionalObjective.linear([0, 1]))
    return Problem(objs, K)


@pytest.fixture
def corner():
    """min (y1, y2) over {y1 + y2 >= 1, y >= 0}."""
    K = PolyhedralSet([[-1, -1], [-1, 0], [0, -1]], [-1, 0, 0], 2)
    objs = (LinearFractionalObjective.linear([1, 0]), LinearFractionalObjective.linear([0, 1]))
    return Problem(objs, K)


@pytest.fixture
def ratio_objective():
    """(x1 + x2) / (x1 + 2)."""
    return LinearFractionalObjective([1, 1], 0, [1, 0], 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
