import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import cycle_graph, grid_graph, path_graph, star_graph  # noqa: E402

_criteria = []


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def grid():
    return grid_graph()


@pytest.fixture
def cycle4():
    return cycle_graph(4)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _criteria.append((name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, secs in _criteria:
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{verdict:5s} {name} ({secs:.1f}s)")
