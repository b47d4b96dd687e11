"""Shared fixtures for the acceptance suite plus a terminal summary that
prints one line per acceptance criterion at the end of the run."""

import re
import time

import pytest

from glab.cayley import ball
from glab.groups import presets

# wall-clock cost of each session ball, so acceptance tests can charge the
# build to their criterion's time budget even when the fixture is shared
BUILD_SECONDS: dict[str, float] = {}


def _timed_ball(name, G, radius):
    t0 = time.perf_counter()
    b = ball(G, radius, store_parents=False)
    BUILD_SECONDS[name] = time.perf_counter() - t0
    return b


@pytest.fixture(scope="session")
def build_seconds():
    return BUILD_SECONDS


@pytest.fixture(scope="session")
def h_ball6():
    return _timed_ball("h_ball6", presets.h_group(), 6)


@pytest.fixture(scope="session")
def gp20_ball6():
    return _timed_ball("gp20_ball6", presets.gp_group(20), 6)


@pytest.fixture(scope="session")
def gp20_ball7():
    return _timed_ball("gp20_ball7", presets.gp_group(20), 7)


_CRITERION_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_criterion_outcomes: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION_RE.search(report.nodeid)
    if m and report.when == "call":
        _criterion_outcomes[int(m.group(1))] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criterion_outcomes):
        verdict = "PASS" if _criterion_outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}")
