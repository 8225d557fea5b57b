import random

import pytest
from hypothesis import settings

from hikeforge.graph import Digraph

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            verdict = "FAIL (expected)"
        else:
            verdict = "PASS" if report.outcome == "passed" else "FAIL"
        _CRITERIA[label] = (verdict, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")

    def order(label: str):
        head, _, tail = label.partition("-")
        return (int(head), tail)

    for label in sorted(_CRITERIA, key=order):
        verdict, title = _CRITERIA[label]
        terminalreporter.write_line(f"criterion {label:<5} {verdict:<16} {title}")


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def k3():
    return Digraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
