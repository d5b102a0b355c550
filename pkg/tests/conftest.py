import pytest

from wedgeplan.configuration import Configuration
from wedgeplan.geometry import VERTEX, PhysPoint

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def st(a, b):
    """Shorthand: st((1, 0.2), None) is A on circle 1 at 0.2, B at the vertex."""
    conv = lambda p: VERTEX if p is None else PhysPoint(*p)
    return Configuration(conv(a), conv(b))


@pytest.fixture
def golden_query():
    return st((1, 0.2), (1, 0.6)), st((2, 0.9), (3, 0.4))
