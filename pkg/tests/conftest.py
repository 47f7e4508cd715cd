import pytest
from hermrandic.graph import random_corpus

_acceptance: dict[str, str] = {}


@pytest.fixture(scope="session")
def corpus():
    """The 200-graph corpus: n in [3, 10], pair probability cycled."""
    return random_corpus(200, 3, 10, seed=20240601, p_edge=[0.2, 0.35, 0.5, 0.7])


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{status}  {name}")
