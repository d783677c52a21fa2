import re
from pathlib import Path

import pytest

from dialgebra import formats

FIXTURES = Path(__file__).parent / "fixtures"

_CRITERIA = {}
_TITLES = {
    1: "enveloping presentations pass check-gsb",
    2: "oracle agrees to degree 5; Clifford dims 4, 12, 32",
    3: "S1 fails check-gsb but matches Irr of the GSB",
    4: "PBW count 2 per degree for d = 1..5",
    5: "bar extension is a GSB with bar-unit normal forms 0",
    6: "free product counts 2d and alternation predicate",
    7: "completion of the raw relations matches Irr to degree 4",
    8: "property suites, >= 1000 cases each, < 5 min",
}


def fixture_path(name):
    return str(FIXTURES / name)


def load_presentation(name):
    return formats.presentation_from_json(formats.load(fixture_path(name)))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[n] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        verdict = "PASS" if _CRITERIA[n] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {_TITLES.get(n, '')}")
