import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n = marker.args[0]
    _titles[n] = marker.kwargs.get("title", _titles.get(n, ""))
    _criteria.setdefault(n, []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok = all(_criteria[n])
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {_titles.get(n, '')}")


@pytest.fixture
def engineering():
    from fuzzystages.classroom import ENGINEERING

    return ENGINEERING


@pytest.fixture
def management():
    from fuzzystages.classroom import MANAGEMENT

    return MANAGEMENT
