import sys
from pathlib import Path

import pytest

from harmful_rum import load

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def example():
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = load(DATA / f"example{k}.json")
        return cache[k]

    return get


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    k, title = props["criterion"]
    if report.when == "call" or report.outcome != "passed":
        status = "PASS" if report.outcome == "passed" else "FAIL"
        if _CRITERIA.get(k, (None, "PASS"))[1] == "PASS":
            _CRITERIA[k] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        title, status = _CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:2d} {status}  {title}")
