import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knotquandle.diagram import load_diagram  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "knotquandle" / "data"


def diagram(name):
    return load_diagram(DATA / f"{name}.json")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def trefoil():
    return diagram("trefoil")


@pytest.fixture
def trefoil_companion():
    return diagram("trefoil_companion")


@pytest.fixture
def figure_eight():
    return diagram("figure_eight")


@pytest.fixture
def unknot():
    return diagram("unknot")


@pytest.fixture
def cinquefoil():
    return diagram("cinquefoil")


@pytest.fixture
def double_pattern():
    return diagram("double_pattern")


@pytest.fixture
def torus_pattern():
    return diagram("torus_5_2_pattern")


# one summary line per acceptance criterion

_criteria: dict[int, list[str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        for key, value in report.user_properties:
            if key == "criterion":
                _criteria.setdefault(value, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} ({len(outcomes)} checks)")
