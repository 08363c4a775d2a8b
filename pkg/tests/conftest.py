from importlib.resources import files

import pytest

from transpark import SetSystem, TransversalMatroid, parse_set_system


def load_fixture(name: str) -> SetSystem:
    return parse_set_system(files("transpark").joinpath("fixtures", name).read_text())


def fixture_path(name: str) -> str:
    return str(files("transpark").joinpath("fixtures", name))


@pytest.fixture
def ex32() -> SetSystem:
    return load_fixture("example3_2.json")


@pytest.fixture
def tiny() -> SetSystem:
    return load_fixture("tiny.json")


@pytest.fixture
def coloop() -> SetSystem:
    return load_fixture("coloop.json")


@pytest.fixture
def ex32_matroid(ex32) -> TransversalMatroid:
    return TransversalMatroid(ex32)


def S(A: SetSystem, *labels) -> int:
    """Bitmask of the given ground labels."""
    m = 0
    for lab in labels:
        m |= 1 << A.ground.index(str(lab))
    return m


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        for key, value in report.user_properties:
            if key == "criterion":
                _acceptance.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for name, outcome in _acceptance:
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
