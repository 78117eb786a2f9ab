import sys

import pytest

from rcokit import platonic, pseudo_rco, rco


@pytest.fixture(scope="session")
def rco_solid():
    return rco()


@pytest.fixture(scope="session")
def pseudo_solid():
    return pseudo_rco()


@pytest.fixture(scope="session")
def cube():
    return platonic("cube")


@pytest.fixture(scope="session")
def tetrahedron():
    return platonic("tetrahedron")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[number]
        terminalreporter.write_line(f"ACCEPT {number}: {'PASS' if ok else 'FAIL'}  {title}")
