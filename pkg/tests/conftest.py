import pathlib

import pytest

from biquandles.core import Biquandle, BlockConvention, read_biquandle
from biquandles.gauss import parse_gauss_code

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# populated by tests/test_acceptance.py, printed after the run
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA


@pytest.fixture(scope="session")
def kishino_T() -> Biquandle:
    return read_biquandle((DATA / "kishinoT.bq").read_text(),
                          BlockConvention.DEFINITION)


@pytest.fixture(scope="session")
def kishino_code():
    return parse_gauss_code((DATA / "kishino.gauss").read_text())


@pytest.fixture(scope="session")
def trefoil_code():
    return parse_gauss_code((DATA / "trefoil.gauss").read_text())


@pytest.fixture(scope="session")
def conway_code():
    return parse_gauss_code((DATA / "conway.gauss").read_text())


@pytest.fixture(scope="session")
def link_code():
    return parse_gauss_code((DATA / "link-two-component.gauss").read_text())


@pytest.fixture(scope="session")
def unknot_code():
    return parse_gauss_code((DATA / "unknot.gauss").read_text())


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}: {name} ({detail})")
