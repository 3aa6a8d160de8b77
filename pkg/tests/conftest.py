import pytest

from halfiso.corpus import GENERATED_KEYS, PRINTED_KEYS, builtin

_acceptance = {}


@pytest.fixture(scope="session")
def ex1():
    return builtin("ex1-c6"), builtin("ex1-L")


@pytest.fixture(scope="session")
def ex41():
    return builtin("ex41-star"), builtin("ex41-dot")


@pytest.fixture(scope="session")
def ex61():
    return builtin("ex61-bol"), builtin("ex61-d8")


@pytest.fixture(scope="session")
def corpus_tables():
    return {k: builtin(k) for k in PRINTED_KEYS + GENERATED_KEYS}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    prev = _acceptance.get(number, True)
    _acceptance[number] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status = "PASS" if _acceptance[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}")
