import pytest

from tropdisc import derive, load_polynomial, load_system, tropicalize
from tropdisc.data import PAPER_DISCRIMINANT, PAPER_SYSTEM

_acceptance_lines = []


@pytest.fixture(scope="session")
def paper_spec():
    return load_system(PAPER_SYSTEM)


@pytest.fixture(scope="session")
def paper_derived(paper_spec):
    return derive(paper_spec)


@pytest.fixture(scope="session")
def paper_fan(paper_derived):
    return tropicalize(paper_derived)


@pytest.fixture(scope="session")
def paper_delta():
    return load_polynomial(PAPER_DISCRIMINANT)


@pytest.fixture
def record_criterion():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""
    def record(name, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        print(line)
        _acceptance_lines.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
