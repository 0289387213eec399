import pytest

from wicks.census import gluing_census, generate_recursive
from wicks.word import parse_word

EXAMPLE_18 = "a b c d e a' f b' e' g h c' f' i g' d' h' i'"
GENUS_ONE = "a1 a2 a3 a1' a2' a3'"

_acceptance: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_acceptance():
    """Register the outcome of an acceptance criterion for the summary block."""

    def record(number: int, ok: bool, detail: str) -> None:
        _acceptance[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        ok, detail = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture(scope="session")
def example_word():
    return parse_word(EXAMPLE_18)


@pytest.fixture(scope="session")
def genus_one():
    return parse_word(GENUS_ONE)


@pytest.fixture(scope="session")
def census1():
    return gluing_census(1)


@pytest.fixture(scope="session")
def census2():
    return gluing_census(2)


@pytest.fixture(scope="session")
def census3():
    return generate_recursive(3, jobs=None)
