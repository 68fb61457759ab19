import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ancprim.selfcheck import field_corpus, random_fields  # noqa: E402

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(scope="session")
def corpus():
    """(descriptor, r, d) triples: quadratics |d| <= 30, E_r^o for r <= 48, 20 random fields."""
    return field_corpus()


@pytest.fixture(scope="session")
def random_corpus():
    return random_fields(20, 120)


@pytest.fixture
def acceptance(request):
    """Record one criterion's outcome for the end-of-run summary."""

    def record(number: int, title: str, ok: bool, note: str = ""):
        ACCEPTANCE_RESULTS[number] = (title, ok, note)
        print(f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title} {note}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, note = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{number:>2} {'PASS' if ok else 'FAIL'}  {title}  {note}")
