import pytest

from sumprod.exactspp import compute_exact

ACCEPTANCE_LINES: dict[int, str] = {}
ACCEPTANCE_NOTES: list[str] = []


@pytest.fixture(scope="session")
def exact_results():
    """compute_exact for n = 1..6, shared across test modules."""
    return {n: compute_exact(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def note():
    """Append an informational line to the acceptance summary."""
    return ACCEPTANCE_NOTES.append


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion; printed at the end of the run."""
    state = {}

    def declare(number, title):
        state["number"], state["title"] = number, title

    yield declare
    if "number" in state:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        ACCEPTANCE_LINES[state["number"]] = (f"criterion {state['number']:2d}: "
                                             f"{'PASS' if ok else 'FAIL'}  {state['title']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
        for line in ACCEPTANCE_NOTES:
            terminalreporter.write_line("  note: " + line)
