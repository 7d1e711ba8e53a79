import pytest

from gaussperiods.fftower import kernel


@pytest.fixture(params=kernel.available_backends())
def backend(request):
    """Run the test once per available arithmetic kernel."""
    previous = kernel.set_backend(request.param)
    yield request.param
    kernel.set_backend(previous)


_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion.

    Usage: ``criterion("C1 ...", detail)`` after the assertions; a test that
    fails before reaching the call is reported as FAIL from its outcome.
    """
    state = {}

    def record(label, detail=""):
        state["label"], state["detail"] = label, detail

    yield record
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    label = state.get("label", request.node.name)
    line = f"{'PASS' if passed else 'FAIL'}  {label}"
    if state.get("detail"):
        line += f"  ({state['detail']})"
    _ACCEPTANCE_LINES.append(line)
    print("\n" + line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
