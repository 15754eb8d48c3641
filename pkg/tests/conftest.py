import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion."""
    entry = [request.node.name, "FAIL", ""]

    def note(text: str) -> None:
        entry[2] = text

    yield note
    call = getattr(request.node, "rep_call", None)
    if call is not None and hasattr(call, "wasxfail"):
        entry[1] = "XFAIL"
    elif call is not None and call.passed:
        entry[1] = "PASS"
    _ACCEPTANCE.append(tuple(entry))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, text in _ACCEPTANCE:
        terminalreporter.write_line(f"{verdict}  {name}  {text}".rstrip())
