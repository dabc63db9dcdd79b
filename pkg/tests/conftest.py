import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets the checks it made."""
    record = {"title": request.node.function.__doc__.strip().splitlines()[0], "ok": False}
    ACCEPTANCE[request.node.name] = record
    yield record


def pytest_runtest_makereport(item, call):
    rec = ACCEPTANCE.get(item.name)
    if rec is not None and call.when == "call":
        rec["ok"] = call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        rec = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if rec['ok'] else 'FAIL'}  {rec['title']}")
