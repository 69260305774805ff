import pytest

# criterion name -> (passed, seconds); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, secs) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s)")


@pytest.fixture
def criterion(request):
    """Record a criterion's outcome by test name, even when it fails."""
    import time
    name = request.node.get_closest_marker("criterion").args[0]
    t0 = time.perf_counter()
    state = {}
    yield state
    ok = request.node.rep_call.passed if hasattr(request.node, "rep_call") else False
    ACCEPTANCE[name] = (ok, state.get("elapsed", time.perf_counter() - t0))
    print(f"{'PASS' if ok else 'FAIL'}: {name}")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): an acceptance criterion")
