import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label is None or rep.when != "call":
        return
    status = "PASS" if rep.passed else "FAIL"
    ACCEPTANCE_RESULTS[item.nodeid] = (status, label)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for status, label in sorted(ACCEPTANCE_RESULTS.values(), key=lambda x: x[1]):
        terminalreporter.write_line(f"{status}  {label}")
