import pytest

# acceptance criteria results, keyed by the label each test declares via
# the `criterion` decorator in test_acceptance.py; printed as one pass/fail
# line per criterion at the end of the run
_acceptance: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(getattr(item, "function", None), "_criterion", None)
    if label is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome == "skipped"):
        _acceptance[label] = (rep.outcome, rep.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    word = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for label, (outcome, duration) in _acceptance.items():
        terminalreporter.write_line(
            f"{word.get(outcome, outcome.upper())}  {label} ({duration:.2f}s)"
        )
