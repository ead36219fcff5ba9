import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    passed, _ = _criteria.get(number, (True, title))
    if rep.failed or (rep.when == "call" and rep.skipped):
        passed = False
    _criteria[number] = (passed, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}")
