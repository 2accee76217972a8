import pytest

_outcomes: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    n, title = marker.args
    prev_title, results = _outcomes.setdefault(n, (title, []))
    if rep.failed or (rep.when == "call"):
        results.append("pass" if rep.passed else "fail")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        title, results = _outcomes[n]
        verdict = "PASS" if results and all(r == "pass" for r in results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2} {verdict}  {title}")
