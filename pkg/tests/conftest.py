import re

_criteria: dict[int, tuple[str, float, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call" or report.failed:
        prev = _criteria.get(num)
        if prev and prev[0] == "FAIL":
            return
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _criteria[num] = (status, report.duration, m.group(2))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, secs, name = _criteria[num]
        terminalreporter.write_line(f"{status} criterion {num:2d} {name.replace('_', ' ')} ({secs:.2f}s)")
