import re

_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        if report.failed or _CRITERIA.get(n) != "FAIL":
            _CRITERIA[n] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n:2d}: {_CRITERIA[n]}")
