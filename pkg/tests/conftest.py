_CRITERIA = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _CRITERIA.append((report.passed, value))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for passed, line in sorted(_CRITERIA, key=lambda x: int(x[1].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {line}")
