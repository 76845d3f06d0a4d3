"""Prints one PASS/FAIL line per acceptance criterion after the run."""

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        title = getattr(item.function, "criterion", None)
        if title:
            item.user_properties.append(("criterion", title))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = (props["criterion"], "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for title, verdict in sorted(_ACCEPTANCE.values()):
        terminalreporter.write_line(f"{verdict}  {title}")
