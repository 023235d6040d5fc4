import os
from collections import OrderedDict

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("stress", max_examples=4000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (title, [(test id, passed, expected-failure reason)])
_criteria = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        note = getattr(report, "wasxfail", "") if report.skipped else ""
        _criteria.setdefault(number, (title, []))[1].append((item.name, report.passed, note))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, results = _criteria[number]
        passed = sum(ok for _, ok, _ in results)
        verdict = "PASS" if passed == len(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict}  {title}  ({passed}/{len(results)} checks)"
        )
        for name, ok, note in results:
            if note:
                terminalreporter.write_line(f"    failed (known): {name}: {note}")
            elif not ok:
                terminalreporter.write_line(f"    failed: {name}")
