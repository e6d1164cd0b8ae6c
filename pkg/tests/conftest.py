from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from test_acceptance import CRITERIA, RESULTS, format_result
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, _ in CRITERIA:
        if label in RESULTS:
            terminalreporter.write_line(format_result(label, RESULTS[label]))
