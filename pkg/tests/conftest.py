import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (label, passed, seconds, limit); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in ACCEPTANCE:
        label, ok, secs, limit = ACCEPTANCE[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {num}: {label} ({secs:.2f} s, limit {limit} s)")
