"""Prints one PASS/FAIL line per acceptance criterion after the run."""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if not match:
                continue
            num = int(match.group(1))
            name = match.group(2).replace("_", " ")
            ok = status == "passed"
            if num in outcomes:
                ok = ok and outcomes[num][1]
            outcomes[num] = (name, ok)
    if not outcomes:
        return
    terminalreporter.write_line("")
    for num in sorted(outcomes):
        name, ok = outcomes[num]
        terminalreporter.write_line(
            f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}"
        )
