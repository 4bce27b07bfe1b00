"""Shared test wiring: one summary line per acceptance criterion."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" not in rep.nodeid:
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                rows.append((int(m.group(1)), rep.nodeid.split("::")[-1], outcome))
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, name, outcome in sorted(rows):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        label = _CRITERION.sub("", name).strip("_") or name
        terminalreporter.write_line("criterion %d (%s): %s" % (num, label.replace("_", " "), verdict))
