"""Shared pytest wiring: a summary line per acceptance criterion."""
from __future__ import annotations


def pytest_configure(config):
    config._criteria = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            config._criteria[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    outcomes = {}
    for reports in terminalreporter.stats.values():
        for report in reports:
            nodeid = getattr(report, "nodeid", None)
            if nodeid in criteria and getattr(report, "when", None) == "call":
                outcomes[nodeid] = report.outcome
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid, (number, title) in sorted(criteria.items(), key=lambda kv: kv[1][0]):
        outcome = outcomes.get(nodeid, "not run")
        status = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"criterion {number}: {status} - {title}")
