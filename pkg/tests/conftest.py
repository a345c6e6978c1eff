import pytest

from matroid_workbench import CORPUS, corpus_matroid


@pytest.fixture(scope="session")
def corpus_by_name():
    """Every corpus matroid, constructed once per test session."""
    return {entry["name"]: corpus_matroid(entry["name"]) for entry in CORPUS}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for status, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and getattr(
                rep, "when", "call"
            ) in ("call", None):
                rows.append((nodeid.split("::")[-1], verdict))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(set(rows)):
            terminalreporter.write_line(f"{verdict}  {name}")
