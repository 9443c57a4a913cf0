import os
from pathlib import Path

import pytest
from hypothesis import settings

from axcount import leech

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def census_run():
    """A fresh census; returns (table, seconds).  Set AXCOUNT_TYPES_CACHE to reuse a file."""
    import time
    cache = os.environ.get("AXCOUNT_TYPES_CACHE")
    t0 = time.perf_counter()
    table = leech.build_type_table(1, Path(cache) if cache else None)
    elapsed = time.perf_counter() - t0
    leech.set_type_table(table)
    return table, elapsed


@pytest.fixture(scope="session")
def types(census_run):
    return census_run[0]


# --- acceptance summary ----------------------------------------------------------

_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title, note=''): acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    n, title, note = marker
    entry = _CRITERIA.setdefault(n, [title, True, note])
    if report.failed or (report.skipped and not hasattr(report, "wasxfail")):
        entry[1] = False


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            n, title = m.args[:2]
            item.user_properties.append(("criterion", (n, title, m.kwargs.get("note", ""))))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, note = _CRITERIA[n]
        tr.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}"
                      + (f"  [{note}]" if note else ""))
