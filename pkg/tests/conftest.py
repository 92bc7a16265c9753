import functools

import pytest

from foldcube.oracle import brute_force_automorphisms
from foldcube.topology import CayleyGraph


@functools.lru_cache(maxsize=None)
def _brute(n, folded):
    return brute_force_automorphisms(CayleyGraph(n, folded))


@pytest.fixture(scope="session")
def brute():
    """Cached brute-force automorphism lists, keyed by (n, folded)."""
    return _brute


# acceptance criteria report: one line per criterion at the end of the run
_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _acceptance.get(num, (title, True))
        _acceptance[num] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        title, ok = _acceptance[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}")
