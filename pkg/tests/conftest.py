import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from youngpaths import Partition, enumerate_partitions  # noqa: E402


@pytest.fixture
def shape_5433():
    return Partition((5, 4, 3, 3))


def partitions_up_to(n):
    return list(enumerate_partitions(n))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test certifies")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
