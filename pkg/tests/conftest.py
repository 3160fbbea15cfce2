import random

import pytest

from mpxrank import Layer, MultiplexNetwork


@pytest.fixture
def write(tmp_path):
    """Write ``text`` to ``tmp_path/name`` and return the path."""

    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def rng():
    return random.Random(20240617)


def triangle(name="K3", directed=False):
    return Layer.from_edges(name, [("a", "b"), ("b", "c"), ("a", "c")], directed)


@pytest.fixture
def two_triangles():
    return MultiplexNetwork((triangle("x"), triangle("y")))


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        if report.skipped and isinstance(report.longrepr, tuple):
            title = f"{title} ({report.longrepr[2]})"
        _ACCEPTANCE.setdefault(number, []).append((status, title, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        for status, title, name in _ACCEPTANCE[number]:
            terminalreporter.write_line(f"[{status}] criterion {number}: {title}  <{name}>")
