import json
from pathlib import Path

import pytest

from ipfkernel.script import parse_script
from ipfkernel.systems import System

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus"

_criteria = {}


def load(rel: str):
    return parse_script((CORPUS / rel).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def manifest() -> dict:
    return json.loads((CORPUS / "manifest.json").read_text(encoding="utf-8"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title = mark.args
    _criteria[n] = (title, rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, outcome = _criteria[n]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {mark}  {title}")


__all__ = ["ROOT", "CORPUS", "load", "System"]
