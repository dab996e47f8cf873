from __future__ import annotations

import os
from pathlib import Path

import numpy as np
import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


@pytest.fixture
def rng():
    return np.random.default_rng(20241014)


@pytest.fixture(scope="session")
def axis_dir() -> Path | None:
    """Directory of external axis files, one ``<label>.axis`` per orbit."""
    env = os.environ.get("MMREDUCE_AXIS_DIR")
    for d in ([Path(env)] if env else []) + [Path(__file__).parent / "data" / "axes"]:
        if d.is_dir() and any(d.glob("*.axis")):
            return d
    return None


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    rep = out.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "SKIP" if rep.skipped else ("PASS" if rep.passed else "FAIL")
        prev = _RESULTS.get(n)
        if prev is None or prev[0] == "PASS":
            _RESULTS[n] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        status, title = _RESULTS[n]
        tr.write_line(f"criterion {n:2d}  {status}  {title}")
