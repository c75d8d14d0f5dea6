from __future__ import annotations

import pytest
from hypothesis import settings

from fuzzyimpl.algebra import Chain

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def luk3():
    return Chain.lukasiewicz(2)


@pytest.fixture
def goedel3():
    return Chain.goedel(2)


@pytest.fixture
def boolean():
    return Chain.lukasiewicz(1)


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion.

    Call with the criterion name, a boolean and a short detail string; the
    lines are echoed immediately and repeated in the terminal summary.
    """

    def record(name: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        request.config.acceptance_lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
