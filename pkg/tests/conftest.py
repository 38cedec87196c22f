import os
import re

import numpy as np
import pytest

import fuzgeo as fg

DEFAULT_SEED = 20240809

# (criterion number, passed, description) rows filled by the acceptance suite
ACCEPTANCE_RESULTS = []


def env_seed() -> int:
    return int(os.environ.get("FUZGEO_SEED", DEFAULT_SEED))


@pytest.fixture
def rng():
    return np.random.default_rng(env_seed())


@pytest.fixture
def ex22_pair():
    # circular point at (1,0) with unit spread; elliptical at (5,2) with (1, 1.5)
    return (fg.FuzzyPoint.circular(1, 0, 1),
            fg.FuzzyPoint.elliptical(5, 2, 1, 1.5))


@pytest.fixture
def ex41_pair():
    # equal circular spreads: midset is the crisp line x = 2.5
    return (fg.FuzzyPoint.circular(0, 0, 2),
            fg.FuzzyPoint.circular(5, 0, 2))


@pytest.fixture
def ex42_pair():
    # unequal circular spreads: midset is a hyperbola family
    return (fg.FuzzyPoint.circular(0, 0, 1),
            fg.FuzzyPoint.circular(5, 0, 2))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    match = re.match(r"test_criterion_(\d+)", item.name)
    if match and "test_acceptance" in str(item.fspath):
        doc = (item.function.__doc__ or "").strip().splitlines()
        desc = doc[0] if doc else item.name
        ACCEPTANCE_RESULTS.append((int(match.group(1)), report.passed, desc))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, passed, desc in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num:>2}: {status} - {desc}")
