import os

import pytest
from hypothesis import HealthCheck, settings

from refgc.seqio import Sequence

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# Example pair used throughout; the target is cut right after the fourth phrase.
EX_TARGET = "AATGCAGGTACTATAAGNAANTGC"
EX_REFERENCE = "AATGTAGGTACATAAGATGCNNNN"
EX_TARGET_4 = "AATGCAGGTACTATAAGNAAN"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example_pair():
    return Sequence.from_str(EX_TARGET), Sequence.from_str(EX_REFERENCE)


@pytest.fixture
def example_pair_4():
    return Sequence.from_str(EX_TARGET_4), Sequence.from_str(EX_REFERENCE)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
