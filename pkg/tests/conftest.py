import pytest
from hypothesis import settings

from pipefom.fom import FomLimits, explore
from pipefom.impair import ImpairmentParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

REFERENCE_PARAMS = ImpairmentParams(eps_gain=-0.015, alpha_nl=0.2)

# acceptance lines collected by tests/test_acceptance.py, printed at the end
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ten_bit_run():
    """Full 10-bit exploration at the reference impairments, shared across modules."""
    return explore(10, REFERENCE_PARAMS, FomLimits())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
