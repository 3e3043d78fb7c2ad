import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("slantlab", max_examples=25, deadline=None)
settings.load_profile("slantlab")

BAND = 256


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
