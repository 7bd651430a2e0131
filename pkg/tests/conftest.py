import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pwkilling.exactlin import Q
from pwkilling.planewave import Params

settings.register_profile(
    "default", deadline=None, max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


def rationals(max_num=9, max_den=6):
    return st.builds(lambda n, d: Q(n, d), st.integers(-max_num, max_num), st.integers(1, max_den))


def params(epsilon=None):
    eps = st.sampled_from([0, 1]) if epsilon is None else st.just(epsilon)
    return st.builds(Params, eps, rationals(), rationals(), rationals())


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
