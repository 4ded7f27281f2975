import numpy as np
import pytest

from pickspace.sampling import random_geodesic_set, random_rescaling
from pickspace.pick import da_gram
from pickspace.gram import rescale


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def opposite_axes_points(a=0.5, b=0.5):
    return np.array([[0, 0], [a, 0], [0, b]], dtype=complex)


def random_cnp_gram(rng, n, m=3, geodesic=False):
    """Randomly rescaled Drury-Arveson Gram of a random point set."""
    from pickspace.sampling import random_ball_point, random_generic_set

    if geodesic:
        x = random_geodesic_set(n, m, rng)
    elif n >= 3:
        x = random_generic_set(n, m, rng)
    else:
        x = np.array([random_ball_point(m, rng, 0.85) for _ in range(n)])
    return rescale(da_gram(x), random_rescaling(n, rng))


_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
