"""Reproducible random test inputs.

Every function takes a :class:`numpy.random.Generator`; nothing touches global
random state.
"""

from __future__ import annotations

import numpy as np

from .hyperbolic import BallAutomorphism, in_single_geodesic, pseudohyperbolic_matrix
from .gram import Tolerances


def random_unitary(m, rng):
    z = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_ball_point(m, rng, rmax=0.9):
    v = rng.normal(size=m) + 1j * rng.normal(size=m)
    v /= np.linalg.norm(v)
    return v * rmax * rng.uniform() ** (1.0 / (2 * m))


def random_automorphism(m, rng, rmax=0.6):
    return BallAutomorphism(random_ball_point(m, rng, rmax), random_unitary(m, rng))


def _separated(points, min_sep):
    if len(points) < 2:
        return True
    d = pseudohyperbolic_matrix(points)
    return d[np.triu_indices(len(points), 1)].min() >= min_sep


def random_disk_points(n, rng, rmax=0.85, min_sep=0.2):
    """``n`` points of the disk, pairwise pseudohyperbolic distance ``>= min_sep``."""
    while True:
        z = np.array([random_ball_point(1, rng, rmax)[0] for _ in range(n)])
        if _separated(z[:, None], min_sep):
            return z


def random_geodesic_set(n, m, rng, rmax=0.85, min_sep=0.2, automorphism_radius=0.6):
    """Disk points placed in ``B^m`` along the first axis, then moved by a random automorphism."""
    z = random_disk_points(n, rng, rmax, min_sep)
    x = np.zeros((n, m), dtype=complex)
    x[:, 0] = z
    return random_automorphism(m, rng, automorphism_radius)(x)


def random_generic_set(n, m, rng, margin=1e-7, rmax=0.85, min_sep=0.2, max_tries=10_000):
    """Points of ``B^m`` that fail the geodesic test with ``sigma_2/sigma_1 >= margin``."""
    if n < 3 or m < 2:
        raise ValueError("a set off every complex geodesic needs n >= 3 and m >= 2")
    strict = Tolerances(rankone_tol=margin)
    for _ in range(max_tries):
        x = np.array([random_ball_point(m, rng, rmax) for _ in range(n)])
        if not _separated(x, min_sep):
            continue
        if not in_single_geodesic(x, strict).holds:
            return x
    raise RuntimeError("rejection sampling did not find a generic set")


def random_rescaling(n, rng, low=0.3, high=3.0):
    """Nonzero scalars with random moduli and phases."""
    return rng.uniform(low, high, n) * np.exp(2j * np.pi * rng.uniform(size=n))


def random_pd_gram(n, rng):
    """A random Hermitian positive definite matrix (not in general a Pick Gram)."""
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a @ a.conj().T + 0.5 * n * np.eye(n)
