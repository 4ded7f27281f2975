"""Drury-Arveson and model-space Grams, Blaschke products, Pick membership.

The Drury-Arveson kernel at ``z`` in the ball is ``k_z(w) = 1 / (1 - <w, z>)``,
so the Gram of a point set ``x`` is ``g[i, j] = 1 / (1 - <x_j, x_i>)``.  For
points of the disk these are also the kernels of the model space ``K_B`` of the
Blaschke product ``B`` with zeros ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DuplicatePoints, NotCompletePick, SingularGram, ValidationError
from .gram import (
    DEFAULT_TOL,
    RescalingWitness,
    as_gram,
    check_nondegenerate,
    dual_coordinates,
    rescale,
)
from .hyperbolic import as_points, pseudohyperbolic_matrix


def da_gram(x, tol=DEFAULT_TOL):
    """Drury-Arveson Gram matrix of a point set of shape ``(n, m)``.

    >>> da_gram([0, 0.5]).real
    array([[1.        , 1.        ],
           [1.        , 1.33333333]])
    """
    x = as_points(x, tol)
    if len(x) > 1:
        d = pseudohyperbolic_matrix(x)
        d[np.diag_indices_from(d)] = 1.0
        if d.min() <= 1e-12:
            i, j = np.argwhere(d <= 1e-12)[0]
            raise DuplicatePoints(f"points {min(i, j)} and {max(i, j)} coincide")
    g = 1.0 / (1.0 - x.conj() @ x.T)
    try:
        return as_gram(g, tol)
    except SingularGram as exc:
        raise DuplicatePoints(f"points are too close to separate numerically: {exc}") from exc


def as_zeros(zeros, tol=DEFAULT_TOL):
    """Validate zeros of a Blaschke product: distinct points of the open disk."""
    z = np.atleast_1d(np.array(zeros, dtype=complex))
    if z.ndim != 1 or z.size == 0:
        raise ValidationError("Blaschke zeros must be a nonempty list of complex numbers")
    return as_points(z, tol)[:, 0]


def model_gram(zeros, tol=DEFAULT_TOL):
    """Gram of the model space ``K_B``; the same as ``da_gram`` of the zeros."""
    return da_gram(as_zeros(zeros, tol)[:, None], tol)


def blaschke_factor(x, z):
    """The factor vanishing at ``x``: ``(|x|/x) (x - z) / (1 - conj(x) z)``, or ``z`` if ``x = 0``."""
    z = np.asarray(z, dtype=complex)
    if x == 0:
        return z
    return (abs(x) / x) * (x - z) / (1 - np.conj(x) * z)


def blaschke_eval(zeros, z):
    zeros = np.atleast_1d(np.asarray(zeros, dtype=complex))
    out = np.ones_like(np.asarray(z, dtype=complex))
    for x in zeros:
        out = out * blaschke_factor(x, z)
    return out


def blaschke_derivative_at_zero(zeros, i):
    """``B'(x_i)``: derivative of the vanishing factor times the other factors at ``x_i``."""
    zeros = np.atleast_1d(np.asarray(zeros, dtype=complex))
    x = zeros[i]
    if x == 0:
        d = 1.0 + 0j
    else:
        d = -(abs(x) / x) / (1 - abs(x) ** 2)
    others = np.delete(zeros, i)
    return complex(d * blaschke_eval(others, x))


def conjugate_zeros(zeros):
    return np.conj(np.atleast_1d(np.asarray(zeros, dtype=complex)))


def model_conjugation_matrix(zeros, tol=DEFAULT_TOL):
    """Coordinates of the conjugation ``J_B f = B conj(z f)`` of ``K_B``.

    ``J_B`` is conjugate-linear, ``J(c) = C @ conj(c)`` in kernel coordinates,
    and column ``i`` of ``C`` holds ``J k_i``.  The function ``J k_i`` vanishes
    at every zero other than ``x_i`` and takes the value ``B'(x_i)`` there, so
    ``J k_i = B'(x_i) k_i^#``.
    """
    zeros = as_zeros(zeros, tol)
    g = model_gram(zeros, tol)
    dprime = np.array([blaschke_derivative_at_zero(zeros, i) for i in range(len(zeros))])
    return dual_coordinates(g) * dprime[None, :]


def normalized_pick_matrix(g, base=0):
    """``F[i, j] = 1 - g[i, b] g[b, j] / (g[i, j] g[b, b])`` for base index ``b``."""
    g = np.asarray(g, dtype=complex)
    f = 1.0 - np.outer(g[:, base], g[base, :]) / (g * g[base, base])
    return 0.5 * (f + f.conj().T)


def is_complete_pick(g, tol=DEFAULT_TOL):
    """Whether ``g`` is a rescaled Drury-Arveson Gram (a complete Pick space).

    Uses the normalized-kernel test at base index 0: ``F`` must be positive
    semidefinite.  Grams with a zero entry raise
    :class:`~pickspace.errors.DegenerateGram`; no such space has a complete
    Pick kernel.
    """
    g = as_gram(g, tol)
    check_nondegenerate(g, tol)
    eig = np.linalg.eigvalsh(normalized_pick_matrix(g))
    return bool(eig[0] >= -tol.psd_tol * max(1.0, eig[-1]))


@dataclass(frozen=True)
class PickRealization:
    """Points ``x`` with ``g = witness.apply(da_gram(x))``."""

    points: np.ndarray
    witness: RescalingWitness


def realize_in_ball(g, tol=DEFAULT_TOL):
    """Find points in a ball whose Drury-Arveson Gram is a rescaling of ``g``.

    Factorises the normalized Pick matrix as ``F[i, j] = <b_j, b_i>`` with an
    eigendecomposition; the ambient dimension is the numerical rank of ``F``
    (at least 1).  The first point is the origin.
    """
    g = as_gram(g, tol)
    if not is_complete_pick(g, tol):
        raise NotCompletePick("normalized Pick matrix is not positive semidefinite")
    f = normalized_pick_matrix(g)
    w, v = np.linalg.eigh(f)
    keep = w > tol.psd_tol * max(w[-1], 1.0)
    if not np.any(keep):
        keep[-1] = True
    points = v[:, keep].conj() * np.sqrt(np.clip(w[keep], 0.0, None))
    points = points[:, ::-1]
    norms = np.linalg.norm(points, axis=1)
    if np.any(norms >= 1 - tol.boundary_tol):
        raise NotCompletePick("realized points fall outside the ball")
    lam = g[:, 0] / np.sqrt(g[0, 0].real)
    target = rescale(1.0 / (1.0 - points.conj() @ points.T), lam)
    residual = float(np.abs(target - g).max() / np.abs(g).max())
    if residual > tol.match_tol:
        raise NotCompletePick(f"realization does not reproduce the Gram (residual {residual:.3g})")
    return PickRealization(points, RescalingWitness(lam, residual))
