"""Multipliers of a finite RKHS and the extremal vanishing problem.

A multiplier is a list of values ``v[i] = m(x_i)``.  Its norm is the norm of
multiplication by ``m``; the adjoint acts diagonally on kernels,
``M^* k_i = conj(v_i) k_i``, so ``||M|| <= t`` exactly when
``t^2 g - D^* g D`` is positive semidefinite with ``D = diag(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import IndexOverlap, NumericalError, ValidationError
from .gram import DEFAULT_TOL, as_gram, check_nondegenerate, delta_pair


def multiplier_norm(g, values, tol=DEFAULT_TOL):
    """Operator norm of multiplication by ``values`` on the space with Gram ``g``.

    The square root of the top generalized eigenvalue of ``(D^* g D, g)``.
    """
    g = as_gram(g, tol)
    v = np.asarray(values, dtype=complex)
    if v.shape != (len(g),):
        raise ValidationError(f"expected {len(g)} multiplier values, got shape {v.shape}")
    a = v.conj()[:, None] * g * v[None, :]
    top = scipy.linalg.eigh(a, g, eigvals_only=True, subset_by_index=[len(g) - 1, len(g) - 1])[0]
    return float(np.sqrt(max(top, 0.0)))


def multiplier_matrix_norm(g, values):
    """Norm of the adjoint multiplication operator in orthonormal coordinates.

    Independent of :func:`multiplier_norm`: kernels become the rows of a
    Cholesky factor and ``M^*`` is assembled explicitly.
    """
    g = np.asarray(g, dtype=complex)
    v = np.asarray(values, dtype=complex)
    kernels = np.linalg.cholesky(g).T  # column i is k_i
    adjoint = kernels @ np.diag(v.conj()) @ np.linalg.inv(kernels)
    return float(np.linalg.norm(adjoint, 2))


@dataclass(frozen=True)
class ExtremalSolution:
    """Solution of the extremal problem on the regular subspace ``indices``.

    ``multiplier`` holds the values on ``indices`` (``value`` at the base,
    zero elsewhere) and ``h`` the kernel-basis coordinates of the unit vector
    ``k_x^# / ||k_x^#||`` of that subspace.
    """

    value: float
    base: int
    indices: np.ndarray
    multiplier: np.ndarray
    h: np.ndarray
    residual: float


def _restricted(g, x, ys):
    n = len(g)
    ys = sorted({int(y) for y in ys})
    if not 0 <= x < n or any(not 0 <= y < n for y in ys):
        raise ValidationError(f"indices out of range for n = {n}")
    if x in ys:
        raise IndexOverlap(f"base index {x} also appears in the vanishing set")
    idx = np.array(sorted(ys + [x]))
    sub = g[np.ix_(idx, idx)]
    return idx, sub, int(np.searchsorted(idx, x))


def extremal_vanishing_multiplier(g, x, ys, tol=DEFAULT_TOL):
    """Largest ``Re m(x)`` over norm-one multipliers vanishing on ``ys``.

    Solved on the regular subspace spanned by the kernels at ``ys`` and ``x``
    (a norm-preserving extension to the whole space exists for complete Pick
    spaces, so the value is the same).  The value is
    ``(g_xx * inv(g_sub)_xx) ** -1/2``.  Before returning, checks that
    ``m k_x / ||k_x|| = h`` as functions on the subspace's points and that the
    multiplier has norm one.
    """
    g = as_gram(g, tol)
    idx, sub, pos = _restricted(g, x, ys)
    sub = as_gram(sub, tol)
    sub_dual = np.linalg.inv(sub)
    dxx = sub_dual[pos, pos].real
    value = float((sub[pos, pos].real * dxx) ** -0.5)

    mult = np.zeros(len(idx), dtype=complex)
    mult[pos] = value
    h = sub_dual[:, pos].conj() / np.sqrt(dxx)
    # compare as functions on the points: f(x_s) = <f, k_s>
    lhs = mult * sub[pos, :] / np.sqrt(sub[pos, pos].real)
    rhs = h @ sub
    residual = float(np.abs(lhs - rhs).max())
    norm_defect = abs(multiplier_norm(sub, mult, tol) - 1.0)
    if residual > tol.match_tol or norm_defect > tol.match_tol:
        raise NumericalError(
            f"extremal identity check failed (residual {residual:.3g}, norm defect {norm_defect:.3g})")
    return ExtremalSolution(value, int(x), idx, mult, h, residual)


def extremal_value_bisection_oracle(g, x, ys, tol=DEFAULT_TOL, width=1e-10):
    """Bisect on ``v`` for the largest feasible multiplier ``(v at x, 0 on ys)``.

    Feasibility is ``multiplier_norm <= 1`` on the restricted Gram.
    """
    g = as_gram(g, tol)
    idx, sub, pos = _restricted(g, x, ys)
    sub = as_gram(sub, tol)
    e = np.zeros(len(idx))
    e[pos] = 1.0
    lo, hi = 0.0, 1.0
    if multiplier_norm(sub, e, tol) <= 1.0:
        return 1.0
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if multiplier_norm(sub, mid * e, tol) <= 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gleason_delta(g, i, j, tol=DEFAULT_TOL):
    """``max Re m(x_i)`` over norm-one multipliers with ``m(x_j) = 0``."""
    if i == j:
        raise IndexOverlap("gleason_delta needs distinct indices")
    g = as_gram(g, tol)
    check_nondegenerate(g[np.ix_([i, j], [i, j])], tol)
    return extremal_vanishing_multiplier(g, i, [j], tol).value


def idempotent_norm(g, i, tol=DEFAULT_TOL):
    """Norm of the multiplier equal to 1 at ``x_i`` and 0 elsewhere."""
    g = as_gram(g, tol)
    values = np.zeros(len(g))
    values[i] = 1.0
    return multiplier_norm(g, values, tol)


def delta_product(g, x):
    """``prod_{j != x} delta(x, j)``."""
    return float(np.prod([delta_pair(g, x, j) for j in range(len(g)) if j != x]))


def complement(n, x):
    return [j for j in range(n) if j != x]
