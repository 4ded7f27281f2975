"""Gram matrices of finite dimensional RKHS.

A space with kernels ``k_1, ..., k_n`` is represented by its Gram matrix
``g[i, j] = <k_i, k_j>``, a Hermitian positive definite complex array.  The
inner product is linear in the first slot.  Indices are 0-based throughout.

Vectors of the space are stored by their coordinates ``c`` in the kernel basis,
``h = sum_i c[i] k_i``; see :func:`gram_inner`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGram, SingularGram, SizeMismatch, ValidationError


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds, each relative to the scale of what it tests.

    psd_tol
        Eigenvalues below ``psd_tol * largest`` count as zero.
    rankone_tol
        A matrix is rank one when ``sigma_2 <= rankone_tol * sigma_1``.
    match_tol
        Equality tolerance for identities and witness residuals.
    boundary_tol
        Points with norm ``>= 1 - boundary_tol`` are rejected.
    """

    psd_tol: float = 1e-9
    rankone_tol: float = 1e-8
    match_tol: float = 1e-8
    boundary_tol: float = 1e-12

    def __post_init__(self):
        for name in ("psd_tol", "rankone_tol", "match_tol", "boundary_tol"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise ValidationError(f"{name} must be a nonnegative number, got {value!r}")

    @classmethod
    def uniform(cls, value):
        """Set psd, rank-one and match tolerances to the same value."""
        return cls(psd_tol=value, rankone_tol=value, match_tol=value)


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class RescalingWitness:
    """Scalars ``lambdas`` with ``g[i, j] = lambdas[i] * conj(lambdas[j]) * h[i, j]``."""

    lambdas: np.ndarray
    residual: float = 0.0

    def apply(self, h):
        """Rescale ``h`` by the witness, returning the matrix it should match."""
        lam = self.lambdas
        return np.outer(lam, lam.conj()) * np.asarray(h)

    def unapply(self, g):
        lam = self.lambdas
        return np.asarray(g) / np.outer(lam, lam.conj())


def as_gram(a, tol=DEFAULT_TOL):
    """Validate ``a`` as a Gram matrix and return it as an exactly Hermitian array.

    Raises :class:`ValidationError` for non-square or non-Hermitian input and
    :class:`SingularGram` when the smallest eigenvalue is not above
    ``psd_tol`` times the largest.
    """
    g = np.array(a, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] == 0:
        raise ValidationError(f"Gram matrix must be square and nonempty, got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ValidationError("Gram matrix has non-finite entries")
    scale = np.abs(g).max()
    if np.abs(g - g.conj().T).max() > max(tol.match_tol, 1e-12) * max(scale, 1.0):
        raise ValidationError("Gram matrix is not Hermitian")
    g = 0.5 * (g + g.conj().T)
    if np.any(g.diagonal().real <= 0):
        raise ValidationError("Gram matrix diagonal must be strictly positive")
    eig = np.linalg.eigvalsh(g)
    if eig[0] <= tol.psd_tol * eig[-1]:
        raise SingularGram(
            f"Gram matrix is not positive definite (eigenvalues {eig[0]:.3g} .. {eig[-1]:.3g})")
    return g


def hermitian_part(a):
    return 0.5 * (a + a.conj().T)


def gram_inner(g, c, d):
    """Inner product of the vectors with kernel-basis coordinates ``c`` and ``d``."""
    return np.asarray(c) @ np.asarray(g) @ np.conj(d)


def gram_norm(g, c):
    return float(np.sqrt(max(gram_inner(g, c, c).real, 0.0)))


def dual_coordinates(g):
    """Columns are the kernel-basis coordinates of the dual basis vectors."""
    return np.linalg.inv(g).conj()


def dual_gram(g, tol=DEFAULT_TOL):
    """Gram matrix of the dual basis ``{k_i^#}``, which is ``inv(g)``.

    >>> dual_gram([[1, 1], [1, 4 / 3]]).real.round(12)
    array([[ 4., -3.],
           [-3.,  3.]])
    """
    g = as_gram(g, tol)
    return hermitian_part(np.linalg.inv(g))


def delta_pair(g, i, j):
    """The metric ``delta(i, j) = sqrt(1 - |g_ij|^2 / (g_ii g_jj))``."""
    g = np.asarray(g)
    _check_index(g, i)
    _check_index(g, j)
    if i == j:
        return 0.0
    ratio = abs(g[i, j]) ** 2 / (g[i, i].real * g[j, j].real)
    return float(np.sqrt(max(1.0 - ratio, 0.0)))


def delta_matrix(g):
    g = np.asarray(g)
    d = np.sqrt(g.diagonal().real)
    cos2 = np.abs(g / np.outer(d, d)) ** 2
    out = np.sqrt(np.clip(1.0 - cos2, 0.0, None))
    np.fill_diagonal(out, 0.0)
    return out


def delta_via_projections(g, i, j, tol=DEFAULT_TOL):
    """``||P_i - P_j||`` for the orthogonal projections onto ``k_i`` and ``k_j``.

    Kernels are realised as the rows of the Cholesky factor of ``g``, so this
    shares nothing with :func:`delta_pair` beyond the input.
    """
    g = as_gram(g, tol)
    _check_index(g, i)
    _check_index(g, j)
    if i == j:
        return 0.0
    vecs = np.linalg.cholesky(g)

    def proj(v):
        v = v[:, None]
        return (v @ v.conj().T) / (v.conj().T @ v).real

    return float(np.linalg.norm(proj(vecs[i]) - proj(vecs[j]), 2))


def check_nondegenerate(g, tol=DEFAULT_TOL):
    """Raise :class:`DegenerateGram` if any entry of ``g`` is (numerically) zero.

    An entry counts as zero when ``|g_ij| <= match_tol * sqrt(g_ii g_jj)``.
    """
    g = np.asarray(g)
    d = np.sqrt(np.abs(g.diagonal()))
    small = np.abs(g) <= tol.match_tol * np.outer(d, d)
    if np.any(small):
        i, j = np.argwhere(small)[0]
        raise DegenerateGram(f"Gram entry ({i}, {j}) vanishes; kernels {i} and {j} are orthogonal")


def are_rescalings(g, h, tol=DEFAULT_TOL):
    """Return a :class:`RescalingWitness` if ``g ~ h``, else ``None``.

    The entrywise ratio ``g / h`` must be rank one, of the form
    ``lambda_i conj(lambda_j)``.  The witness is phase-normalised so that
    ``lambdas[0]`` is real positive.
    """
    g = np.asarray(g, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if g.shape != h.shape:
        raise SizeMismatch(f"cannot compare Grams of shapes {g.shape} and {h.shape}")
    check_nondegenerate(g, tol)
    check_nondegenerate(h, tol)
    ratio = g / h
    u, s, vh = np.linalg.svd(ratio)
    if len(s) > 1 and s[1] > tol.rankone_tol * s[0]:
        return None
    lam = np.sqrt(s[0]) * u[:, 0]
    lam = lam * np.exp(-1j * np.angle(lam[0]))
    residual = np.abs(g - np.outer(lam, lam.conj()) * h).max() / np.abs(g).max()
    if residual > tol.match_tol:
        return None
    return RescalingWitness(lambdas=lam, residual=float(residual))


def rescale(g, lambdas):
    """The Gram ``lambda_i conj(lambda_j) g_ij`` of the kernels ``lambda_i k_i``."""
    lam = np.asarray(lambdas, dtype=complex)
    return np.outer(lam, lam.conj()) * np.asarray(g)


def regular_subspace(g, idx):
    """Principal submatrix of ``g`` on the strictly increasing indices ``idx``."""
    g = np.asarray(g)
    idx = np.asarray(idx, dtype=int)
    if idx.ndim != 1 or idx.size == 0:
        raise ValidationError("index subset must be a nonempty sequence")
    if np.any(np.diff(idx) <= 0):
        raise ValidationError("index subset must be strictly increasing")
    for i in (idx[0], idx[-1]):
        _check_index(g, i)
    return g[np.ix_(idx, idx)]


def _check_index(g, i):
    n = g.shape[0]
    if not 0 <= int(i) < n:
        raise ValidationError(f"index {i} out of range for a {n}x{n} Gram")
