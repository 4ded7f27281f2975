"""Conjugations, orthogonal Gram matrices and r-orthogonality.

A conjugate-linear map ``J`` is stored as the matrix ``C`` with
``J(c) = C @ conj(c)`` on kernel-basis coordinates; column ``i`` of ``C`` is
``J k_i``.  A space is *orthogonal* when some conjugation sends each kernel to
its dual-basis partner, which happens exactly when ``g @ conj(g) = I``.  It is
*r-orthogonal* when a rescaling of it is orthogonal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGram, InvalidWitness, NotOrthogonal, ValidationError, ZeroPivot
from .gram import (
    DEFAULT_TOL,
    RescalingWitness,
    as_gram,
    check_nondegenerate,
    dual_coordinates,
    dual_gram,
    hermitian_part,
)


def apply_conjugate_linear(cmat, c):
    return np.asarray(cmat) @ np.conj(c)


def compose_conjugate_linear(a, b):
    """Matrix of the (linear) map ``c -> A(B(c))``."""
    return np.asarray(a) @ np.conj(b)


def kernel_pairing(g, cmat):
    """``P[i, j] = <k_i, J k_j>``."""
    return np.asarray(g) @ np.conj(cmat)


def kernel_evaluations(g, cmat):
    """``E[i, j] = (J k_j)(x_i) = <J k_j, k_i>``, the transpose-conjugate of the pairing."""
    return kernel_pairing(g, cmat).conj()


def conjugation_defects(g, cmat):
    """Deviations of ``J`` from being an isometric involution.

    Returns ``(isometry, involution)``.  Isometry is checked through the
    polarised form ``<Jc, Jd> = conj(<c, d>)``, which for a conjugate-linear
    map is equivalent to ``||Jc|| = ||c||``; in matrix terms
    ``C^T g conj(C) = conj(g)``.
    """
    g = np.asarray(g)
    cmat = np.asarray(cmat)
    n = len(g)
    scale = max(np.abs(g).max(), 1.0)
    iso = np.abs(cmat.T @ g @ cmat.conj() - g.conj()).max() / scale
    invol = np.abs(compose_conjugate_linear(cmat, cmat) - np.eye(n)).max()
    return float(iso), float(invol)


def is_conjugation(g, cmat, tol=DEFAULT_TOL):
    iso, invol = conjugation_defects(g, cmat)
    return iso <= tol.match_tol and invol <= tol.match_tol


def orthogonality_residual(g):
    """``max |g conj(g) - I|``; zero exactly for orthogonal Grams."""
    g = np.asarray(g)
    return float(np.abs(g @ g.conj() - np.eye(len(g))).max())


def is_orthogonal_gram(g, tol=DEFAULT_TOL):
    """Whether ``g`` is an orthogonal matrix, ``g g^t = I``.

    For a Gram the transpose is the entrywise conjugate.
    """
    return orthogonality_residual(g) <= tol.match_tol


def kernel_to_dual_map(g):
    """The conjugate-linear map sending each ``k_i`` to ``k_i^#``."""
    return dual_coordinates(np.asarray(g))


def conjugation_from_orthogonal(g, tol=DEFAULT_TOL):
    """The conjugation of an orthogonal space, ``J k_i = k_i^#``.

    Raises :class:`NotOrthogonal` unless ``g`` is an orthogonal matrix.
    """
    g = as_gram(g, tol)
    if not is_orthogonal_gram(g, tol):
        raise NotOrthogonal(f"Gram is not orthogonal (residual {orthogonality_residual(g):.3g})")
    return kernel_to_dual_map(g)


class Verdict(str, enum.Enum):
    ORTHOGONAL = "orthogonal"
    R_ORTHOGONAL = "r_orthogonal"
    NOT_R_ORTHOGONAL = "not_r_orthogonal"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class OrthogonalityReport:
    verdict: Verdict
    witness: RescalingWitness | None = None
    residual: float = float("nan")
    ratio: float = float("nan")

    @property
    def r_orthogonal(self):
        return self.verdict in (Verdict.ORTHOGONAL, Verdict.R_ORTHOGONAL)


def r_orthogonality_witness(g, tol=DEFAULT_TOL):
    """Decide whether ``g`` is a rescaling of an orthogonal Gram.

    With ``D = diag(lambda)``, ``D^-1 g conj(D)^-1`` is orthogonal iff
    ``inv(g)[i, j] / conj(g[i, j]) = alpha_i conj(alpha_j)`` with
    ``alpha = conj(lambda)^-2``.  So the ratio matrix must be a rank one
    positive semidefinite matrix; ``alpha`` is read from its top eigenpair.

    ``ratio`` in the report is ``|second eigenvalue| / top eigenvalue`` of the
    ratio matrix.
    """
    g = as_gram(g, tol)
    try:
        check_nondegenerate(g, tol)
    except DegenerateGram:
        return OrthogonalityReport(Verdict.DEGENERATE)
    if is_orthogonal_gram(g, tol):
        return OrthogonalityReport(
            Verdict.ORTHOGONAL,
            RescalingWitness(np.ones(len(g), dtype=complex)),
            residual=orthogonality_residual(g),
            ratio=0.0,
        )
    ratio_mat = hermitian_part(np.linalg.inv(g) / g.conj())
    w, v = np.linalg.eigh(ratio_mat)
    order = np.argsort(-np.abs(w))
    w, v = w[order], v[:, order]
    ratio = float(abs(w[1]) / abs(w[0])) if len(w) > 1 else 0.0
    if w[0] <= 0 or ratio > tol.rankone_tol:
        return OrthogonalityReport(Verdict.NOT_R_ORTHOGONAL, ratio=ratio)
    alpha = v[:, 0] * np.sqrt(w[0])
    lam = np.sqrt(1.0 / alpha.conj())
    witness = RescalingWitness(lam)
    residual = orthogonality_residual(witness.unapply(g))
    if residual > tol.match_tol:
        return OrthogonalityReport(Verdict.NOT_R_ORTHOGONAL, residual=residual, ratio=ratio)
    return OrthogonalityReport(
        Verdict.R_ORTHOGONAL, RescalingWitness(lam, residual), residual=residual, ratio=ratio)


def rescale_to_orthogonal(g, witness, tol=DEFAULT_TOL):
    """``g[i, j] / (lambda_i conj(lambda_j))``, checked to be orthogonal."""
    lam = getattr(witness, "lambdas", witness)
    out = np.asarray(g) / np.outer(lam, np.conj(lam))
    residual = orthogonality_residual(out)
    if residual > tol.match_tol:
        raise InvalidWitness(f"rescaled Gram is not orthogonal (residual {residual:.3g})")
    return hermitian_part(out)


def dual_gram_of_subspace(g_dual, drop, tol=DEFAULT_TOL):
    """Dual Gram of the regular subspace without kernel ``drop``.

    Projecting ``k_drop^#`` out of the other dual vectors gives
    ``g_ij = k#_ij - k#_i,drop k#_drop,j / k#_drop,drop`` on the retained
    indices.
    """
    kd = np.asarray(g_dual, dtype=complex)
    n = len(kd)
    if not 0 <= drop < n:
        raise ValidationError(f"drop index {drop} out of range for n = {n}")
    pivot = kd[drop, drop].real
    if pivot <= tol.psd_tol * np.abs(kd.diagonal()).max():
        raise ZeroPivot(f"dual Gram pivot {pivot:.3g} at index {drop}")
    keep = np.delete(np.arange(n), drop)
    out = kd[np.ix_(keep, keep)] - np.outer(kd[keep, drop], kd[drop, keep]) / pivot
    return hermitian_part(out)


def orthogonality_hereditary_check(g, tol=DEFAULT_TOL):
    """Check that deleting any one kernel from an orthogonal space leaves an r-orthogonal one.

    For every deletion this verifies the identity
    ``sum_s g[i, s] g_sub#[s, j] = delta_ij`` on the retained indices, with the
    dual Gram of the subspace from :func:`dual_gram_of_subspace`, and that the
    retained Gram is orthogonal or passes :func:`r_orthogonality_witness`.
    """
    g = as_gram(g, tol)
    if not is_orthogonal_gram(g, tol):
        raise NotOrthogonal(f"Gram is not orthogonal (residual {orthogonality_residual(g):.3g})")
    n = len(g)
    if n < 2:
        raise ValidationError("hereditary check needs n >= 2")
    kd = dual_gram(g, tol)
    for drop in range(n):
        keep = np.delete(np.arange(n), drop)
        sub = g[np.ix_(keep, keep)]
        sub_dual = dual_gram_of_subspace(kd, drop, tol)
        if np.abs(sub @ sub_dual - np.eye(n - 1)).max() > tol.match_tol:
            return False
        if not (is_orthogonal_gram(sub, tol) or r_orthogonality_witness(sub, tol).r_orthogonal):
            return False
    return True

