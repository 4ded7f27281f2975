"""The unit ball of C^m as complex hyperbolic space.

Point sets are complex arrays of shape ``(n, m)``.  Automorphisms are built
from the involutive Moebius map

    phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>)

with ``s_a = sqrt(1 - |a|^2)``, ``P_a`` the projection onto ``span{a}`` and
``Q_a = I - P_a``, followed by a unitary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import BoundaryPoint, DimensionMismatch, SizeMismatch, ValidationError
from .gram import DEFAULT_TOL, are_rescalings


def as_point(z, tol=DEFAULT_TOL):
    z = np.atleast_1d(np.array(z, dtype=complex))
    if z.ndim != 1:
        raise ValidationError(f"a ball point must be a vector, got shape {z.shape}")
    if np.linalg.norm(z) >= 1 - tol.boundary_tol:
        raise BoundaryPoint(f"point with norm {np.linalg.norm(z):.15g} is not inside the ball")
    return z


def as_points(x, tol=DEFAULT_TOL):
    """Validate a point set, returning a complex array of shape ``(n, m)``.

    A 1-D input is read as ``n`` points of the disk.
    """
    x = np.array(x, dtype=complex)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2 or x.shape[0] == 0 or x.shape[1] == 0:
        raise ValidationError(f"point set must have shape (n, m), got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValidationError("point set has non-finite coordinates")
    norms = np.linalg.norm(x, axis=1)
    if np.any(norms >= 1 - tol.boundary_tol):
        k = int(np.argmax(norms))
        raise BoundaryPoint(f"point {k} has norm {norms[k]:.15g}, not inside the ball")
    return x


def embed(x, m):
    """Pad points with zero coordinates up to ambient dimension ``m``."""
    x = np.asarray(x, dtype=complex)
    if x.shape[1] > m:
        raise DimensionMismatch(f"cannot embed dimension {x.shape[1]} points in dimension {m}")
    return np.hstack([x, np.zeros((x.shape[0], m - x.shape[1]), dtype=complex)])


def mobius(a, z):
    """Apply ``phi_a`` to a point or to each row of a point array."""
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    if z.shape[-1] != a.shape[0]:
        raise DimensionMismatch(f"point of dimension {z.shape[-1]} vs center of dimension {a.shape[0]}")
    aa = np.vdot(a, a).real
    za = z @ a.conj()
    if aa == 0.0:
        return -z
    s = np.sqrt(1.0 - aa)
    pz = np.multiply.outer(za / aa, a)
    qz = z - pz
    return (a - pz - s * qz) / (1.0 - za)[..., None]


@dataclass(frozen=True)
class BallAutomorphism:
    """``z -> unitary @ phi_center(z)``."""

    center: np.ndarray
    unitary: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.unitary is None:
            object.__setattr__(self, "unitary", np.eye(len(self.center), dtype=complex))

    @property
    def dim(self):
        return len(self.center)

    def __call__(self, z):
        return mobius(self.center, z) @ self.unitary.T


def automorphism_to_origin(a, tol=DEFAULT_TOL):
    """The involution ``phi_a`` exchanging ``a`` and the origin.

    For ``a = 0`` the Moebius part is ``z -> -z`` and the unitary ``-I`` is
    attached, so the result is the identity.
    """
    a = as_point(a, tol)
    if not np.any(a):
        return BallAutomorphism(a, -np.eye(len(a), dtype=complex))
    return BallAutomorphism(a)


def pseudohyperbolic(z, w):
    """``Delta(z, w) = |phi_z(w)|``; in the disk ``|(z - w) / (1 - conj(z) w)|``."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    if z.shape != w.shape:
        raise DimensionMismatch(f"points of dimension {z.shape} and {w.shape}")
    return float(min(np.linalg.norm(mobius(z, w)), 1.0))


def pseudohyperbolic_matrix(x):
    x = np.asarray(x, dtype=complex)
    n = len(x)
    out = np.zeros((n, n))
    for i, j in combinations(range(n), 2):
        out[i, j] = out[j, i] = pseudohyperbolic(x[i], x[j])
    return out


@dataclass(frozen=True)
class GeodesicResult:
    """Outcome of a complex-geodesic test; truthiness is the verdict.

    ``direction`` is a unit vector spanning the geodesic through the origin
    after the first point is moved to 0 (``None`` if the test failed).
    ``ratio`` is ``sigma_2 / sigma_1`` of the translated points.
    """

    holds: bool
    direction: np.ndarray | None
    ratio: float

    def __bool__(self):
        return bool(self.holds)


def in_single_geodesic(x, tol=DEFAULT_TOL):
    """Test whether a point set lies in one complex geodesic."""
    x = as_points(x, tol)
    n, m = x.shape
    images = mobius(x[0], x[1:]) if n > 1 else np.zeros((0, m), dtype=complex)
    if len(images) == 0:
        e = np.zeros(m, dtype=complex)
        e[0] = 1.0
        return GeodesicResult(True, e, 0.0)
    s = np.linalg.svd(images, compute_uv=False)
    s1 = max(s[0], 1e-30)
    ratio = float(s[1] / s1) if len(s) > 1 else 0.0
    holds = ratio <= tol.rankone_tol
    if not holds:
        return GeodesicResult(False, None, ratio)
    if s[0] < 1e-30:
        direction = np.zeros(m, dtype=complex)
        direction[0] = 1.0
    else:
        direction = np.linalg.svd(images)[2][0]
        k = int(np.argmax(np.abs(direction)))
        direction = direction * np.exp(-1j * np.angle(direction[k]))
    return GeodesicResult(True, direction, ratio)


def triples_in_geodesics(x, tol=DEFAULT_TOL):
    """Whether every triple ``{x_0, x_i, x_j}`` lies in a complex geodesic."""
    x = as_points(x, tol)
    if len(x) < 3:
        raise ValidationError("triples_in_geodesics needs at least three points")
    return all(
        in_single_geodesic(x[[0, i, j]], tol).holds
        for i, j in combinations(range(1, len(x)), 2)
    )


def geodesic_coordinates(x, tol=DEFAULT_TOL):
    """Disk coordinates of a point set lying in one complex geodesic.

    Moves ``x_0`` to the origin, then reads each image along the geodesic
    direction.  Returns ``None`` if the set is not in a single geodesic.
    """
    x = as_points(x, tol)
    result = in_single_geodesic(x, tol)
    if not result:
        return None
    images = mobius(x[0], x)
    return images @ result.direction.conj()


def congruent_sets(x, y, tol=DEFAULT_TOL):
    """Whether some ball automorphism carries ``x`` onto ``y`` (as sets).

    Decided through the Drury-Arveson Grams: the sets are congruent exactly
    when, for some matching of the points, the Grams are rescalings of each
    other.  Matchings are searched by backtracking and pruned with pairwise
    pseudohyperbolic distances.
    """
    from .pick import da_gram

    x = as_points(x, tol)
    y = as_points(y, tol)
    if len(x) != len(y):
        raise SizeMismatch(f"point sets of sizes {len(x)} and {len(y)}")
    m = max(x.shape[1], y.shape[1])
    x, y = embed(x, m), embed(y, m)
    n = len(x)
    dx, dy = pseudohyperbolic_matrix(x), pseudohyperbolic_matrix(y)
    # pruning only; the final decision is the Gram rescaling test
    prune = 1e-6
    iu = np.triu_indices(n, 1)
    if np.abs(np.sort(dx[iu]) - np.sort(dy[iu])).max(initial=0.0) > prune:
        return False
    rows_x = np.sort(dx, axis=1)
    rows_y = np.sort(dy, axis=1)
    allowed = np.abs(rows_x[:, None, :] - rows_y[None, :, :]).max(axis=2) <= prune

    gx = da_gram(x, tol)
    gy = da_gram(y, tol)
    perm = []
    used = np.zeros(n, dtype=bool)

    def extend(i):
        if i == n:
            p = np.array(perm)
            return are_rescalings(gx, gy[np.ix_(p, p)], tol) is not None
        for j in range(n):
            if used[j] or not allowed[i, j]:
                continue
            if any(abs(dx[i, k] - dy[j, perm[k]]) > prune for k in range(i)):
                continue
            used[j] = True
            perm.append(j)
            if extend(i + 1):
                return True
            perm.pop()
            used[j] = False
        return False

    return extend(0)
