import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pickspace.conjugation import (
    Verdict,
    conjugation_defects,
    conjugation_from_orthogonal,
    dual_gram_of_subspace,
    is_conjugation,
    is_orthogonal_gram,
    kernel_pairing,
    kernel_to_dual_map,
    orthogonality_hereditary_check,
    r_orthogonality_witness,
    rescale_to_orthogonal,
)
from pickspace.errors import InvalidWitness, NotOrthogonal
from pickspace.gram import RescalingWitness, dual_gram, regular_subspace, rescale
from pickspace.pick import blaschke_derivative_at_zero, da_gram, model_conjugation_matrix, model_gram
from pickspace.sampling import random_disk_points, random_geodesic_set, random_pd_gram, random_rescaling

from conftest import random_cnp_gram, opposite_axes_points


def _orthogonalized(g):
    return rescale_to_orthogonal(g, r_orthogonality_witness(g).witness)


def test_identity_is_orthogonal():
    assert is_orthogonal_gram(np.eye(4))


def test_two_point_gram_not_orthogonal():
    assert not is_orthogonal_gram([[1, 1], [1, 4 / 3]])


def test_two_point_model_ratio_matrix():
    g = model_gram([0, 0.5])
    ratio = np.linalg.inv(g) / g.conj()
    np.testing.assert_allclose(ratio, [[4, -3], [-3, 9 / 4]], atol=1e-12)
    alpha = np.array([2, -1.5])
    np.testing.assert_allclose(ratio, np.outer(alpha, alpha), atol=1e-12)
    rep = r_orthogonality_witness(g)
    assert rep.verdict is Verdict.R_ORTHOGONAL
    k = rescale_to_orthogonal(g, rep.witness)
    assert is_orthogonal_gram(k)
    assert k.shape == (2, 2)


def test_opposite_axes_not_r_orthogonal():
    rep = r_orthogonality_witness(da_gram(opposite_axes_points()))
    assert rep.verdict is Verdict.NOT_R_ORTHOGONAL
    assert rep.witness is None and not rep.r_orthogonal


def test_zero_entry_is_degenerate():
    g = np.array([[2, 0, 1], [0, 2, 1], [1, 1, 2]], dtype=complex)
    assert r_orthogonality_witness(g).verdict is Verdict.DEGENERATE
    assert r_orthogonality_witness(np.eye(3)).verdict is Verdict.DEGENERATE


def test_orthogonal_verdict_with_unit_witness():
    k = _orthogonalized(model_gram([0.1, 0.5j, -0.4]))
    rep = r_orthogonality_witness(k)
    assert rep.verdict is Verdict.ORTHOGONAL
    np.testing.assert_array_equal(rep.witness.lambdas, 1)
    np.testing.assert_allclose(rescale_to_orthogonal(k, rep.witness), k)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 7))
def test_geodesic_grams_rescale_to_orthogonal(seed, n):
    rng = np.random.default_rng(seed)
    g = random_cnp_gram(rng, n, geodesic=True)
    rep = r_orthogonality_witness(g)
    assert rep.r_orthogonal
    assert np.abs(_orthogonalized(g) @ _orthogonalized(g).conj() - np.eye(n)).max() <= 1e-8


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 6), geodesic=st.booleans())
def test_verdict_rescaling_invariant(seed, n, geodesic):
    rng = np.random.default_rng(seed)
    g = random_cnp_gram(rng, n, m=2, geodesic=geodesic)
    h = rescale(g, random_rescaling(n, rng))
    assert r_orthogonality_witness(g).verdict is r_orthogonality_witness(h).verdict


def test_bad_witness_rejected():
    with pytest.raises(InvalidWitness):
        rescale_to_orthogonal(model_gram([0, 0.5]), RescalingWitness(np.ones(2)))


def test_conjugation_of_identity():
    np.testing.assert_array_equal(conjugation_from_orthogonal(np.eye(3)), np.eye(3))


def test_conjugation_from_rescaled_two_point_model(rng):
    k = _orthogonalized(model_gram([0, 0.5]))
    c = conjugation_from_orthogonal(k)
    iso, invol = conjugation_defects(k, c)
    assert iso <= 1e-10 and invol <= 1e-10
    # isometry on random vectors, norms under k
    for _ in range(10):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        jv = c @ v.conj()
        assert (jv @ k @ jv.conj()).real == pytest.approx((v @ k @ v.conj()).real, rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 7))
def test_conjugation_pairs_kernels_with_dual(seed, n):
    k = _orthogonalized(random_cnp_gram(np.random.default_rng(seed), n, geodesic=True))
    c = conjugation_from_orthogonal(k)
    np.testing.assert_allclose(kernel_pairing(k, c), np.eye(n), atol=1e-8)
    assert is_conjugation(k, c)


def test_not_orthogonal_raises():
    with pytest.raises(NotOrthogonal):
        conjugation_from_orthogonal(model_gram([0, 0.5]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), geodesic=st.booleans())
def test_orthogonal_iff_kernel_to_dual_is_conjugation(seed, n, geodesic):
    rng = np.random.default_rng(seed)
    g = random_cnp_gram(rng, n, m=2, geodesic=geodesic) if n >= 3 else random_pd_gram(n, rng)
    for h in (g, _orthogonalized(g) if r_orthogonality_witness(g).r_orthogonal else g):
        assert is_orthogonal_gram(h) == is_conjugation(h, kernel_to_dual_map(h))


def test_model_conjugation_after_rescaling(rng):
    """The conjugation of the orthogonalized model Gram is the Blaschke one.

    With ``c_i = <k_i, J k_i> = conj(B'(x_i))`` and ``k~_i = c_i^(-1/2) k_i``,
    ``J`` maps ``k~_i`` to the dual basis of the ``k~``.
    """
    z = random_disk_points(5, rng)
    g = model_gram(z)
    c = np.array([blaschke_derivative_at_zero(z, i) for i in range(5)]).conj()
    lam = c ** -0.5
    k = rescale(g, lam)
    assert is_orthogonal_gram(k)
    # J in k~ coordinates: J(k~_j) = conj(lam_j) J k_j, re-expressed over k~
    cj = model_conjugation_matrix(z)
    cj_tilde = (cj * lam.conj()[None, :]) / lam[:, None]
    np.testing.assert_allclose(cj_tilde, conjugation_from_orthogonal(k), atol=1e-8)


def test_schur_two_by_two():
    np.testing.assert_allclose(dual_gram_of_subspace(np.array([[4, -3], [-3, 3]]), 1), [[1]])
    np.testing.assert_allclose(dual_gram(np.array([[1.0]])), [[1]])


def test_schur_diagonal_deletes():
    d = np.diag([1.0, 2.0, 3.0])
    np.testing.assert_allclose(dual_gram_of_subspace(d, 1), np.diag([1.0, 3.0]))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 8))
def test_schur_equals_dual_of_regular_subspace(seed, n):
    rng = np.random.default_rng(seed)
    g = random_pd_gram(n, rng)
    drop = int(rng.integers(n))
    keep = [i for i in range(n) if i != drop]
    expect = dual_gram(regular_subspace(g, keep))
    got = dual_gram_of_subspace(dual_gram(g), drop)
    assert np.abs(got - expect).max() <= 1e-9 * max(1, np.abs(expect).max())


def test_schur_on_orthogonal_dual():
    k = _orthogonalized(model_gram([0, 0.3, -0.5j, 0.6]))
    sub_dual = dual_gram_of_subspace(dual_gram(k), 3)
    np.testing.assert_allclose(k[:3, :3] @ sub_dual, np.eye(3), atol=1e-9)


@pytest.mark.parametrize("n", [2, 5, 7])
def test_hereditary_check_on_geodesic_grams(rng, n):
    x = random_geodesic_set(n, 3, rng)
    assert orthogonality_hereditary_check(_orthogonalized(da_gram(x)))


def test_hereditary_identity():
    assert orthogonality_hereditary_check(np.eye(4))


def test_hereditary_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        orthogonality_hereditary_check(da_gram(opposite_axes_points()))


def test_iterated_deletions_stay_r_orthogonal(rng):
    g = random_cnp_gram(rng, 7, geodesic=True)
    idx = list(range(7))
    while len(idx) > 3:
        idx.pop(int(rng.integers(len(idx))))
        assert r_orthogonality_witness(regular_subspace(g, idx)).r_orthogonal
