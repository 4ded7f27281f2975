import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pickspace.classify import CRITERIA, Status, classify_gram, classify_points, dual_membership_probe
from pickspace.errors import NotInF
from pickspace.gram import dual_gram, regular_subspace, rescale
from pickspace.hyperbolic import embed
from pickspace.pick import conjugate_zeros, da_gram, model_gram, normalized_pick_matrix
from pickspace.sampling import (
    random_automorphism,
    random_ball_point,
    random_disk_points,
    random_generic_set,
    random_geodesic_set,
    random_rescaling,
)

from conftest import opposite_axes_points

ALL_TRUE = {name: Status.TRUE for name in CRITERIA}
ALL_FALSE = {name: Status.FALSE for name in CRITERIA}


def test_disk_zeros_in_ball_all_true(rng):
    z = np.array([0, 0.4, -0.3 + 0.2j])
    x = random_automorphism(3, rng)(embed(z[:, None], 3))
    g = rescale(da_gram(x), random_rescaling(3, rng))
    assert classify_points(x).verdicts() == ALL_TRUE
    report = classify_gram(g)
    assert report.verdicts() == ALL_TRUE
    assert report.consistent and report.is_model_space


def test_opposite_axes_all_false():
    report = classify_points(opposite_axes_points())
    assert report.verdicts() == ALL_FALSE
    assert report.consistent and not report.is_model_space


def test_pair_is_always_model(rng):
    x = np.array([random_ball_point(3, rng) for _ in range(2)])
    report = classify_points(x)
    assert report.c2_triples.status is Status.NOT_APPLICABLE
    assert all(s is Status.TRUE for name, s in report.verdicts().items() if name != "c2_triples")
    assert report.consistent


def test_single_point(rng):
    report = classify_points([random_ball_point(2, rng)])
    assert report.consistent and report.is_model_space


def test_model_gram_all_true(rng):
    report = classify_gram(model_gram(random_disk_points(5, rng)))
    assert report.verdicts() == ALL_TRUE and report.consistent


def test_dual_of_model_all_true(rng):
    report = classify_gram(dual_gram(model_gram(random_disk_points(5, rng))))
    assert report.verdicts() == ALL_TRUE and report.consistent


def test_opposite_axes_gram_all_false():
    report = classify_gram(da_gram(opposite_axes_points(0.3, 0.6)))
    assert report.verdicts() == ALL_FALSE
    assert report.consistent and report.gram_route["agrees"]


def test_non_pick_gram_rejected():
    with pytest.raises(NotInF):
        classify_gram(model_gram([0, 0.5, 0.5j]) ** 2)


def test_extremal_criterion_holds_for_every_base(rng):
    report = classify_points(random_geodesic_set(5, 2, rng))
    per_base = report.c3_extremal_product.detail["per_base"]
    assert len(per_base) == 5
    assert all(abs(r["gap"]) <= 1e-8 for r in per_base)


def test_report_serializes(rng):
    d = classify_points(random_generic_set(4, 2, rng)).to_dict()
    assert set(CRITERIA) <= set(d)
    assert d["is_model_space"] is False


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 7), geodesic=st.booleans())
def test_consistent_and_rescaling_invariant(seed, n, geodesic):
    rng = np.random.default_rng(seed)
    if geodesic or n < 3:
        x = random_geodesic_set(n, 2, rng)
    else:
        x = random_generic_set(n, 2, rng, margin=1e-4)
    g = da_gram(x)
    a = classify_gram(g)
    b = classify_gram(rescale(g, random_rescaling(n, rng)))
    assert a.consistent and b.consistent
    assert a.verdicts() == b.verdicts()
    assert a.is_model_space == (geodesic or n < 3)


def test_hereditary_membership(rng):
    g = da_gram(random_geodesic_set(6, 3, rng))
    for idx in ([0, 1, 2], [1, 3, 5], [0, 2, 3, 4, 5]):
        assert classify_gram(regular_subspace(g, idx)).verdicts() == ALL_TRUE


@pytest.mark.parametrize("seed", range(5))
def test_duality_closure(seed):
    rng = np.random.default_rng(seed)
    g = rescale(da_gram(random_geodesic_set(5, 2, rng)), random_rescaling(5, rng))
    assert classify_gram(g).is_model_space
    assert classify_gram(dual_gram(g)).verdicts() == ALL_TRUE


def test_probe_model_gram(rng):
    z = random_disk_points(4, rng)
    probe = dual_membership_probe(model_gram(z))
    assert probe.dual_in_F and probe.dual_in_M
    assert probe.report.consistent
    assert classify_gram(model_gram(conjugate_zeros(z))).is_model_space


def test_probe_opposite_axes():
    probe = dual_membership_probe(da_gram(opposite_axes_points()))
    assert not probe.dual_in_F and not probe.dual_in_M


def test_probe_perturbed_geodesic_set():
    """Perturbing a geodesic set by 1e-3 in B^2 pushes the dual out of the Pick class.

    The dual of a model space has a rank one normalized Pick matrix, so it sits
    on the boundary of the positive semidefinite cone; a generic perturbation
    produces a clearly negative eigenvalue rather than staying inside.
    """
    rng = np.random.default_rng(3)
    x = random_geodesic_set(4, 2, rng)
    assert dual_membership_probe(da_gram(x)).dual_in_F
    p = x + 1e-3 * np.array([random_ball_point(2, rng, 1.0) for _ in range(4)])
    probe = dual_membership_probe(da_gram(p))
    assert not probe.dual_in_F and not probe.dual_in_M
    w = np.linalg.eigvalsh(normalized_pick_matrix(dual_gram(da_gram(p))))
    assert w[0] < -1e3 * 1e-9 * w[-1]
