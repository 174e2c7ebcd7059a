"""Anisotropic box counting: exact cell counts, covariance, trimming."""

import numpy as np
import pytest

from jetlab import (
    DomainError,
    InsufficientDataError,
    ResourceError,
    SampledSet,
    ScalePlan,
    ScaleWindowError,
    axis_segment_set,
    box_count,
    box_set,
    cantor_axis_set,
    cell_keys,
    dyadic_plan,
    estimate_dimension,
    weights,
)


# ---------------------------------------------------------------------------
# exact counts on reference sets


def test_x_segment_counts_are_powers_of_two():
    s = axis_segment_set(1, "x", 4097)
    # closed [0,1] sample: the right endpoint adds one boundary cell
    for m in range(2, 9):
        assert box_count(s, 2.0 ** -m) == 2 ** m + 1


def test_weight_two_segment_counts_square():
    s = axis_segment_set(1, "u0", 4097)
    for m in range(2, 6):
        assert box_count(s, 2.0 ** -m) == 4 ** m + 1


def test_singleton_occupies_one_cell_everywhere():
    s = SampledSet(2, np.array([[0.3, -1.2, 0.7, 2.4]]))
    for eps in dyadic_plan(2, 10).scales:
        assert box_count(s, eps) == 1


def test_count_is_monotone_in_scale():
    for s in (cantor_axis_set(1, 0.631, 10), box_set(1, "plane", 3),
              axis_segment_set(2, "u1", 513)):
        counts = [box_count(s, eps) for eps in dyadic_plan(2, 7).scales]
        assert counts == sorted(counts)


def test_translated_singleton_pairs_share_cells_consistently():
    # two points in the same translate iff their keys match; a pair closer
    # than eps/2 along x with matching transported u must collide
    s = SampledSet(1, np.array([[0.40, 0.0, 0.0], [0.42, 0.0, 0.0]]))
    assert box_count(s, 0.25) == 1


# ---------------------------------------------------------------------------
# dilation covariance: N(delta_2 E, 2 eps) == N(E, eps) exactly


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dyadic_dilation_covariance(k):
    rng = np.random.default_rng(5)
    coords = rng.uniform(-2.0, 2.0, size=(400, k + 2))
    scale = np.array([2.0 ** w for w in weights(k)])
    orig = SampledSet(k, coords)
    doubled = SampledSet(k, coords * scale)
    for eps in dyadic_plan(2, 8).scales:
        n1 = box_count(orig, eps)
        n2 = box_count(doubled, 2.0 * eps)
        assert n1 == n2


def test_cell_keys_shape_and_integrality():
    coords = np.random.default_rng(0).uniform(-1, 1, size=(50, 3))
    keys = cell_keys(coords, 1, 0.125)
    assert keys.shape == (50, 3)
    assert keys.dtype == np.int64


def test_cell_keys_validation():
    with pytest.raises(DomainError):
        cell_keys(np.zeros((4, 3)), 2, 0.25)
    with pytest.raises(DomainError):
        cell_keys(np.zeros((4, 3)), 1, 1.5)
    with pytest.raises(ResourceError):
        cell_keys(np.full((4, 3), 1e16), 1, 2.0 ** -10)


# ---------------------------------------------------------------------------
# plans and estimates


def test_scale_plan_validation():
    with pytest.raises(DomainError):
        ScalePlan(())
    with pytest.raises(DomainError):
        ScalePlan((0.25, 0.5))
    with pytest.raises(DomainError):
        ScalePlan((0.5, 1.5))
    with pytest.raises(DomainError):
        ScalePlan((0.5, 0.25), min_points_per_cell_guard=0)
    with pytest.raises(DomainError):
        dyadic_plan(4, 3)


def test_dyadic_plan_scales():
    plan = dyadic_plan(2, 4, per_octave=2)
    assert plan.scales == (0.25, 2.0 ** -2.5, 0.125, 2.0 ** -3.5, 0.0625)


def test_estimate_on_exact_power_law():
    # counts on the sampled plane box are exactly 8^m, so the fit is exact
    s = box_set(1, "plane", 5)
    est = estimate_dimension(s, dyadic_plan(2, 5))
    assert est.slope == pytest.approx(3.0, abs=1e-9)
    assert est.r2 == pytest.approx(1.0, abs=1e-12)


def test_estimate_scale_window_guard():
    s = cantor_axis_set(1, 0.5, 6)   # min_scale = 2 * 4^-6 = 2^-11
    with pytest.raises(ScaleWindowError) as err:
        estimate_dimension(s, dyadic_plan(2, 12))
    assert err.value.suggested_max_depth == 11
    est = estimate_dimension(s, dyadic_plan(2, 11, guard=1))
    assert est.slope == pytest.approx(0.5, abs=0.1)


def test_estimate_trims_both_ends():
    s = axis_segment_set(1, "x", 1025)   # min_scale 2^-9 caps the plan
    est = estimate_dimension(s, dyadic_plan(2, 9, guard=2))
    reasons = [r for _, r in est.trimmed]
    assert any("count" in r for r in reasons)
    assert any("occupancy" in r for r in reasons)
    assert est.counts[0][0] == 2.0 ** -3
    assert est.counts[-1][0] == 2.0 ** -8


def test_estimate_refuses_thin_data():
    s = SampledSet(1, np.array([[0.5, 0.5, 0.5]]))
    with pytest.raises(InsufficientDataError):
        estimate_dimension(s, dyadic_plan(2, 10))
    with pytest.raises(DomainError):
        estimate_dimension(SampledSet(1, np.zeros((0, 3))), dyadic_plan(2, 6))


def test_estimate_accepts_precomputed_counts():
    s = axis_segment_set(1, "x", 4097)
    plan = dyadic_plan(2, 8)
    pre = [(eps, box_count(s, eps)) for eps in plan.scales]
    est = estimate_dimension(s, plan, precomputed=pre)
    # trimming still applies: the 5-cell coarsest scale is dropped
    assert est.counts == tuple(pre[1:])
    assert est.slope == pytest.approx(1.0, abs=0.05)
