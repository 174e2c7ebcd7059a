"""Cantor constructions and the sampled point-cloud builders."""

import math

import numpy as np
import pytest

from jetlab import (
    CantorSpec,
    DomainError,
    JetPoint,
    Polynomial,
    ResourceError,
    SampledSet,
    SplitConfig,
    axis_segment_set,
    box_set,
    cantor_axis_set,
    cantor_set,
    coset_jet_set,
    graph_curve_set,
    linear_image_set,
    merge_sets,
    plane_product_set,
    plane_weight_index,
    union_pair_set,
    vertical_image,
)

SQUARE = Polynomial((0, 0, 1))
ALPHA_THIRDS = math.log(2.0) / math.log(3.0)


# ---------------------------------------------------------------------------
# cantor sets


def test_cantor_spec_ratio():
    assert CantorSpec(0.5, 4).ratio == 0.25
    assert CantorSpec(0.5, 4).finest_gap == pytest.approx(0.25 ** 4)
    assert CantorSpec(ALPHA_THIRDS, 3).ratio == pytest.approx(1.0 / 3.0)


def test_cantor_spec_validation():
    with pytest.raises(DomainError):
        CantorSpec(-0.1, 3)
    with pytest.raises(DomainError):
        CantorSpec(1.5, 3)
    with pytest.raises(DomainError):
        CantorSpec(0.5, 0)
    with pytest.raises(ResourceError):
        CantorSpec(0.5, 25)


def test_cantor_alpha_one_is_uniform_grid():
    assert np.array_equal(cantor_set(1.0, 3), np.linspace(0.0, 1.0, 8))


def test_cantor_alpha_zero_is_single_point():
    assert cantor_set(0.0, 5).tolist() == [0.0]


def test_cantor_middle_thirds_endpoints():
    pts = cantor_set(ALPHA_THIRDS, 5)
    assert pts.size == 32
    assert pts[0] == 0.0
    # every left endpoint times 3^depth is an integer for the 1/3 ratio
    scaled = pts * 3.0 ** 5
    assert np.allclose(scaled, np.round(scaled), atol=1e-9)


def test_cantor_lefts_are_nested_across_depth():
    a, b = cantor_set(0.7, 5), cantor_set(0.7, 7)
    assert set(a.tolist()) <= set(b.tolist())


def test_cantor_sorted_within_unit_interval():
    pts = cantor_set(0.4, 8)
    assert np.all(np.diff(pts) > 0)
    assert pts[0] == 0.0 and pts[-1] < 1.0


def test_cantor_closure_adds_right_endpoints():
    spec = CantorSpec(0.5, 3)
    closed = cantor_set(0.5, 3, closure=True)
    assert closed.size == 16
    assert closed[-1] == pytest.approx(1.0)
    assert np.isin(cantor_set(0.5, 3), closed).all()
    assert np.allclose(np.diff(closed.reshape(-1, 2), axis=1), spec.finest_gap)


# ---------------------------------------------------------------------------
# sampled sets


def test_sampled_set_shape_checked():
    with pytest.raises(DomainError):
        SampledSet(1, np.zeros((4, 5)))
    with pytest.raises(DomainError):
        SampledSet(1, np.zeros(4))


def test_sampled_set_coords_are_read_only():
    s = axis_segment_set(1, "x", 8)
    with pytest.raises(ValueError):
        s.coords[0, 0] = 5.0


def test_axis_segment_layout():
    s = axis_segment_set(2, "u0", 16, t=0.25)
    assert len(s) == 16
    assert np.all(s.coords[:, 0] == 0.25)
    assert s.coords[:, -1].max() == 1.0
    assert s.meta["nominal_dim"] == 3.0  # weight of u_0 at k = 2
    assert axis_segment_set(2, "x", 16).meta["nominal_dim"] == 1.0


def test_axis_segment_validation():
    with pytest.raises(DomainError):
        axis_segment_set(1, "u5", 8)
    with pytest.raises(DomainError):
        axis_segment_set(1, "y", 8)
    with pytest.raises(DomainError):
        axis_segment_set(1, "x", 1)


def test_cantor_axis_weights_scale_nominal_dim():
    s = cantor_axis_set(1, 0.5, 6, axis="u0", t=0.5)
    assert s.meta["nominal_dim"] == 1.0  # weight 2 times alpha 0.5
    assert np.all(s.coords[:, 0] == 0.5)
    sx = cantor_axis_set(1, 0.5, 6, axis="x")
    assert sx.meta["nominal_dim"] == 0.5


def test_box_grids_are_half_open():
    s = box_set(1, "group", 3)
    assert s.coords.max() < 1.0
    assert s.coords.min() == 0.0
    assert s.meta["nominal_dim"] == 4.0
    p = box_set(1, "plane", 3, t=0.5)
    assert np.all(p.coords[:, 0] == 0.5)
    assert p.meta["nominal_dim"] == 3.0


def test_box_point_budget_enforced():
    with pytest.raises(ResourceError):
        box_set(1, "group", 6)


def test_merge_requires_matching_k():
    with pytest.raises(DomainError):
        merge_sets(axis_segment_set(1, "x", 8), axis_segment_set(2, "x", 8), "u")


# ---------------------------------------------------------------------------
# plane products


def test_plane_weight_index_breakpoints():
    assert plane_weight_index(1, 0.5) == 1
    assert plane_weight_index(1, 1.0) == 1
    assert plane_weight_index(1, 1.5) == 2
    assert plane_weight_index(1, 3.0) == 2
    assert plane_weight_index(2, 5.5) == 3
    with pytest.raises(DomainError):
        plane_weight_index(1, 3.2)
    with pytest.raises(DomainError):
        plane_weight_index(1, 0.0)


def test_plane_product_layout():
    s = plane_product_set(1, 2.0, 5, t=0.5)
    assert s.meta["weight_index"] == 2
    assert s.meta["cantor_alpha"] == pytest.approx(0.5)
    assert np.all(s.coords[:, 0] == 0.5)
    # the weight-2 slot u_0 carries the cantor factor, u_1 the full grid
    assert set(np.unique(s.coords[:, 2])) == set(cantor_set(0.5, 5).tolist())
    assert s.coords[:, 1].max() < 1.0
    # h_{j-1} + j * alpha reproduces beta
    j = s.meta["weight_index"]
    assert j * (j - 1) / 2 + j * s.meta["cantor_alpha"] == pytest.approx(2.0)


def test_plane_product_beta_zero_is_empty():
    assert len(plane_product_set(1, 0.0, 4)) == 0


def test_plane_product_budget():
    with pytest.raises(ResourceError):
        plane_product_set(1, 2.0, 16)


# ---------------------------------------------------------------------------
# jet-curve style sets


def test_coset_jet_translates_params():
    base = JetPoint(1, (0.5, 0.0, 0.0))
    params = cantor_set(0.5, 6)
    s = coset_jet_set(base, SQUARE, params, param_dim=0.5)
    assert np.allclose(np.sort(s.coords[:, 0]), 0.5 + params)
    assert s.meta["nominal_dim_j"] == 0.5
    assert s.meta["nominal_dim_v"] == 0.0


def test_coset_vertical_image_collapses_bitwise():
    # the stored x re-derives the curve parameter, so V maps every sample
    # to the same float vector when the base point sits on the x axis
    base = JetPoint(1, (0.5, 0.0, 0.0))
    s = coset_jet_set(base, SQUARE, cantor_set(0.631, 8))
    V = vertical_image(SplitConfig(SQUARE, 0.5, 1), s.coords)
    assert np.unique(V, axis=0).shape[0] == 1


def test_coset_jet_validation():
    base = JetPoint(1, (0.5, 0.0, 0.0))
    with pytest.raises(DomainError):
        coset_jet_set(base, SQUARE, np.zeros((2, 2)))
    with pytest.raises(DomainError):
        coset_jet_set(base, SQUARE, np.array([]))


def test_union_pair_carries_both_nominal_dims():
    s = union_pair_set(1, SQUARE, 0.5, 0.631, 2.0, 6)
    assert s.meta["nominal_dim_j"] == pytest.approx(0.631)
    assert s.meta["nominal_dim_v"] == 2.0
    assert s.meta["min_scale"] > 0.0
    assert len(s) == 2 ** 6 + 4 ** 6


def test_graph_curve_stays_in_open_interval():
    s = graph_curve_set(1, -1.0, 64)
    xs = s.coords[:, 0]
    assert np.all((xs > 0.0) & (xs < 1.0))
    assert np.array_equal(s.coords[:, 1], xs)
    assert np.all(s.coords[:, 2] == 0.0)


def test_linear_image_set_meta():
    s = linear_image_set(2, 2, 0.0, 0.5, 6)
    assert s.meta["nominal_dim"] == 0.5
    assert s.meta["nominal_dim_v"] == 1.5
    with pytest.raises(DomainError):
        linear_image_set(1, 0, 0.0, 0.5, 6)
