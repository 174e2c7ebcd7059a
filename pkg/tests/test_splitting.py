"""Vertical/horizontal factor maps, idempotence predicates, regularity probes."""

import random
from fractions import Fraction

import numpy as np
import pytest

from jetlab import (
    InsufficientDataError,
    JetPoint,
    Polynomial,
    SplitConfig,
    StructureError,
    builtin_catalog,
    compose,
    gauge_dist,
    gauge_dist_rows,
    holder_probe,
    horizontal_image,
    horizontal_map,
    is_constant_image,
    is_j_idempotent,
    is_v_idempotent,
    j_idempotence_expected,
    jet,
    jet_curve,
    left_diff,
    lipschitz_probe,
    split,
    v_idempotence_expected,
    vertical_image,
    vertical_map,
)

SQUARE = Polynomial((0, 0, 1))
LINEAR = Polynomial((Fraction(1, 3), 2))


def _float_cloud(k, n, seed=3, scale=2.0):
    rng = random.Random(seed)
    return [JetPoint(k, tuple(rng.uniform(-scale, scale) for _ in range(k + 2)))
            for _ in range(n)]


def _rational_cloud(k, n, seed=3):
    rng = random.Random(seed)
    return [JetPoint(k, tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 9))
                              for _ in range(k + 2)))
            for _ in range(n)]


# ---------------------------------------------------------------------------
# the factorization itself


def test_split_square_frozen():
    cfg = SplitConfig(SQUARE, 0, 1)
    p = JetPoint(1, (1, 2, 3))
    v, j = split(cfg, p)
    assert j.coords == (1, 2, 1)
    assert v.coords == (0, 0, 2)
    assert compose(v, j) == p


def test_split_zero_function_frozen():
    # with f = 0 the vertical factor just transports u down to {x = t}
    cfg = SplitConfig(Polynomial((0,)), Fraction(1, 2), 1)
    v = vertical_map(cfg, JetPoint(1, (1, 2, 3)))
    assert v.coords == (Fraction(1, 2), 2, 2)


def test_split_recomposes_everywhere():
    for k in (1, 2, 3):
        cfg = SplitConfig(SQUARE, Fraction(-1, 3), k)
        for p in _rational_cloud(k, 25):
            v, j = split(cfg, p)
            assert v.x == cfg.t
            assert j == jet(SQUARE, k, p.x - cfg.t)
            assert compose(v, j) == p


def test_split_factor_k_mismatch():
    with pytest.raises(StructureError):
        vertical_map(SplitConfig(SQUARE, 0, 2), JetPoint(1, (1, 2, 3)))


def test_float_t_demotes_rational_points():
    cfg = SplitConfig(SQUARE, 0.5, 1)
    assert not cfg.exact_capable
    assert vertical_map(cfg, JetPoint(1, (1, 2, 3))).mode == "float"


# ---------------------------------------------------------------------------
# the plane action is an exact translation (hence a gauge isometry)


def test_plane_action_is_exact_subtraction():
    cubic = Polynomial((0, Fraction(-1, 2), 0, 1))
    cfg = SplitConfig(cubic, Fraction(1, 2), 2)
    for p in _rational_cloud(2, 20, seed=5):
        q = JetPoint(2, (Fraction(1, 2),) + p.coords[1:])
        v = vertical_map(cfg, q)
        want = (Fraction(1, 2),) + tuple(
            q.u(j) - cubic.deriv(j, Fraction(0)) for j in range(2, -1, -1))
        assert v.coords == want


def test_plane_action_preserves_gauge_exactly():
    cfg = SplitConfig(SQUARE, Fraction(1, 2), 2)
    pts = [JetPoint(2, (Fraction(1, 2),) + p.coords[1:])
           for p in _rational_cloud(2, 12, seed=9)]
    for p, q in zip(pts, pts[1:]):
        vp, vq = vertical_map(cfg, p), vertical_map(cfg, q)
        assert left_diff(vp, vq) == left_diff(p, q)
        assert gauge_dist(vp, vq) == gauge_dist(p, q)


# ---------------------------------------------------------------------------
# idempotence


@pytest.mark.parametrize("f,expected", [
    (SQUARE, True),             # all derivatives of x^2 vanish at 0
    (Polynomial((0, 0, 0, 1)), True),
    (Polynomial((1,)), False),  # constant term survives at 0
    (LINEAR, False),
])
def test_v_idempotence_expected(f, expected):
    assert v_idempotence_expected(SplitConfig(f, Fraction(1, 3), 1)) is expected


def test_j_idempotence_expected_only_at_zero_offset():
    assert j_idempotence_expected(SplitConfig(SQUARE, 0, 1))
    assert not j_idempotence_expected(SplitConfig(SQUARE, Fraction(1, 2), 1))


def test_idempotence_predicates_match_prediction():
    sample = _float_cloud(1, 24, seed=11)
    for f in builtin_catalog():
        for t in (0.0, 0.5):
            cfg = SplitConfig(f, t, 1)
            assert is_v_idempotent(cfg, sample) == v_idempotence_expected(cfg)
            assert is_j_idempotent(cfg, sample) == j_idempotence_expected(cfg)


# ---------------------------------------------------------------------------
# the linear-function collapse: V is constant along the whole jet curve


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("t", [0, Fraction(1, 2)])
def test_linear_jet_curve_has_constant_vertical_factor(k, t):
    cfg = SplitConfig(LINEAR, t, k)
    xs = [Fraction(n, 7) for n in range(-6, 7)]
    images = [vertical_map(cfg, jet(LINEAR, k, x)) for x in xs]
    assert all(v == images[0] for v in images)


def test_curved_jet_curve_has_moving_vertical_factor():
    cfg = SplitConfig(SQUARE, 0, 1)
    curve = jet_curve(Polynomial((0, 0, 0, 1)), 1, (0.0, 1.0), 24)
    assert not is_constant_image(cfg, curve, "V")


def test_is_constant_image_detects_collapse():
    cfg = SplitConfig(LINEAR, Fraction(1, 2), 2)
    curve = jet_curve(LINEAR, 2, (Fraction(0), Fraction(1)), 17)
    assert is_constant_image(cfg, curve, "V")
    assert not is_constant_image(cfg, curve, "J")


# ---------------------------------------------------------------------------
# vectorized images agree with the pointwise maps


@pytest.mark.parametrize("k", [1, 2, 3])
def test_images_match_pointwise_maps(k):
    cfg = SplitConfig(SQUARE, 0.25, k)
    pts = _float_cloud(k, 30, seed=k)
    coords = np.array([p.coords for p in pts])
    V = vertical_image(cfg, coords)
    J = horizontal_image(cfg, coords)
    for i, p in enumerate(pts):
        assert np.allclose(V[i], vertical_map(cfg, p).coords, rtol=1e-12, atol=1e-12)
        assert np.allclose(J[i], horizontal_map(cfg, p).coords, rtol=1e-12, atol=1e-12)


def test_gauge_dist_rows_matches_scalar():
    pts = _float_cloud(2, 16, seed=21)
    P = np.array([p.coords for p in pts[:8]])
    Q = np.array([p.coords for p in pts[8:]])
    rows = gauge_dist_rows(P, Q, 2)
    for i in range(8):
        assert rows[i] == pytest.approx(gauge_dist(pts[i], pts[8 + i]), rel=1e-12)


# ---------------------------------------------------------------------------
# probes


def test_holder_probe_on_plane_is_isometry():
    cfg = SplitConfig(SQUARE, 0.5, 1)
    pts = [JetPoint(1, (0.5,) + p.coords[1:]) for p in _float_cloud(1, 60, seed=2)]
    fit = holder_probe(cfg, pts)
    assert fit.exponent == pytest.approx(1.0, abs=1e-9)
    assert fit.constant == pytest.approx(1.0, rel=1e-9)
    assert fit.fit_r2 == pytest.approx(1.0, abs=1e-12)


def test_lipschitz_probe_on_plane_sees_collapsed_j():
    cfg = SplitConfig(SQUARE, 0.5, 1)
    pts = [JetPoint(1, (0.5,) + p.coords[1:]) for p in _float_cloud(1, 40, seed=2)]
    fit = lipschitz_probe(cfg, pts)
    assert fit.constant == 0.0
    assert fit.fit_r2 == 1.0


def test_lipschitz_probe_identity_on_own_curve():
    cfg = SplitConfig(SQUARE, 0, 1)
    curve = jet_curve(SQUARE, 1, (0.0, 1.0), 64)
    fit = lipschitz_probe(cfg, curve)
    assert fit.constant == pytest.approx(1.0, abs=1e-12)
    assert fit.fit_r2 == pytest.approx(1.0, abs=1e-9)


def test_holder_probe_refuses_exact_collapse():
    # V of the curve of a linear function is one point; with t = 0 the
    # cancellation is exact in float arithmetic, so every image distance
    # is zero and the probe must refuse rather than fit noise
    cfg = SplitConfig(LINEAR, 0, 1)
    curve = jet_curve(LINEAR, 1, (0.0, 1.0), 40)
    with pytest.raises(InsufficientDataError) as err:
        holder_probe(cfg, curve)
    assert "zero image distance" in str(err.value)


def test_probes_need_enough_pairs():
    cfg = SplitConfig(SQUARE, 0, 1)
    with pytest.raises(InsufficientDataError):
        holder_probe(cfg, _float_cloud(1, 2))
    with pytest.raises(InsufficientDataError):
        lipschitz_probe(cfg, _float_cloud(1, 2))
