"""Deterministic fractal and model-set constructions inside J^k(R).

Everything here produces a SampledSet: a float64 point cloud together
with construction metadata (nominal dimensions, depth, the finest scale
the sample can support).  Constructions are fully deterministic; any
randomness upstream must arrive through explicit parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import group
from .errors import DomainError, ResourceError
from .group import JetPoint
from .jets import Polynomial, SmoothFn, jet_array

MAX_CANTOR_DEPTH = 24
MAX_SET_POINTS = 8_000_000


@dataclass(frozen=True)
class CantorSpec:
    """Two-branch self-similar set in [0,1] with Hausdorff dimension alpha.

    The contraction ratio r = 2^(-1/alpha) makes log 2 / log(1/r) == alpha.
    alpha=0 degenerates to {0}; alpha=1 to a uniform grid of 2^depth points.
    """

    alpha: float
    depth: int

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 1 <= self.depth:
            raise DomainError(f"depth must be >= 1, got {self.depth}")
        if self.depth > MAX_CANTOR_DEPTH:
            raise ResourceError(
                f"depth {self.depth} exceeds {MAX_CANTOR_DEPTH} (2^depth points)"
            )

    @property
    def ratio(self) -> float:
        if self.alpha == 0.0:
            return 0.0
        return 2.0 ** (-1.0 / self.alpha)

    @property
    def finest_gap(self) -> float:
        """Length of a depth-level construction interval."""
        if self.alpha == 0.0:
            return 1.0
        if self.alpha == 1.0:
            return 2.0 ** (-self.depth)
        return self.ratio ** self.depth


def cantor_set(alpha: float, depth: int, closure: bool = False) -> np.ndarray:
    """Left endpoints of the depth-level intervals (plus right ends if asked).

    Returns a sorted float array in [0, 1]: a single 0.0 for alpha=0, a
    uniform 2^depth grid for alpha=1, and 2^depth endpoints otherwise.
    """
    spec = CantorSpec(alpha, depth)
    if alpha == 0.0:
        return np.array([0.0])
    if alpha == 1.0:
        return np.linspace(0.0, 1.0, 2 ** depth)
    r = spec.ratio
    lefts = np.array([0.0])
    length = 1.0
    for _ in range(depth):
        lefts = np.concatenate([lefts, lefts + length * (1.0 - r)])
        length *= r
    lefts.sort()
    if closure:
        pts = np.concatenate([lefts, lefts + length])
        pts.sort()
        return pts
    return lefts


@dataclass(frozen=True)
class SampledSet:
    """Float64 point cloud in J^k(R) with construction metadata.

    meta keys in use: construction, nominal_dim (and nominal_dim_v /
    nominal_dim_j where a factor map has a predicted value), depth, seed,
    min_scale (finest counting epsilon the sampling supports).
    """

    k: int
    coords: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.coords, dtype=float))
        if arr.ndim != 2 or arr.shape[1] != self.k + 2:
            raise DomainError(
                f"coords must be (n, {self.k + 2}) for k={self.k}, got {arr.shape}"
            )
        if arr.shape[0] > MAX_SET_POINTS:
            raise ResourceError(f"{arr.shape[0]} points exceeds {MAX_SET_POINTS}")
        arr.flags.writeable = False
        object.__setattr__(self, "coords", arr)

    def __len__(self) -> int:
        return self.coords.shape[0]

    def jet_points(self) -> list:
        return [JetPoint(self.k, tuple(float(c) for c in row)) for row in self.coords]

    def with_coords(self, coords: np.ndarray, **meta_updates) -> "SampledSet":
        meta = dict(self.meta)
        meta.update(meta_updates)
        return SampledSet(self.k, coords, meta)


def merge_sets(a: SampledSet, b: SampledSet, construction: str) -> SampledSet:
    if a.k != b.k:
        raise DomainError(f"k mismatch: {a.k} vs {b.k}")
    meta = {"construction": construction,
            "min_scale": max(a.meta.get("min_scale", 0.0), b.meta.get("min_scale", 0.0))}
    return SampledSet(a.k, np.vstack([a.coords, b.coords]), meta)


def axis_segment_set(k: int, axis: str, n: int, t: float = 0.0) -> SampledSet:
    """Unit segment along one coordinate axis, n uniform samples.

    axis is "x" or "u0".."uk".  Non-x segments sit in the plane {x = t}.
    """
    if n < 2:
        raise DomainError("need n >= 2 samples")
    vals = np.linspace(0.0, 1.0, n)
    coords = np.zeros((n, k + 2))
    if axis == "x":
        coords[:, 0] = vals
        w = 1
    else:
        if not (axis.startswith("u") and axis[1:].isdigit()):
            raise DomainError(f"axis must be 'x' or 'u0'..'u{k}', got {axis!r}")
        j = int(axis[1:])
        if not 0 <= j <= k:
            raise DomainError(f"axis {axis!r} out of range for k={k}")
        coords[:, 0] = t
        w = k + 1 - j
        coords[:, 1 + k - j] = vals
    step = 1.0 / (n - 1)
    meta = {"construction": f"axis-segment:{axis}", "nominal_dim": float(w),
            "min_scale": (2.0 * step) ** (1.0 / w)}
    return SampledSet(k, coords, meta)


def cantor_axis_set(k: int, alpha: float, depth: int, axis: str = "x",
                    t: float = 0.0) -> SampledSet:
    """Cantor set embedded along a single coordinate axis."""
    vals = cantor_set(alpha, depth)
    n = vals.size
    coords = np.zeros((n, k + 2))
    spec = CantorSpec(alpha, depth)
    if axis == "x":
        coords[:, 0] = vals
        w = 1
        nominal = alpha
    else:
        j = int(axis[1:])
        if not 0 <= j <= k:
            raise DomainError(f"axis {axis!r} out of range for k={k}")
        coords[:, 0] = t
        coords[:, 1 + k - j] = vals
        w = k + 1 - j
        nominal = w * alpha
    meta = {"construction": f"cantor-axis:{axis}", "nominal_dim": float(nominal),
            "alpha": float(alpha), "depth": depth,
            "min_scale": (2.0 * spec.finest_gap) ** (1.0 / w)}
    return SampledSet(k, coords, meta)


def _grid(step: float) -> np.ndarray:
    """Half-open uniform grid on [0, 1): i*step for 0 <= i < 1/step.

    Dropping the right endpoint keeps cell counts at exact powers of the
    scale (a closed grid adds one boundary cell per axis, which tilts
    log-log slopes at coarse scales); the sampled set still has the box
    dimension of the full cube.
    """
    n = int(round(1.0 / step))
    return step * np.arange(n)


def box_set(k: int, which: str, resolution: int, t: float = 0.0) -> SampledSet:
    """Full unit box, sampled on a grid matched to counting scale 2^-resolution.

    which="plane" fills {t} x [0,1]^(k+1); which="group" also spreads x over
    [0,1].  Axis of weight w gets grid step 2^(-resolution*w) / 2 so every
    cell at the finest scale holds at least two samples.
    """
    if which not in ("plane", "group"):
        raise DomainError(f"which must be 'plane' or 'group', got {which!r}")
    eps = 2.0 ** (-resolution)
    axes = []
    if which == "group":
        axes.append(_grid(eps / 2.0))
    ws = [k + 1 - j for j in range(k, -1, -1)]  # u_k .. u_0
    for w in ws:
        axes.append(_grid((eps ** w) / 2.0))
    n = int(np.prod([a.size for a in axes], dtype=np.int64))
    if n > MAX_SET_POINTS:
        raise ResourceError(f"box grid would need {n} points; lower the resolution")
    mesh = np.meshgrid(*axes, indexing="ij")
    cols = [m.reshape(-1) for m in mesh]
    if which == "plane":
        cols = [np.full(n, t)] + cols
    coords = np.column_stack(cols)
    dim = sum(ws) + (1 if which == "group" else 0)
    meta = {"construction": f"box:{which}", "nominal_dim": float(dim),
            "min_scale": eps, "resolution": resolution}
    return SampledSet(k, coords, meta)


def plane_weight_index(k: int, beta: float) -> int:
    """The unique j with h_{j-1} < beta <= h_j, where h_j = j(j+1)/2.

    beta ranges over (0, (k+1)(k+2)/2]; the plane {x=t} carries all the
    weights 1..k+1 and h_{k+1} is its full dimension.
    """
    top = (k + 1) * (k + 2) / 2
    if not 0 < beta <= top:
        raise DomainError(f"beta must lie in (0, {top}] for k={k}, got {beta}")
    for j in range(1, k + 2):
        if beta <= j * (j + 1) / 2:
            return j
    raise AssertionError("unreachable")


def plane_product_set(k: int, beta: float, depth: int, t: float = 0.0) -> SampledSet:
    """Subset of the plane {x = t} with prescribed dimension beta.

    With h_j = j(j+1)/2 and j chosen so h_{j-1} < beta <= h_j, the set is

        {t} x [0,1]^(j-1) x E x {0}^(k-j+1)

    where the full factors occupy the weight-1..j-1 coordinates, E is a
    Cantor set of Euclidean dimension (beta - h_{j-1})/j on the weight-j
    coordinate, and the remaining coordinates are pinned to 0.  The gauge
    restricted to the plane snowflakes weight-w differences to power 1/w,
    so the dimensions add up to h_{j-1} + j * dim(E) = beta.

    beta = 0 returns the empty set.
    """
    if beta == 0:
        return SampledSet(k, np.zeros((0, k + 2)),
                          {"construction": "plane-product", "nominal_dim": 0.0,
                           "beta": 0.0, "min_scale": 0.0})
    j = plane_weight_index(k, beta)
    h_prev = j * (j - 1) / 2
    alpha = (beta - h_prev) / j
    spec = CantorSpec(alpha, depth)
    # one homogeneous resolution for every axis: step eps_set^w on weight w
    eps_set = spec.finest_gap ** (1.0 / j)
    sizes = [int(round(1.0 / min(eps_set ** w, 0.5))) for w in range(1, j)]
    total = 2 ** depth
    for s in sizes:
        total *= s
    if total > MAX_SET_POINTS:
        raise ResourceError(f"product would need {total} points; lower depth")
    axes = [_grid(min(eps_set ** w, 0.5)) for w in range(1, j)]
    axes.append(cantor_set(alpha, depth))
    mesh = np.meshgrid(*axes, indexing="ij")
    cols = [m.reshape(-1) for m in mesh]
    n = cols[0].size
    coords = np.zeros((n, k + 2))
    coords[:, 0] = t
    # the weight-w coordinate is u_{k+1-w}, stored at column w
    for w, col_vals in zip(range(1, j + 1), cols):
        coords[:, w] = col_vals
    meta = {"construction": "plane-product", "nominal_dim": float(beta),
            "beta": float(beta), "weight_index": j, "cantor_alpha": float(alpha),
            "cantor_ratio": float(spec.ratio), "depth": depth,
            "min_scale": (2.0 * spec.finest_gap) ** (1.0 / j)}
    return SampledSet(k, coords, meta)


def coset_jet_set(p: JetPoint, f: SmoothFn, params: np.ndarray,
                  param_dim: Optional[float] = None,
                  min_scale: Optional[float] = None) -> SampledSet:
    """Left translate p . j^k_x(f) of a jet curve, x running over params.

    The vertical factor of every point is p itself, so the vertical image
    is the singleton {p}; the horizontal image is the jet curve over params.
    """
    k = p.k
    params = np.asarray(params, dtype=float)
    if params.ndim != 1 or params.size == 0:
        raise DomainError("params must be a nonempty 1-d array")
    pf = [float(c) for c in p.coords]
    n = params.size
    coords = np.empty((n, k + 2))
    x = pf[0] + params
    # re-derive the curve parameter from the stored x so a later factor-map
    # evaluation at x - p.x reproduces these jets bitwise; with an axis base
    # point the vertical image then collapses to exactly one grid cell
    y = x - pf[0]
    jets = jet_array(f, k, y)
    coords[:, 0] = x
    for s in range(k, -1, -1):
        w = pf[1 + k - s] + jets[:, 1 + k - s]
        for j in range(s + 1, k + 1):
            w = w + pf[1 + k - j] * y ** (j - s) / math.factorial(j - s)
        coords[:, 1 + k - s] = w
    if min_scale is None:
        gaps = np.diff(np.sort(params))
        gaps = gaps[gaps > 0]
        min_scale = float(2.0 * gaps.min()) if gaps.size else 0.0
    meta = {"construction": "coset-jet", "nominal_dim_v": 0.0,
            "min_scale": float(min_scale)}
    if param_dim is not None:
        meta["nominal_dim_j"] = float(param_dim)
        meta["nominal_dim"] = float(param_dim)
    return SampledSet(k, coords, meta)


def union_pair_set(k: int, f: SmoothFn, t: float, alpha: float, beta: float,
                   depth: int) -> SampledSet:
    """Union of a jet-curve coset through (t, 0, ..., 0) and a plane product.

    Designed so the horizontal image has dimension alpha (jet curve over a
    Cantor set plus one point) while the vertical image has dimension beta
    (the plane product moves rigidly, the coset collapses to one point).
    """
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0,1], got {alpha}")
    base = JetPoint(k, (float(t),) + (0.0,) * (k + 1))
    params = cantor_set(alpha, depth)
    spec = CantorSpec(alpha, depth)
    coset = coset_jet_set(base, f, params, param_dim=alpha,
                          min_scale=2.0 * spec.finest_gap if alpha > 0 else 0.0)
    out = coset if beta == 0 else merge_sets(
        coset, plane_product_set(k, beta, depth, t=t), "union-pair")
    meta = dict(out.meta)
    meta.update({"construction": "union-pair", "alpha": float(alpha),
                 "beta": float(beta), "depth": depth,
                 "nominal_dim_j": float(alpha), "nominal_dim_v": float(beta)})
    return SampledSet(k, out.coords, meta)


def graph_curve_set(k: int, t: float, n: int) -> SampledSet:
    """The curve {(x, x, 0, ..., 0)} over the open interval (t+1, t+2).

    Endpoints are inset by one grid step so the sample stays inside the
    open interval.  Its vertical image is a nonconstant smooth curve for
    every smooth f, which is what the sweep experiments check.
    """
    if n < 2:
        raise DomainError("need n >= 2 samples")
    step = 1.0 / (n + 1)
    xs = t + 1.0 + step * np.arange(1, n + 1)
    coords = np.zeros((n, k + 2))
    coords[:, 0] = xs
    coords[:, 1] = xs
    meta = {"construction": "graph-curve", "nominal_dim": 1.0,
            "min_scale": 2.0 * step}
    return SampledSet(k, coords, meta)


def linear_image_set(k: int, m, b, alpha: float, depth: int) -> SampledSet:
    """Jet curve of f(x) = m x + b over a Cantor parameter set.

    Construction metadata carries nominal_dim = alpha for the source and
    nominal_dim_v = (k+1) * alpha for the vertical image.  m must be nonzero.
    """
    if m == 0:
        raise DomainError("slope m must be nonzero")
    f = Polynomial((b, m))
    params = cantor_set(alpha, depth)
    spec = CantorSpec(alpha, depth)
    coords = jet_array(f, k, params)
    meta = {"construction": "linear-jet", "m": float(m), "b": float(b),
            "alpha": float(alpha), "depth": depth,
            "nominal_dim": float(alpha),
            "nominal_dim_v": float((k + 1) * alpha),
            "min_scale": 2.0 * spec.finest_gap}
    return SampledSet(k, coords, meta)
