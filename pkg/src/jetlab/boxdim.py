"""Box-counting dimension estimation under the gauge geometry.

Cells at scale eps are left translates of the half-open anisotropic box
[0,eps) x [0,eps) x [0,eps^2) x ... x [0,eps^(k+1)), which is the ball-box
model of a gauge ball.  The translate containing a point is found by a
top-down peel: floor the x coordinate, then floor each u_s after removing
the Taylor transport sum_{j>s} lam_j (x')^(j-s)/(j-s)! generated by the
already-fixed coarser coordinates lam_j.  The fiber of a key is exactly
lam . box for the lattice-aligned translate lam, so cells model balls at
every point of the cloud, not just near the origin.  A plain per-axis
grid would overcount any set that moves in x while carrying nonzero
u-coordinates (a jet curve crosses eps^(-1) extra u_0 cells per x cell);
the peel cancels that drift to below one pitch.

Counts are exactly dilation covariant for dyadic scales: the key of
delta_2(p) at 2*eps equals the key of p at eps.  Cell nesting across
scales is exact for unsheared sets and approximate otherwise, so count
monotonicity is asserted in tests over the shipped sets rather than
claimed universally.

Coordinates are assumed desk scale (|coord| up to ~10^3); indices are
checked against the int64 range rather than silently wrapping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, InsufficientDataError, ResourceError, ScaleWindowError
from .fractals import SampledSet

_INT64_GUARD = 2 ** 62


@dataclass(frozen=True)
class ScalePlan:
    """Descending counting scales plus trimming guards.

    min_points_per_cell_guard drops scales where the average occupancy
    n_points / N(eps) falls below the guard (the cloud no longer fills its
    cells, counts saturate toward the sample size).
    """

    scales: tuple
    min_points_per_cell_guard: int = 2

    def __post_init__(self):
        sc = tuple(float(e) for e in self.scales)
        if len(sc) == 0:
            raise DomainError("need at least one scale")
        if any(not 0.0 < e < 1.0 for e in sc):
            raise DomainError(f"scales must lie in (0, 1), got {sc}")
        if any(a <= b for a, b in zip(sc, sc[1:])):
            raise DomainError(f"scales must be strictly decreasing, got {sc}")
        if self.min_points_per_cell_guard < 1:
            raise DomainError("min_points_per_cell_guard must be >= 1")
        object.__setattr__(self, "scales", sc)


def dyadic_plan(coarse: int = 2, fine: int = 10, per_octave: int = 1,
                guard: int = 2) -> ScalePlan:
    """Scales 2^-coarse .. 2^-fine, per_octave geometric steps per octave."""
    if coarse < 1 or fine <= coarse:
        raise DomainError(f"need 1 <= coarse < fine, got {coarse}, {fine}")
    steps = (fine - coarse) * per_octave
    exps = [coarse + i / per_octave for i in range(steps + 1)]
    return ScalePlan(tuple(2.0 ** -e for e in exps), min_points_per_cell_guard=guard)


def cell_keys(coords: np.ndarray, k: int, eps: float) -> np.ndarray:
    """Integer cell key per point, shape (n, k+2).

    Keys index left translates of the anisotropic box; two points share a
    row iff they lie in the same translate.
    """
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != k + 2:
        raise DomainError(f"expected (n, {k + 2}) coordinates, got {coords.shape}")
    if not 0.0 < eps < 1.0:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    finest = eps ** (k + 1)
    if float(np.max(np.abs(coords), initial=0.0)) / finest >= _INT64_GUARD:
        raise ResourceError("cell indices would overflow int64; coarsen the scales")
    n = coords.shape[0]
    keys = np.empty((n, k + 2), dtype=np.int64)
    ix = np.floor(coords[:, 0] / eps)
    keys[:, 0] = ix
    xp = coords[:, 0] - ix * eps            # x offset inside the cell, in [0, eps)
    lam = np.empty((n, k + 1))              # fixed translate coords, cols j = k..0
    for s in range(k, -1, -1):
        pitch = eps ** (k + 1 - s)
        tmp = coords[:, 1 + k - s].copy()
        for j in range(s + 1, k + 1):
            tmp -= lam[:, k - j] * xp ** (j - s) / math.factorial(j - s)
        idx = np.floor(tmp / pitch)
        keys[:, 1 + k - s] = idx
        lam[:, k - s] = idx * pitch
    return keys


def box_count(sset: SampledSet, eps: float) -> int:
    """Number of distinct cells at scale eps meeting the sample."""
    if len(sset) == 0:
        raise DomainError("cannot box-count an empty set")
    keys = cell_keys(sset.coords, sset.k, eps)
    return int(np.unique(keys, axis=0).shape[0])


@dataclass(frozen=True)
class DimensionEstimate:
    """Least-squares slope of log N(eps) against log 1/eps."""

    slope: float
    intercept: float
    r2: float
    counts: tuple                 # ((eps, N), ...) usable scales, descending eps
    scale_window: tuple           # (coarsest, finest) usable eps
    trimmed: tuple = ()           # ((eps, reason), ...)


def estimate_dimension(sset: SampledSet, plan: Optional[ScalePlan] = None,
                       precomputed: Optional[Sequence[Tuple[float, int]]] = None
                       ) -> DimensionEstimate:
    """Fit a box-counting dimension over the plan's usable scales.

    Scales finer than the sample's recorded min_scale raise ScaleWindowError
    up front.  Scales with fewer than 8 cells or with average occupancy
    below the plan guard are trimmed (recorded with reasons); fewer than 4
    surviving scales raise InsufficientDataError.
    """
    if plan is None:
        plan = dyadic_plan()
    if len(sset) == 0:
        raise DomainError("cannot estimate dimension of an empty set")
    min_scale = float(sset.meta.get("min_scale", 0.0) or 0.0)
    finest = plan.scales[-1]
    if min_scale > 0.0 and finest < min_scale:
        max_depth = int(math.floor(-math.log2(min_scale)))
        raise ScaleWindowError(
            f"finest scale {finest:g} is below the sample resolution {min_scale:g}; "
            f"use scales no finer than 2^-{max_depth}",
            min_scale=min_scale, suggested_max_depth=max_depth)
    if precomputed is None:
        raw = [(eps, box_count(sset, eps)) for eps in plan.scales]
    else:
        raw = [(float(e), int(c)) for e, c in precomputed]
    n_pts = len(sset)
    usable, trimmed = [], []
    for eps, count in raw:
        if count < 8:
            trimmed.append((eps, f"count {count} < 8"))
        elif count * plan.min_points_per_cell_guard > n_pts:
            trimmed.append((eps, f"occupancy {n_pts / count:.2f} below guard "
                                 f"{plan.min_points_per_cell_guard}"))
        else:
            usable.append((eps, count))
    if len(usable) < 4:
        raise InsufficientDataError(
            f"only {len(usable)} usable scales after trimming {len(trimmed)} "
            f"(reasons: {[r for _, r in trimmed]}); need 4")
    xs = np.log([1.0 / e for e, _ in usable])
    ys = np.log([c for _, c in usable])
    slope, intercept = np.polyfit(xs, ys, 1)
    pred = slope * xs + intercept
    sstot = float(np.sum((ys - ys.mean()) ** 2))
    r2 = 1.0 if sstot == 0 else 1.0 - float(np.sum((ys - pred) ** 2)) / sstot
    return DimensionEstimate(slope=float(slope), intercept=float(intercept), r2=r2,
                             counts=tuple(usable),
                             scale_window=(usable[0][0], usable[-1][0]),
                             trimmed=tuple(trimmed))
