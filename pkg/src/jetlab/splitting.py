"""Splitting of J^k(R) into a vertical plane factor and a jet-curve factor.

Fix a smooth f and a level t.  Every point p = (x, u) factors uniquely as

    p = V(p) . J(p),   V(p) = p . j^k_{x-t}(f)^{-1} in the plane {x = t},
                       J(p) = j^k_{x-t}(f) on the jet curve of f.

V restricted to {x = t} subtracts j^k_0(f) coordinatewise and is a gauge
isometry there; V is idempotent iff j^k_0(f) = 0 and J is idempotent iff
t = 0.  The probes at the bottom fit empirical regularity exponents from
sampled pairs; they make no claim beyond the sampled window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np

from . import group
from .errors import DomainError, InsufficientDataError, StructureError
from .group import JetPoint, Scalar, gauge_dist
from .jets import DerivativeOracle, SmoothFn, jet, jet_array

_FACT = [math.factorial(i) for i in range(group.MAX_K + 2)]


@dataclass(frozen=True)
class SplitConfig:
    """The (f, t, k) triple the splitting depends on."""

    f: SmoothFn
    t: Scalar
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= group.MAX_K:
            raise DomainError(f"k must be in 1..{group.MAX_K}, got {self.k}")

    @property
    def exact_capable(self) -> bool:
        return not isinstance(self.f, DerivativeOracle) and not isinstance(self.t, float)


def _align(cfg: SplitConfig, p: JetPoint) -> Tuple[JetPoint, Scalar]:
    """Bring p and t into one scalar mode (float wins)."""
    if p.k != cfg.k:
        raise StructureError(f"point has k={p.k}, config has k={cfg.k}")
    if cfg.exact_capable and p.mode == "rational":
        return p, Fraction(cfg.t)
    return p.to_float(), float(cfg.t)


def horizontal_map(cfg: SplitConfig, p: JetPoint) -> JetPoint:
    """J(p) = j^k_{x-t}(f), the jet-curve factor of p."""
    p, t = _align(cfg, p)
    return jet(cfg.f, cfg.k, p.x - t)


def vertical_map(cfg: SplitConfig, p: JetPoint) -> JetPoint:
    """V(p) = p . j^k_{x-t}(f)^{-1}, landing in the plane {x = t}."""
    p, t = _align(cfg, p)
    return group.right_diff(p, jet(cfg.f, cfg.k, p.x - t))


def split(cfg: SplitConfig, p: JetPoint) -> Tuple[JetPoint, JetPoint]:
    """The unique pair (V(p), J(p)) with p = V(p) . J(p)."""
    return vertical_map(cfg, p), horizontal_map(cfg, p)


def horizontal_image(cfg: SplitConfig, coords: np.ndarray) -> np.ndarray:
    """Vectorized J over an (n, k+2) float coordinate array."""
    coords = np.asarray(coords, dtype=float)
    return jet_array(cfg.f, cfg.k, coords[:, 0] - float(cfg.t))


def vertical_image(cfg: SplitConfig, coords: np.ndarray) -> np.ndarray:
    """Vectorized V over an (n, k+2) float coordinate array.

    Uses the closed form V(p)_s = sum_{j=s}^k (t-x)^(j-s)/(j-s)! (u_j - f^(j)(x-t)).
    """
    coords = np.asarray(coords, dtype=float)
    k = cfg.k
    t = float(cfg.t)
    jets = jet_array(cfg.f, k, coords[:, 0] - t)
    diff = coords[:, 1:] - jets[:, 1:]          # columns j = k, ..., 0
    a = t - coords[:, 0]
    out = np.empty_like(coords)
    out[:, 0] = t
    for s in range(k, -1, -1):
        acc = diff[:, k - s].copy()
        for j in range(s + 1, k + 1):
            acc += a ** (j - s) / _FACT[j - s] * diff[:, k - j]
        out[:, 1 + k - s] = acc
    return out


def v_idempotence_expected(cfg: SplitConfig) -> bool:
    """Closed-form criterion: V is idempotent iff j^k_0(f) is the origin."""
    z = Fraction(0) if cfg.exact_capable else 0.0
    j0 = jet(cfg.f, cfg.k, z)
    return all(c == 0 for c in j0.coords)


def j_idempotence_expected(cfg: SplitConfig) -> bool:
    """Closed-form criterion: J is idempotent iff t = 0."""
    return cfg.t == 0


def _as_points(sample) -> Sequence[JetPoint]:
    if hasattr(sample, "jet_points"):
        return sample.jet_points()
    if hasattr(sample, "points"):
        return sample.points
    return list(sample)


def _coords_equal(p: JetPoint, q: JetPoint, tol: float) -> bool:
    if p.mode == "rational" and q.mode == "rational":
        return p.coords == q.coords
    return all(abs(float(a) - float(b)) <= tol for a, b in zip(p.coords, q.coords))


def is_v_idempotent(cfg: SplitConfig, sample, tol: float = 1e-10) -> bool:
    """Whether V(V(p)) == V(p) on every sample point (exact in rational mode)."""
    pts = _as_points(sample)
    if not pts:
        raise DomainError("empty sample")
    for p in pts:
        v = vertical_map(cfg, p)
        if not _coords_equal(vertical_map(cfg, v), v, tol):
            return False
    return True


def is_j_idempotent(cfg: SplitConfig, sample, tol: float = 1e-10) -> bool:
    """Whether J(J(p)) == J(p) on every sample point (exact in rational mode)."""
    pts = _as_points(sample)
    if not pts:
        raise DomainError("empty sample")
    for p in pts:
        h = horizontal_map(cfg, p)
        if not _coords_equal(horizontal_map(cfg, h), h, tol):
            return False
    return True


def is_constant_image(cfg: SplitConfig, sample, which: str = "V",
                      tol: float = 1e-10) -> bool:
    """Whether the chosen factor map sends the whole sample to one point."""
    if which not in ("V", "J"):
        raise DomainError(f"which must be 'V' or 'J', got {which!r}")
    pts = _as_points(sample)
    if not pts:
        raise DomainError("empty sample")
    fmap = vertical_map if which == "V" else horizontal_map
    first = fmap(cfg, pts[0])
    return all(_coords_equal(fmap(cfg, p), first, tol) for p in pts[1:])


# ---------------------------------------------------------------------------
# empirical regularity probes


@dataclass(frozen=True)
class RegularityFit:
    """Result of an empirical log-log regularity fit over sampled pairs."""

    exponent: float
    constant: float
    pair_count: int
    scale_range: tuple
    fit_r2: float


def gauge_dist_rows(P: np.ndarray, Q: np.ndarray, k: int) -> np.ndarray:
    """Row-wise gauge distance d(P_i, Q_i) for (n, k+2) float arrays."""
    dx = Q[:, 0] - P[:, 0]
    total = np.abs(dx)
    for s in range(k, -1, -1):
        ld = Q[:, 1 + k - s] - P[:, 1 + k - s]
        for j in range(s + 1, k + 1):
            ld = ld - dx ** (j - s) / _FACT[j - s] * P[:, 1 + k - j]
        total = total + np.abs(ld) ** (1.0 / (k + 1 - s))
    return total


def _sample_coords(sample, k: int, cap: int = 1024) -> np.ndarray:
    if hasattr(sample, "coords"):
        coords = np.asarray(sample.coords, dtype=float)
    elif hasattr(sample, "points"):
        coords = np.array([[float(c) for c in p.coords] for p in sample.points])
    else:
        coords = np.array([[float(c) for c in p.coords] for p in sample])
    if coords.ndim != 2 or coords.shape[1] != k + 2:
        raise StructureError(f"expected (n, {k + 2}) coordinates, got {coords.shape}")
    if coords.shape[0] > cap:
        # deterministic thinning keeps probes O(cap^2)
        stride = -(-coords.shape[0] // cap)
        coords = coords[::stride]
    return coords


def _pair_distances(cfg: SplitConfig, sample, image: str):
    coords = _sample_coords(sample, cfg.k)
    n = coords.shape[0]
    if n < 2:
        raise InsufficientDataError("need at least two sample points")
    iu, ju = np.triu_indices(n, 1)
    ds = gauge_dist_rows(coords[iu], coords[ju], cfg.k)
    mapped = vertical_image(cfg, coords) if image == "V" else horizontal_image(cfg, coords)
    di = gauge_dist_rows(mapped[iu], mapped[ju], cfg.k)
    return ds, di


def holder_probe(cfg: SplitConfig, sample, cutoff: float = 1.0,
                 min_pairs: int = 30, bins: int = 16) -> RegularityFit:
    """Fit an empirical Holder exponent for V from sampled pairs.

    Pairs with source distance in (0, cutoff] and nonzero image distance are
    binned by log source distance; the upper envelope (max image distance
    per bin) is fit by least squares.  The exponent describes the sampled
    window only.
    """
    ds, di = _pair_distances(cfg, sample, "V")
    mask = (ds > 0) & (ds <= cutoff) & (di > 0)
    used = int(mask.sum())
    if used < min_pairs:
        raise InsufficientDataError(
            f"only {used} usable pairs (need {min_pairs}); "
            f"{int(((ds > 0) & (ds <= cutoff) & (di == 0)).sum())} pairs had zero image distance"
        )
    ls, li = np.log(ds[mask]), np.log(di[mask])
    lo, hi = float(ls.min()), float(ls.max())
    if hi - lo < 1e-9:
        raise InsufficientDataError("degenerate source-distance range")
    edges = np.linspace(lo, hi, bins + 1)
    idx = np.clip(np.digitize(ls, edges) - 1, 0, bins - 1)
    env_x, env_y = [], []
    for b in range(bins):
        sel = idx == b
        if not sel.any():
            continue
        top = np.argmax(li[sel])
        env_x.append(ls[sel][top])
        env_y.append(li[sel][top])
    if len(env_x) < 3:
        raise InsufficientDataError(f"only {len(env_x)} occupied scale bins (need 3)")
    ex, ey = np.array(env_x), np.array(env_y)
    slope, intercept = np.polyfit(ex, ey, 1)
    pred = slope * ex + intercept
    sstot = float(np.sum((ey - ey.mean()) ** 2))
    r2 = 1.0 if sstot == 0 else 1.0 - float(np.sum((ey - pred) ** 2)) / sstot
    return RegularityFit(exponent=float(slope), constant=float(np.exp(intercept)),
                         pair_count=used, scale_range=(float(np.exp(lo)), float(np.exp(hi))),
                         fit_r2=r2)


def lipschitz_probe(cfg: SplitConfig, sample, cutoff: float = np.inf,
                    min_pairs: int = 30) -> RegularityFit:
    """Empirical Lipschitz constant for J: sup image/source distance ratio.

    The exponent is pinned at 1; fit_r2 grades how well the fixed-slope
    model explains the pairs that moved (1.0 when the image collapses).
    """
    ds, di = _pair_distances(cfg, sample, "J")
    mask = (ds > 0) & (ds <= cutoff)
    used = int(mask.sum())
    if used < min_pairs:
        raise InsufficientDataError(f"only {used} usable pairs (need {min_pairs})")
    ratios = di[mask] / ds[mask]
    constant = float(ratios.max())
    moved = mask & (di > 0)
    if constant == 0.0 or not moved.any():
        r2 = 1.0
    else:
        ls, li = np.log(ds[moved]), np.log(di[moved])
        pred = np.log(constant) + ls
        sstot = float(np.sum((li - li.mean()) ** 2))
        r2 = 1.0 if sstot == 0 else 1.0 - float(np.sum((li - pred) ** 2)) / sstot
    return RegularityFit(exponent=1.0, constant=constant, pair_count=used,
                         scale_range=(float(ds[mask].min()), float(ds[mask].max())),
                         fit_r2=r2)
