"""Group arithmetic on the model filiform jet space J^k(R).

J^k(R) is R^(k+2) with coordinates (x, u_k, ..., u_0) and product

    (x, u) . (y, v) = (x + y, w),
    w_k = u_k + v_k,
    w_s = u_s + v_s + sum_{j=s+1}^{k} u_j y^(j-s) / (j-s)!      (s < k)

which makes it a Carnot group of step k+1.  Coordinate u_j is homogeneous
of weight k+1-j under the dilations; x has weight 1.

Points carry either exact rational coordinates (fractions.Fraction) or
float64 coordinates.  The two modes never mix inside one computation:
mixing raises StructureError.  All identities in this module are exact in
rational mode, which is what the test suite leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, StructureError

Scalar = Union[Fraction, float]

# Hard cap on the jet order.  Coordinates grow like k-th powers and the
# estimator's integer cell indices would overflow far below this anyway.
MAX_K = 12

_FACT = [math.factorial(i) for i in range(MAX_K + 2)]


def _normalize(coords):
    """Coerce a coordinate tuple into a single scalar mode.

    ints and Fractions are exact and become Fractions; any float makes the
    whole point float.  Fraction/float mixes are refused rather than
    silently rounded.
    """
    has_float = any(isinstance(c, float) for c in coords)
    has_frac = any(isinstance(c, Fraction) for c in coords)
    if has_float and has_frac:
        raise StructureError("cannot mix Fraction and float coordinates in one point")
    if has_float:
        return tuple(float(c) for c in coords)
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class JetPoint:
    """A point of J^k(R), stored as (x, u_k, ..., u_0)."""

    k: int
    coords: tuple

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if self.k > MAX_K:
            raise DomainError(f"k={self.k} exceeds MAX_K={MAX_K}")
        if len(self.coords) != self.k + 2:
            raise StructureError(
                f"expected {self.k + 2} coordinates for k={self.k}, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", _normalize(self.coords))

    @property
    def mode(self) -> str:
        return "float" if isinstance(self.coords[0], float) else "rational"

    @property
    def x(self) -> Scalar:
        return self.coords[0]

    def u(self, j: int) -> Scalar:
        """The u_j coordinate, 0 <= j <= k (u_k sits next to x)."""
        if not 0 <= j <= self.k:
            raise DomainError(f"u_{j} undefined for k={self.k}")
        return self.coords[1 + self.k - j]

    def to_float(self) -> "JetPoint":
        return JetPoint(self.k, tuple(float(c) for c in self.coords))

    def to_rational(self) -> "JetPoint":
        return JetPoint(self.k, tuple(Fraction(c) for c in self.coords))


def origin(k: int, mode: str = "rational") -> JetPoint:
    zero = 0.0 if mode == "float" else Fraction(0)
    return JetPoint(k, (zero,) * (k + 2))


def weights(k: int) -> tuple:
    """Homogeneous weight of each coordinate slot (x, u_k, ..., u_0)."""
    return (1,) + tuple(k + 1 - j for j in range(k, -1, -1))


def _check_pair(p: JetPoint, q: JetPoint):
    if p.k != q.k:
        raise StructureError(f"k mismatch: {p.k} vs {q.k}")
    if p.mode != q.mode:
        raise StructureError(f"mode mismatch: {p.mode} vs {q.mode}")


def compose(p: JetPoint, q: JetPoint) -> JetPoint:
    """Group product p . q."""
    _check_pair(p, q)
    k = p.k
    y = q.x
    out = [p.x + y]
    for s in range(k, -1, -1):
        w = p.u(s) + q.u(s)
        for j in range(s + 1, k + 1):
            w += p.u(j) * y ** (j - s) / _FACT[j - s]
        out.append(w)
    return JetPoint(k, tuple(out))


def inverse(p: JetPoint) -> JetPoint:
    """Group inverse: (p^-1)_t = -sum_{j=t}^{k} (-x)^(j-t)/(j-t)! u_j."""
    k = p.k
    x = p.x
    out = [-x]
    for t in range(k, -1, -1):
        acc = p.u(t) * 0  # zero in the point's own mode
        for j in range(t, k + 1):
            acc += (-x) ** (j - t) / _FACT[j - t] * p.u(j)
        out.append(-acc)
    return JetPoint(k, tuple(out))


def left_diff(p: JetPoint, q: JetPoint) -> JetPoint:
    """p^-1 . q in closed form.

    The x coordinate is y - x and the s coordinate is
    v_s - u_s - sum_{j=s+1}^{k} (y-x)^(j-s)/(j-s)! u_j.
    """
    _check_pair(p, q)
    k = p.k
    dx = q.x - p.x
    out = [dx]
    for s in range(k, -1, -1):
        w = q.u(s) - p.u(s)
        for j in range(s + 1, k + 1):
            w -= dx ** (j - s) / _FACT[j - s] * p.u(j)
        out.append(w)
    return JetPoint(k, tuple(out))


def right_diff(p: JetPoint, q: JetPoint) -> JetPoint:
    """p . q^-1 in closed form.

    The x coordinate is x - y and the s coordinate is
    sum_{j=s}^{k} (-y)^(j-s)/(j-s)! (u_j - v_j).
    """
    _check_pair(p, q)
    k = p.k
    y = q.x
    out = [p.x - y]
    for s in range(k, -1, -1):
        w = p.u(s) - q.u(s)
        for j in range(s + 1, k + 1):
            w += (-y) ** (j - s) / _FACT[j - s] * (p.u(j) - q.u(j))
        out.append(w)
    return JetPoint(k, tuple(out))


def dilate(eps: Scalar, p: JetPoint) -> JetPoint:
    """Dilation delta_eps: x -> eps x, u_j -> eps^(k+1-j) u_j.

    eps must be positive; rational eps keeps rational points exact.
    """
    if eps <= 0:
        raise DomainError(f"dilation factor must be positive, got {eps!r}")
    k = p.k
    out = [eps * p.x]
    for j in range(k, -1, -1):
        out.append(eps ** (k + 1 - j) * p.u(j))
    return JetPoint(k, tuple(out))


def gauge_norm(p: JetPoint) -> float:
    """Homogeneous gauge |x| + sum_j |u_j|^(1/(k+1-j)).  Always float64."""
    k = p.k
    total = abs(float(p.x))
    for j in range(k + 1):
        total += abs(float(p.u(j))) ** (1.0 / (k + 1 - j))
    return total


def gauge_dist(p: JetPoint, q: JetPoint) -> float:
    """Gauge quasi-distance ||p^-1 . q||.

    Not a metric: it is neither symmetric nor triangle-bounded, so no code
    here may assume either property.
    """
    return gauge_norm(left_diff(p, q))


def ball_box_norm(p: JetPoint) -> float:
    """Box norm max(|x|, |u_k|, |u_{k-1}|^(1/2), ..., |u_0|^(1/(k+1))).

    Sandwiched by the gauge: ball_box <= gauge <= (k+2) * ball_box.
    """
    k = p.k
    best = abs(float(p.x))
    for j in range(k + 1):
        best = max(best, abs(float(p.u(j))) ** (1.0 / (k + 1 - j)))
    return best
