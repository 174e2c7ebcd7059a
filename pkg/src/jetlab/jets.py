"""Jets of smooth real functions and their lift into J^k(R).

The k-jet of f at x is the point (x, f^(k)(x), ..., f(x)).  Two function
representations are supported:

* Polynomial: exact rational coefficients, derivatives of every order in
  closed form, usable in both scalar modes.
* DerivativeOracle: a label plus a callable (j, x) -> f^(j)(x), float only.
  A small built-in catalog (sin, cos, exp with affine reparametrization)
  provides serializable oracles with exact derivative cycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError
from .group import JetPoint, Scalar

_FACT = [math.factorial(i) for i in range(40)]


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact rational coefficients, ascending order."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) == 0:
            raise DomainError("polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def derivative_coeffs(self, order: int) -> tuple:
        if order < 0:
            raise DomainError("derivative order must be >= 0")
        cs = self.coeffs
        if order >= len(cs):
            return (Fraction(0),)
        # c_i x^i -> c_i * i!/(i-order)! x^(i-order), falling factorial is int
        return tuple(cs[i] * (_FACT[i] // _FACT[i - order])
                     for i in range(order, len(cs)))

    def deriv(self, order: int, x):
        """f^(order)(x) by Horner; exact for Fraction/int x, vectorized for ndarray."""
        cs = self.derivative_coeffs(order)
        if isinstance(x, np.ndarray):
            acc = np.zeros_like(x, dtype=float)
            for c in reversed(cs):
                acc = acc * x + float(c)
            return acc
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(cs):
                acc = acc * x + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.deriv(0, x)


@dataclass(frozen=True)
class DerivativeOracle:
    """Float-only function given through a derivative evaluator.

    evaluator(j, x) must return f^(j)(x) and accept float or ndarray x.
    params is kept for catalog members so they can round-trip through JSON;
    ad-hoc oracles have params None and refuse serialization.
    """

    label: str
    evaluator: Callable = field(compare=False, repr=False)
    params: Optional[tuple] = None

    def deriv(self, order: int, x):
        if order < 0:
            raise DomainError("derivative order must be >= 0")
        return self.evaluator(order, x)

    def __call__(self, x):
        return self.deriv(0, x)


SmoothFn = Union[Polynomial, DerivativeOracle]


def _affine_cycle(base_cycle, scale: float, shift: float):
    """Derivatives of x -> base(scale*x + shift) via the chain rule."""
    def ev(j, x):
        inner = scale * np.asarray(x, dtype=float) + shift if isinstance(x, np.ndarray) \
            else scale * float(x) + shift
        val = base_cycle(j, inner)
        return (scale ** j) * val
    return ev


def _sin_cycle(j, x):
    r = j % 4
    if r == 0:
        return np.sin(x)
    if r == 1:
        return np.cos(x)
    if r == 2:
        return -np.sin(x)
    return -np.cos(x)


def _cos_cycle(j, x):
    return _sin_cycle(j + 1, x)


def _exp_cycle(j, x):
    return np.exp(x)


_BASE_CYCLES = {"sin": _sin_cycle, "cos": _cos_cycle, "exp": _exp_cycle}


def oracle(name: str, scale: float = 1.0, shift: float = 0.0) -> DerivativeOracle:
    """Catalog oracle for f(x) = name(scale*x + shift)."""
    if name not in _BASE_CYCLES:
        raise DomainError(f"unknown oracle {name!r}; catalog: {sorted(_BASE_CYCLES)}")
    ev = _affine_cycle(_BASE_CYCLES[name], float(scale), float(shift))
    return DerivativeOracle(label=name, evaluator=ev, params=(float(scale), float(shift)))


def builtin_catalog() -> list:
    """Representative mixed catalog used by the sweep-style experiments."""
    return [
        Polynomial((0,)),                       # zero
        Polynomial((1,)),                       # constant
        Polynomial((Fraction(1, 3), 2)),        # linear
        Polynomial((0, 0, 1)),                  # square
        Polynomial((0, Fraction(-1, 2), 0, 1)), # cubic
        oracle("sin"),
        oracle("cos", scale=2.0, shift=0.5),
        oracle("exp", scale=0.5),
    ]


def eval_derivative(f: SmoothFn, j: int, x):
    """f^(j)(x) with a range check on j."""
    if j < 0:
        raise DomainError("derivative order must be >= 0")
    return f.deriv(j, x)


def jet(f: SmoothFn, k: int, x: Scalar) -> JetPoint:
    """The k-jet (x, f^(k)(x), ..., f(x)).

    Exact when f is a Polynomial and x is rational; float otherwise.
    """
    if isinstance(f, DerivativeOracle):
        x = float(x)
    coords = [x] + [f.deriv(j, x) for j in range(k, -1, -1)]
    return JetPoint(k, tuple(coords))


def jet_array(f: SmoothFn, k: int, xs: np.ndarray) -> np.ndarray:
    """Vectorized jets: rows (x, f^(k)(x), ..., f(x)) as float64."""
    xs = np.asarray(xs, dtype=float)
    cols = [xs] + [np.broadcast_to(np.asarray(f.deriv(j, xs), dtype=float), xs.shape)
                   for j in range(k, -1, -1)]
    return np.column_stack(cols)


@dataclass(frozen=True)
class JetCurveSample:
    """A sampled stretch of the jet curve x -> j^k_x(f)."""

    k: int
    xs: tuple
    points: tuple  # JetPoint per sample


def jet_curve(f: SmoothFn, k: int, interval, n: int,
              params: Optional[Sequence] = None) -> JetCurveSample:
    """Sample the jet curve over [a, b] at n uniform parameters.

    An explicit params sequence overrides the uniform grid (used to place
    jets over Cantor parameters, or to keep everything rational).
    """
    if params is None:
        a, b = interval
        if not a < b:
            raise DomainError(f"need a < b, got [{a}, {b}]")
        if n < 2:
            raise DomainError("need at least two samples")
        params = [a + (b - a) * Fraction(i, n - 1) for i in range(n)]
        if isinstance(a, float) or isinstance(b, float) or isinstance(f, DerivativeOracle):
            params = [float(t) for t in params]
    pts = tuple(jet(f, k, t) for t in params)
    return JetCurveSample(k=k, xs=tuple(params), points=pts)


@dataclass(frozen=True)
class LengthBound:
    """Two-sided length comparison for a jet-curve stretch."""

    lower: float
    upper: float
    grid_points: int
    safety_factor: float


def jet_length_bound(f: SmoothFn, k: int, x, y,
                     grid: int = 256, safety: float = 1.0) -> LengthBound:
    """Distance bounds between j^k_x(f) and j^k_y(f) along the curve.

    upper = safety * sup_t (1 + f^(k+1)(t)^2)^(1/2) * |x - y| with the sup
    taken over a dense grid on [x, y]; lower is the trivial |x - y|.
    """
    xf, yf = float(x), float(y)
    if xf > yf:
        raise DomainError(f"need x <= y, got {x} > {y}")
    if grid < 2:
        raise DomainError("need at least two grid points")
    gap = yf - xf
    if gap == 0.0:
        return LengthBound(lower=0.0, upper=0.0, grid_points=grid, safety_factor=safety)
    ts = np.linspace(xf, yf, grid)
    dk1 = np.asarray(f.deriv(k + 1, ts), dtype=float)
    sup = float(np.max(np.sqrt(1.0 + np.broadcast_to(dk1, ts.shape) ** 2)))
    return LengthBound(lower=gap, upper=safety * sup * gap,
                       grid_points=grid, safety_factor=safety)
