"""Extended-real scalar functions, separable sums, and evaluation grids.

Extended reals are plain floats where ``+inf`` marks points outside the
effective domain; ``-inf`` and NaN are rejected eagerly because every
computation here presupposes functions into (-inf, +inf].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidFunctionError, ParameterError

INF = math.inf


def ensure_extreal(v: float, context: str = "function value") -> float:
    """Validate a single extended-real value: finite or +inf only."""
    v = float(v)
    if math.isnan(v) or v == -INF:
        raise InvalidFunctionError(f"{context} is {v!r}; only finite values and +inf are allowed")
    return v


def ext_add(a: float, b: float) -> float:
    """Extended-real addition: r + inf = inf."""
    if a == INF or b == INF:
        return INF
    return a + b


@dataclass(frozen=True)
class Scalar1DFunction:
    """An extended-real-valued function of one real variable.

    Parameters
    ----------
    name : str
        Mini-language spec string (or a descriptive label for black boxes).
    evaluate : callable
        Scalar evaluator returning a float or ``math.inf``.
    domain_hint : (float, float) or None
        Finite interval where the function is finite. Mandatory for black
        boxes: brute-force grids are confined to it (plus padding). ``None``
        means finite on all of R.
    special_points : tuple of float
        Discontinuities, kinks, and atoms that brute-force candidate sets
        must always contain exactly.
    derivative : callable or None
        Closed-form derivative where the function is differentiable.
    evaluate_vec : callable or None
        Optional vectorized evaluator (ndarray -> ndarray) used by sweeps.
    is_catalog : bool
        True when properness and lower semicontinuity are asserted by the
        catalog rather than sample-checked.
    """

    name: str
    evaluate: Callable[[float], float]
    domain_hint: tuple[float, float] | None = None
    special_points: tuple[float, ...] = ()
    derivative: Callable[[float], float] | None = None
    evaluate_vec: Callable[[np.ndarray], np.ndarray] | None = field(default=None, compare=False)
    is_catalog: bool = False

    def __post_init__(self) -> None:
        if self.domain_hint is not None:
            lo, hi = self.domain_hint
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ParameterError("domain_hint must be a finite interval (lo, hi) with lo < hi")

    def __call__(self, x: float) -> float:
        return ensure_extreal(self.evaluate(float(x)), f"{self.name}({x})")

    def values(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized evaluation with the same -inf/NaN screening."""
        xs = np.asarray(xs, dtype=float)
        if self.evaluate_vec is not None:
            out = np.asarray(self.evaluate_vec(xs), dtype=float)
        else:
            out = np.array([self.evaluate(float(x)) for x in xs.ravel()], dtype=float)
            out = out.reshape(xs.shape)
        if np.isnan(out).any() or (out == -INF).any():
            raise InvalidFunctionError(f"{self.name} produced NaN or -inf on a grid")
        return out

    def slope(self, x: float, h: float = 1e-6) -> float:
        """Derivative at ``x``: closed form if available, else central difference."""
        if self.derivative is not None:
            return float(self.derivative(float(x)))
        fp, fm = self(x + h), self(x - h)
        if fp == INF or fm == INF:
            raise InvalidFunctionError(f"{self.name} not finite near {x}; cannot differentiate")
        return (fp - fm) / (2 * h)

    def negated(self) -> "Scalar1DFunction":
        """-f, valid only for finite-valued f (else -inf would appear)."""

        def neg(x: float) -> float:
            v = self.evaluate(x)
            if v == INF:
                raise InvalidFunctionError(f"cannot negate {self.name}: value +inf at {x}")
            return -v

        neg_vec = None
        if self.evaluate_vec is not None:
            base_vec = self.evaluate_vec

            def neg_vec(xs):
                v = np.asarray(base_vec(xs), dtype=float)
                if (v == INF).any():
                    raise InvalidFunctionError(f"cannot negate {self.name}: value +inf on grid")
                return -v

        deriv = None
        if self.derivative is not None:
            base_d = self.derivative
            deriv = lambda x: -base_d(x)
        return Scalar1DFunction(
            name=f"neg({self.name})",
            evaluate=neg,
            domain_hint=self.domain_hint,
            special_points=self.special_points,
            derivative=deriv,
            evaluate_vec=neg_vec,
            is_catalog=self.is_catalog,
        )


def black_box(
    name: str,
    evaluate: Callable[[float], float],
    domain_hint: tuple[float, float],
    special_points: tuple[float, ...] = (),
    derivative: Callable[[float], float] | None = None,
) -> Scalar1DFunction:
    """Wrap a user-supplied evaluator. A finite ``domain_hint`` is required
    so brute-force windows stay bounded."""
    if domain_hint is None:
        raise ParameterError("black-box functions must supply a finite domain_hint")
    return Scalar1DFunction(
        name=name,
        evaluate=evaluate,
        domain_hint=domain_hint,
        special_points=tuple(special_points),
        derivative=derivative,
        is_catalog=False,
    )


@dataclass(frozen=True)
class SeparableFunction:
    """f(x) = sum_i f_i(x_i) for an ordered tuple of scalar components."""

    components: tuple[Scalar1DFunction, ...]

    def __post_init__(self) -> None:
        if len(self.components) < 1:
            raise ParameterError("SeparableFunction needs at least one component")

    @property
    def dimension(self) -> int:
        return len(self.components)

    def value(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ParameterError(f"expected a vector of length {self.dimension}, got shape {x.shape}")
        total = 0.0
        for f, xi in zip(self.components, x):
            total = ext_add(total, f(xi))
            if total == INF:
                return INF
        return total

    def __call__(self, x) -> float:
        return self.value(x)


@dataclass(frozen=True)
class Grid:
    """Uniform grid on [lo, hi] with ``steps`` subintervals (steps+1 points)."""

    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise ParameterError("grid needs finite lo < hi")
        if self.steps < 1:
            raise ParameterError("grid needs at least one step")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / self.steps

    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps + 1)

    def widened(self, factor: float = 2.0) -> "Grid":
        """Grid over a window scaled by ``factor`` about its center, same spacing."""
        c = 0.5 * (self.lo + self.hi)
        half = 0.5 * (self.hi - self.lo) * factor
        return Grid(c - half, c + half, max(1, int(round(self.steps * factor))))
