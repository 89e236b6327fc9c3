"""Closed-form prox maps, envelopes, hulls, and level proximal subdifferentials.

Every entry packages a scalar function together with whatever closed forms
are exactly known for it. A closed-form accessor returns ``None`` when no
exact formula applies to the given arguments; callers then fall back to the
brute-force oracles in :mod:`levelprox.engine`.

Entries are addressed through the mini-language::

    l0, scaled_l0:gamma=<g>, indicator:points=<p1,p2,...>, pnorm:p=<p>,
    log_eps:eps=<e>, gauss_quad:c=<c>, quad:sigma=<s>, abs, neg_abs, sin,
    zero, piecewise:<json>, l0_hull:lambda=<l>
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import ParameterError, ProxBoundViolationError, UsageError
from .functions import INF, Scalar1DFunction
from .sets import SetValue

_REL = 1e-12  # relative slack for exact-tie and matching-parameter checks


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not (lam > 0 and math.isfinite(lam)):
        raise ParameterError(f"lambda must be positive and finite, got {lam}")
    return lam


@dataclass(frozen=True)
class CatalogEntry:
    """A scalar function with its exactly-known proximal calculus.

    ``prox_fn``/``envelope_fn``/``subdiff_fn``/``hull_fn`` may be ``None``
    (no closed form at all) or may return ``None`` for arguments they do
    not cover (e.g. the hull-of-l0 entry away from its defining lambda).
    """

    function: Scalar1DFunction
    threshold: float
    prox_fn: Callable[[float, float], SetValue | None] | None = None
    envelope_fn: Callable[[float, float], float | None] | None = None
    subdiff_fn: Callable[[float, float], SetValue | None] | None = None
    hull_fn: Callable[[float, float], float | None] | None = None
    semi_analytic: bool = False
    smooth_subgradient: Callable[[float, float], float] | None = None

    @property
    def name(self) -> str:
        return self.function.name

    def _guard(self, lam: float) -> float:
        lam = _check_lambda(lam)
        if lam >= self.threshold:
            raise ProxBoundViolationError(
                f"lambda={lam} is not below the prox-boundedness threshold "
                f"{self.threshold} of {self.name}"
            )
        return lam

    def prox(self, lam: float, x: float) -> SetValue | None:
        lam = self._guard(lam)
        return None if self.prox_fn is None else self.prox_fn(lam, float(x))

    def envelope(self, lam: float, x: float) -> float | None:
        lam = self._guard(lam)
        return None if self.envelope_fn is None else self.envelope_fn(lam, float(x))

    def level_subdiff(self, lam: float, x: float) -> SetValue | None:
        # Defined (possibly empty) for every lambda > 0, including lambda_f.
        lam = _check_lambda(lam)
        return None if self.subdiff_fn is None else self.subdiff_fn(lam, float(x))

    def proximal_hull(self, lam: float, x: float) -> float | None:
        lam = self._guard(lam)
        return None if self.hull_fn is None else self.hull_fn(lam, float(x))


def catalog_threshold(entry: CatalogEntry) -> float:
    """Prox-boundedness threshold lambda_f (inf for bounded-below entries)."""
    return entry.threshold


# --------------------------------------------------------------------------
# counting norm and its scaled variant
# --------------------------------------------------------------------------

def prox_scaled_l0(gamma: float, lam: float, u: float) -> SetValue:
    """Hard threshold: {u} above sqrt(2*gamma*lambda), {0,u} at it, {0} below."""
    if gamma <= 0:
        raise ParameterError(f"gamma must be positive, got {gamma}")
    lam = _check_lambda(lam)
    t = math.sqrt(2.0 * gamma * lam)
    au = abs(u)
    if abs(au - t) <= _REL * max(1.0, t):
        return SetValue.of_points([0.0, u])
    if au > t:
        return SetValue.point(u)
    return SetValue.point(0.0)


def envelope_scaled_l0(gamma: float, lam: float, x: float) -> float:
    return min(gamma, x * x / (2.0 * lam))


def level_subdiff_scaled_l0(gamma: float, lam: float, x: float) -> SetValue:
    lam = _check_lambda(lam)
    if x == 0.0:
        r = math.sqrt(2.0 * gamma / lam)
        return SetValue.interval(-r, r)
    if abs(x) >= math.sqrt(2.0 * gamma * lam) * (1 - _REL):
        return SetValue.point(0.0)
    return SetValue.empty()


def hull_scaled_l0(gamma: float, lam: float, x: float) -> float:
    t = math.sqrt(2.0 * gamma * lam)
    if abs(x) <= t:
        return math.sqrt(2.0 * gamma / lam) * abs(x) - x * x / (2.0 * lam)
    return gamma


def level_subdiff_l0(lam: float, x: float) -> SetValue:
    """Subdifferential of the counting atom: the symmetric interval
    [-sqrt(2/lambda), sqrt(2/lambda)] at 0, empty strictly inside the
    threshold, {0} beyond it."""
    return level_subdiff_scaled_l0(1.0, lam, x)


def envelope_l0(lam: float, x: float) -> float:
    _check_lambda(lam)
    return envelope_scaled_l0(1.0, lam, x)


def hull_l0(lam: float, x: float) -> float:
    _check_lambda(lam)
    return hull_scaled_l0(1.0, lam, x)


def _build_scaled_l0(gamma: float) -> CatalogEntry:
    if gamma <= 0:
        raise ParameterError(f"gamma must be positive, got {gamma}")

    def ev(t: float) -> float:
        return 0.0 if t == 0.0 else gamma

    fn = Scalar1DFunction(
        name="l0" if gamma == 1.0 else f"scaled_l0:gamma={gamma:g}",
        evaluate=ev,
        special_points=(0.0,),
        evaluate_vec=lambda xs: np.where(xs == 0.0, 0.0, gamma),
        is_catalog=True,
    )
    return CatalogEntry(
        function=fn,
        threshold=INF,
        prox_fn=lambda lam, x: prox_scaled_l0(gamma, lam, x),
        envelope_fn=lambda lam, x: envelope_scaled_l0(gamma, lam, x),
        subdiff_fn=lambda lam, x: level_subdiff_scaled_l0(gamma, lam, x),
        hull_fn=lambda lam, x: hull_scaled_l0(gamma, lam, x),
    )


# --------------------------------------------------------------------------
# indicator of a finite point set
# --------------------------------------------------------------------------

def prox_indicator_pair(lam: float, x: float) -> SetValue:
    """Prox of the indicator of {-1, 1}: both points at 0, else nearest."""
    _check_lambda(lam)
    if x == 0.0:
        return SetValue.of_points([-1.0, 1.0])
    return SetValue.point(math.copysign(1.0, x))


def level_subdiff_indicator_pair(lam: float, x: float) -> SetValue:
    lam = _check_lambda(lam)
    if x == 1.0:
        return SetValue.halfline_up(-1.0 / lam)
    if x == -1.0:
        return SetValue.halfline_down(1.0 / lam)
    return SetValue.empty()


def _indicator_member(points: tuple[float, ...], x: float) -> float | None:
    for p in points:
        if abs(x - p) <= _REL * max(1.0, abs(p)):
            return p
    return None


def _build_indicator(points: tuple[float, ...]) -> CatalogEntry:
    if not points:
        raise ParameterError("indicator needs at least one point")
    pts = tuple(sorted(set(float(p) for p in points)))

    def ev(t: float) -> float:
        return 0.0 if _indicator_member(pts, t) is not None else INF

    def prox(lam: float, x: float) -> SetValue:
        d = [abs(x - p) for p in pts]
        dmin = min(d)
        winners = [p for p, di in zip(pts, d) if di <= dmin + _REL * max(1.0, dmin)]
        return SetValue.of_points(winners)

    def envelope(lam: float, x: float) -> float:
        return min((x - p) ** 2 for p in pts) / (2.0 * lam)

    def subdiff(lam: float, x: float) -> SetValue:
        p = _indicator_member(pts, x)
        if p is None:
            return SetValue.empty()
        i = pts.index(p)
        lo = -(p - pts[i - 1]) / (2.0 * lam) if i > 0 else -INF
        hi = (pts[i + 1] - p) / (2.0 * lam) if i < len(pts) - 1 else INF
        if lo == -INF and hi == INF:
            return SetValue.line()
        if lo == -INF:
            return SetValue.halfline_down(hi)
        if hi == INF:
            return SetValue.halfline_up(lo)
        return SetValue.interval(lo, hi)

    def hull(lam: float, x: float) -> float:
        # conv(f + j/lam) is the lower convex hull of the parabola samples.
        if x < pts[0] or x > pts[-1]:
            return INF
        ys = [p * p / (2.0 * lam) for p in pts]
        hull_pts = _lower_hull(list(zip(pts, ys)))
        val = _piecewise_linear(hull_pts, x)
        return val - x * x / (2.0 * lam)

    fn = Scalar1DFunction(
        name="indicator:points=" + ",".join(f"{p:g}" for p in pts),
        evaluate=ev,
        special_points=pts,
        evaluate_vec=lambda xs: np.where(
            np.min(np.abs(xs[..., None] - np.array(pts)), axis=-1)
            <= _REL * np.maximum(1.0, np.max(np.abs(pts))),
            0.0,
            INF,
        ),
        is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox, envelope_fn=envelope, subdiff_fn=subdiff, hull_fn=hull,
    )


def _lower_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Lower convex hull of points sorted by abscissa (monotone chain)."""
    hull: list[tuple[float, float]] = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (p[0] - x1) * (y2 - y1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _piecewise_linear(pts: list[tuple[float, float]], x: float) -> float:
    if len(pts) == 1:
        return pts[0][1]
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x1 <= x <= x2:
            if x2 == x1:
                return min(y1, y2)
            t = (x - x1) / (x2 - x1)
            return (1 - t) * y1 + t * y2
    raise ParameterError(f"{x} outside hull abscissa range")


# --------------------------------------------------------------------------
# quadratic sigma*t^2/2
# --------------------------------------------------------------------------

def prox_quad(sigma: float, lam: float, x: float) -> SetValue:
    if sigma <= 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    lam = _check_lambda(lam)
    return SetValue.point(x / (1.0 + lam * sigma))


def _build_quad(sigma: float) -> CatalogEntry:
    if sigma <= 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    fn = Scalar1DFunction(
        name=f"quad:sigma={sigma:g}",
        evaluate=lambda t: 0.5 * sigma * t * t,
        derivative=lambda t: sigma * t,
        evaluate_vec=lambda xs: 0.5 * sigma * xs * xs,
        is_catalog=True,
    )
    return CatalogEntry(
        function=fn,
        threshold=INF,
        prox_fn=lambda lam, x: prox_quad(sigma, lam, x),
        envelope_fn=lambda lam, x: 0.5 * sigma * x * x / (1.0 + lam * sigma),
        subdiff_fn=lambda lam, x: SetValue.point(sigma * x),
        hull_fn=lambda lam, x: 0.5 * sigma * x * x,
        smooth_subgradient=lambda lam, x: sigma * x,
    )


# --------------------------------------------------------------------------
# absolute value and its negative
# --------------------------------------------------------------------------

def _build_abs() -> CatalogEntry:
    def prox(lam: float, x: float) -> SetValue:
        return SetValue.point(math.copysign(max(abs(x) - lam, 0.0), x))

    def envelope(lam: float, x: float) -> float:
        return x * x / (2.0 * lam) if abs(x) <= lam else abs(x) - lam / 2.0

    def subdiff(lam: float, x: float) -> SetValue:
        if x == 0.0:
            return SetValue.interval(-1.0, 1.0)
        return SetValue.point(math.copysign(1.0, x))

    fn = Scalar1DFunction(
        name="abs", evaluate=abs, special_points=(0.0,),
        evaluate_vec=np.abs, is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox, envelope_fn=envelope, subdiff_fn=subdiff,
        hull_fn=lambda lam, x: abs(x),
    )


def _build_neg_abs() -> CatalogEntry:
    def prox(lam: float, x: float) -> SetValue:
        if x == 0.0:
            return SetValue.of_points([-lam, lam])
        return SetValue.point(x + math.copysign(lam, x))

    def subdiff(lam: float, x: float) -> SetValue:
        if abs(x) >= lam * (1 - _REL) and x != 0.0:
            return SetValue.point(-math.copysign(1.0, x))
        return SetValue.empty()

    def hull(lam: float, x: float) -> float:
        if abs(x) <= lam:
            return -lam / 2.0 - x * x / (2.0 * lam)
        return -abs(x)

    fn = Scalar1DFunction(
        name="neg_abs", evaluate=lambda t: -abs(t), special_points=(0.0,),
        evaluate_vec=lambda xs: -np.abs(xs), is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox,
        envelope_fn=lambda lam, x: -abs(x) - lam / 2.0,
        subdiff_fn=subdiff,
        hull_fn=hull,
    )


# --------------------------------------------------------------------------
# |t|^p and log(|t|+eps): prox by safeguarded stationarity solves
# --------------------------------------------------------------------------

def _tie_set(u_zero_value: float, cand: float, cand_value: float) -> SetValue:
    gap = cand_value - u_zero_value
    scale = max(1.0, abs(u_zero_value), abs(cand_value))
    if abs(gap) <= 1e-12 * scale:
        return SetValue.of_points([0.0, cand])
    return SetValue.point(cand) if gap < 0 else SetValue.point(0.0)


def _build_pnorm(p: float) -> CatalogEntry:
    if p <= 0:
        raise ParameterError(f"p must be positive, got {p}")

    def ev(t: float) -> float:
        return abs(t) ** p

    def prox(lam: float, x: float) -> SetValue:
        if x == 0.0:
            return SetValue.point(0.0)
        s, ax = math.copysign(1.0, x), abs(x)
        phi = lambda y: y**p + (y - ax) ** 2 / (2.0 * lam)
        psi = lambda y: lam * p * y ** (p - 1.0) + y - ax  # lam * phi'
        if p >= 1.0:
            if psi(ax) <= 0:
                root = ax
            elif p == 1.0:
                root = max(ax - lam, 0.0)
            else:
                root = brentq(psi, 0.0, ax, xtol=1e-14, rtol=8.9e-16)
            return SetValue.point(s * root)
        # 0 < p < 1: psi is convex with psi(0+)=+inf; a descent pocket exists
        # only when its minimum dips below zero.
        ym = (lam * p * (1.0 - p)) ** (1.0 / (2.0 - p))
        if ym >= ax or psi(ym) > 0:
            return SetValue.point(0.0)
        y2 = brentq(psi, ym, ax, xtol=1e-14, rtol=8.9e-16)
        return _tie_set(phi(0.0), s * y2, phi(y2)).shift(0.0)

    def envelope(lam: float, x: float) -> float:
        u = prox(lam, x).representatives()[0]
        return abs(u) ** p + (u - x) ** 2 / (2.0 * lam)

    fn = Scalar1DFunction(
        name=f"pnorm:p={p:g}", evaluate=ev, special_points=(0.0,),
        evaluate_vec=lambda xs: np.abs(xs) ** p, is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox, envelope_fn=envelope, semi_analytic=True,
    )


def _build_log_eps(eps: float) -> CatalogEntry:
    if eps <= 0:
        raise ParameterError(f"eps must be positive, got {eps}")

    def ev(t: float) -> float:
        return math.log(abs(t) + eps)

    def prox(lam: float, x: float) -> SetValue:
        if x == 0.0:
            return SetValue.point(0.0)
        s, ax = math.copysign(1.0, x), abs(x)
        phi = lambda y: math.log(y + eps) + (y - ax) ** 2 / (2.0 * lam)
        # stationarity (y-ax)(y+eps) + lam = 0 is a quadratic in y
        disc = (ax + eps) ** 2 - 4.0 * lam
        if disc < 0:
            return SetValue.point(0.0)
        y2 = 0.5 * ((ax - eps) + math.sqrt(disc))
        if y2 <= 0:
            return SetValue.point(0.0)
        return _tie_set(phi(0.0), s * y2, phi(y2))

    def envelope(lam: float, x: float) -> float:
        u = prox(lam, x).representatives()[0]
        return math.log(abs(u) + eps) + (u - x) ** 2 / (2.0 * lam)

    fn = Scalar1DFunction(
        name=f"log_eps:eps={eps:g}", evaluate=ev, special_points=(0.0,),
        evaluate_vec=lambda xs: np.log(np.abs(xs) + eps), is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox, envelope_fn=envelope, semi_analytic=True,
    )


# --------------------------------------------------------------------------
# Gaussian-minus-quadratic: finite prox-bound threshold c
# --------------------------------------------------------------------------

def _build_gauss_quad(c: float) -> CatalogEntry:
    if c <= 0:
        raise ParameterError(f"c must be positive, got {c}")
    fn = Scalar1DFunction(
        name=f"gauss_quad:c={c:g}",
        evaluate=lambda t: math.exp(-t * t) - t * t / (2.0 * c),
        derivative=lambda t: -2.0 * t * math.exp(-t * t) - t / c,
        evaluate_vec=lambda xs: np.exp(-xs * xs) - xs * xs / (2.0 * c),
        is_catalog=True,
    )
    return CatalogEntry(function=fn, threshold=c)


# --------------------------------------------------------------------------
# sine, zero
# --------------------------------------------------------------------------

def _build_sin() -> CatalogEntry:
    fn = Scalar1DFunction(
        name="sin", evaluate=math.sin, derivative=math.cos,
        evaluate_vec=np.sin, is_catalog=True,
    )
    return CatalogEntry(function=fn, threshold=INF)


def _build_zero() -> CatalogEntry:
    fn = Scalar1DFunction(
        name="zero", evaluate=lambda t: 0.0,
        derivative=lambda t: 0.0,
        evaluate_vec=lambda xs: np.zeros_like(xs), is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=lambda lam, x: SetValue.point(x),
        envelope_fn=lambda lam, x: 0.0,
        subdiff_fn=lambda lam, x: SetValue.point(0.0),
        hull_fn=lambda lam, x: 0.0,
        smooth_subgradient=lambda lam, x: 0.0,
    )


# --------------------------------------------------------------------------
# piecewise polynomials
# --------------------------------------------------------------------------

def _build_piecewise(cfg: dict) -> CatalogEntry:
    try:
        breaks = tuple(float(b) for b in cfg.get("breakpoints", ()))
        pieces = [np.asarray(c, dtype=float) for c in cfg["pieces"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad piecewise config: {exc}") from exc
    if len(pieces) != len(breaks) + 1:
        raise UsageError("piecewise needs len(pieces) == len(breakpoints) + 1")
    if any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
        raise UsageError("piecewise breakpoints must be strictly increasing")
    domain = cfg.get("domain")
    if domain is not None:
        domain = (float(domain[0]), float(domain[1]))
        if not domain[0] < domain[1]:
            raise UsageError("piecewise domain must satisfy lo < hi")

    def piece_val(i: int, t: float) -> float:
        return float(np.polynomial.polynomial.polyval(t, pieces[i]))

    def ev(t: float) -> float:
        if domain is not None and not (domain[0] <= t <= domain[1]):
            return INF
        i = int(np.searchsorted(breaks, t, side="left"))
        # at a breakpoint take the min of adjacent pieces: lsc for min-type
        if i < len(breaks) and t == breaks[i]:
            return min(piece_val(i, t), piece_val(i + 1, t))
        return piece_val(i, t)

    def threshold_of() -> float:
        if domain is not None:
            return INF
        lam_f = INF
        for coeffs in (pieces[0], pieces[-1]):
            deg = len(coeffs) - 1
            while deg > 0 and coeffs[deg] == 0.0:
                deg -= 1
            lead = coeffs[deg]
            if deg > 2 and lead < 0:
                raise ParameterError("piecewise tail decreases faster than quadratically: not prox-bounded")
            if deg == 2 and lead < 0:
                lam_f = min(lam_f, 1.0 / (2.0 * abs(lead)))
        return lam_f

    specials = breaks + (domain if domain is not None else ())
    fn = Scalar1DFunction(
        name="piecewise:" + json.dumps(cfg, separators=(",", ":"), sort_keys=True),
        evaluate=ev,
        domain_hint=domain,
        special_points=specials,
        is_catalog=True,
    )
    return CatalogEntry(function=fn, threshold=threshold_of())


# --------------------------------------------------------------------------
# proximal hull of the counting atom, as a first-class entry
# --------------------------------------------------------------------------

def _build_l0_hull(lam0: float) -> CatalogEntry:
    lam0 = _check_lambda(lam0)
    t = math.sqrt(2.0 * lam0)
    r = math.sqrt(2.0 / lam0)

    def ev(x: float) -> float:
        return r * abs(x) - x * x / (2.0 * lam0) if abs(x) <= t else 1.0

    def matches(lam: float) -> bool:
        return abs(lam - lam0) <= _REL * lam0

    def prox(lam: float, x: float) -> SetValue | None:
        if not matches(lam):
            return None
        if abs(abs(x) - t) <= _REL * t:
            return SetValue.interval(0.0, t) if x > 0 else SetValue.interval(-t, 0.0)
        if abs(x) < t:
            return SetValue.point(0.0)
        return SetValue.point(x)

    def envelope(lam: float, x: float) -> float | None:
        if not matches(lam):
            return None
        return min(1.0, x * x / (2.0 * lam))

    def subdiff(lam: float, x: float) -> SetValue | None:
        if not matches(lam):
            return None
        if x == 0.0:
            return SetValue.interval(-r, r)
        if abs(x) <= t * (1 + _REL):
            return SetValue.point(math.copysign(r, x) - x / lam0)
        return SetValue.point(0.0)

    def hull(lam: float, x: float) -> float | None:
        # g + j/lam0 is convex, hence g is lam-proximal for lam <= lam0.
        return ev(x) if lam <= lam0 * (1 + _REL) else None

    def vec(xs: np.ndarray) -> np.ndarray:
        return np.where(np.abs(xs) <= t, r * np.abs(xs) - xs * xs / (2.0 * lam0), 1.0)

    fn = Scalar1DFunction(
        name=f"l0_hull:lambda={lam0:g}", evaluate=ev,
        special_points=(-t, 0.0, t), evaluate_vec=vec, is_catalog=True,
    )
    return CatalogEntry(
        function=fn, threshold=INF,
        prox_fn=prox, envelope_fn=envelope, subdiff_fn=subdiff, hull_fn=hull,
    )


# --------------------------------------------------------------------------
# mini-language parser
# --------------------------------------------------------------------------

_BUILDERS: dict[str, Callable[[dict[str, str]], CatalogEntry]] = {
    "zero": lambda kv: _require_no_params("zero", kv) or _build_zero(),
    "l0": lambda kv: _require_no_params("l0", kv) or _build_scaled_l0(1.0),
    "scaled_l0": lambda kv: _build_scaled_l0(_float_param(kv, "gamma")),
    "indicator": lambda kv: _build_indicator(_float_list_param(kv, "points")),
    "pnorm": lambda kv: _build_pnorm(_float_param(kv, "p")),
    "log_eps": lambda kv: _build_log_eps(_float_param(kv, "eps")),
    "gauss_quad": lambda kv: _build_gauss_quad(_float_param(kv, "c")),
    "quad": lambda kv: _build_quad(_float_param(kv, "sigma")),
    "abs": lambda kv: _require_no_params("abs", kv) or _build_abs(),
    "neg_abs": lambda kv: _require_no_params("neg_abs", kv) or _build_neg_abs(),
    "sin": lambda kv: _require_no_params("sin", kv) or _build_sin(),
    "l0_hull": lambda kv: _build_l0_hull(_float_param(kv, "lambda", default=1.0)),
}


def _require_no_params(name: str, kv: dict[str, str]) -> None:
    if kv:
        raise UsageError(f"function {name!r} takes no parameters, got {sorted(kv)}")


def _float_param(kv: dict[str, str], key: str, default: float | None = None) -> float:
    if key not in kv:
        if default is not None:
            if kv:
                raise UsageError(f"unknown parameters {sorted(kv)} (expected only {key!r})")
            return default
        raise UsageError(f"missing required parameter {key!r}")
    extra = set(kv) - {key}
    if extra:
        raise UsageError(f"unknown parameters {sorted(extra)}")
    try:
        return float(kv[key])
    except ValueError as exc:
        raise UsageError(f"parameter {key}={kv[key]!r} is not a number") from exc


def _float_list_param(kv: dict[str, str], key: str) -> tuple[float, ...]:
    if set(kv) != {key}:
        raise UsageError(f"expected exactly the parameter {key!r}, got {sorted(kv)}")
    try:
        return tuple(float(tok) for tok in kv[key].split(",") if tok != "")
    except ValueError as exc:
        raise UsageError(f"parameter {key}={kv[key]!r} is not a comma-separated list of numbers") from exc


def available_functions() -> list[str]:
    return sorted(_BUILDERS) + ["piecewise:<json>"]


@lru_cache(maxsize=256)
def parse_function_spec(spec: str) -> CatalogEntry:
    """Resolve a mini-language string to a catalog entry."""
    spec = spec.strip()
    if not spec:
        raise UsageError("empty function spec")
    head, _, rest = spec.partition(":")
    if head == "piecewise":
        try:
            cfg = json.loads(rest)
        except json.JSONDecodeError as exc:
            raise UsageError(f"piecewise payload is not valid JSON: {exc}") from exc
        return _build_piecewise(cfg)
    if head not in _BUILDERS:
        raise UsageError(f"unknown function {head!r}; available: {', '.join(available_functions())}")
    kv: dict[str, str] = {}
    if rest:
        # values may themselves contain commas (e.g. points=-1,1): a token
        # without '=' continues the previous value
        last_key = None
        for tok in rest.split(","):
            if "=" in tok:
                k, _, v = tok.partition("=")
                kv[k.strip()] = v.strip()
                last_key = k.strip()
            elif last_key is not None:
                kv[last_key] += "," + tok.strip()
            else:
                raise UsageError(f"malformed parameters in {spec!r}")
    return _BUILDERS[head](kv)


def resolve(spec: str) -> CatalogEntry:
    """Alias of :func:`parse_function_spec`."""
    return parse_function_spec(spec)
