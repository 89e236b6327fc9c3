"""Set-valued results of proximal mappings and subdifferentials.

A ``SetValue`` is one of: the empty set, a finite point set, a closed
interval [a, b], a half-line [a, inf) or (-inf, b], or the whole line.
Internally every value is a sorted tuple of disjoint closed segments,
which makes intersection, membership, distance and Hausdorff comparison
uniform across kinds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParameterError

#: Window on which unbounded sets are truncated for Hausdorff comparison.
HALFLINE_WINDOW = 1e6

#: Default absolute tolerance for membership and deduplication.
DEFAULT_TOL = 1e-9

INF = math.inf


def _validate_endpoint(v: float, allow_inf: bool) -> float:
    v = float(v)
    if math.isnan(v):
        raise ParameterError("NaN endpoint in SetValue")
    if math.isinf(v) and not allow_inf:
        raise ParameterError("unexpected infinite endpoint in SetValue")
    return v


@dataclass(frozen=True)
class SetValue:
    """A closed subset of the real line, of one of the catalogued shapes.

    ``segments`` is a sorted tuple of disjoint closed segments ``(lo, hi)``
    with ``lo <= hi``; ``lo = -inf`` or ``hi = +inf`` encode half-lines.
    """

    segments: tuple[tuple[float, float], ...] = ()
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self) -> None:
        if self.tol <= 0:
            raise ParameterError("tol must be positive")
        prev_hi = -INF
        for lo, hi in self.segments:
            if not lo <= hi:
                raise ParameterError(f"segment endpoints out of order: [{lo}, {hi}]")
            if lo < prev_hi:
                raise ParameterError("segments must be sorted and disjoint")
            prev_hi = hi

    # ---- constructors -------------------------------------------------

    @staticmethod
    def empty(tol: float = DEFAULT_TOL) -> "SetValue":
        return SetValue((), tol)

    @staticmethod
    def of_points(points, tol: float = DEFAULT_TOL) -> "SetValue":
        """Finite set; points are sorted and deduplicated at ``tol``."""
        pts = sorted(_validate_endpoint(p, allow_inf=False) for p in points)
        dedup: list[float] = []
        for p in pts:
            if not dedup or p - dedup[-1] > tol:
                dedup.append(p)
        return SetValue(tuple((p, p) for p in dedup), tol)

    @staticmethod
    def point(p: float, tol: float = DEFAULT_TOL) -> "SetValue":
        return SetValue.of_points([p], tol)

    @staticmethod
    def interval(lo: float, hi: float, tol: float = DEFAULT_TOL) -> "SetValue":
        lo = _validate_endpoint(lo, allow_inf=False)
        hi = _validate_endpoint(hi, allow_inf=False)
        if lo > hi:
            raise ParameterError(f"interval endpoints out of order: [{lo}, {hi}]")
        return SetValue(((lo, hi),), tol)

    @staticmethod
    def halfline_up(lo: float, tol: float = DEFAULT_TOL) -> "SetValue":
        """The half-line [lo, inf)."""
        return SetValue(((_validate_endpoint(lo, False), INF),), tol)

    @staticmethod
    def halfline_down(hi: float, tol: float = DEFAULT_TOL) -> "SetValue":
        """The half-line (-inf, hi]."""
        return SetValue(((-INF, _validate_endpoint(hi, False)),), tol)

    @staticmethod
    def line(tol: float = DEFAULT_TOL) -> "SetValue":
        return SetValue(((-INF, INF),), tol)

    @staticmethod
    def union(values, tol: float = DEFAULT_TOL) -> "SetValue":
        """Normalized union; segments closer than ``tol`` are merged."""
        segs = sorted(s for v in values for s in v.segments)
        merged: list[list[float]] = []
        for lo, hi in segs:
            if merged and lo <= merged[-1][1] + tol:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return SetValue(tuple((lo, hi) for lo, hi in merged), tol)

    # ---- shape queries -------------------------------------------------

    @property
    def kind(self) -> str:
        if not self.segments:
            return "empty"
        if len(self.segments) == 1:
            lo, hi = self.segments[0]
            if lo == -INF and hi == INF:
                return "line"
            if lo == -INF:
                return "halfline_down"
            if hi == INF:
                return "halfline_up"
            return "finite" if lo == hi else "interval"
        if all(lo == hi for lo, hi in self.segments):
            return "finite"
        return "union"

    @property
    def is_empty(self) -> bool:
        return not self.segments

    @property
    def points(self) -> tuple[float, ...]:
        """Members of a finite set (degenerate segments only)."""
        if self.kind not in ("finite", "empty"):
            raise ParameterError(f"points undefined for kind {self.kind!r}")
        return tuple(lo for lo, _ in self.segments)

    @property
    def lo(self) -> float:
        if self.is_empty:
            raise ParameterError("lo undefined for empty set")
        return self.segments[0][0]

    @property
    def hi(self) -> float:
        if self.is_empty:
            raise ParameterError("hi undefined for empty set")
        return self.segments[-1][1]

    def width(self) -> float:
        """Diameter of the set (inf for unbounded, 0 for empty/singleton)."""
        if self.is_empty:
            return 0.0
        return self.hi - self.lo

    def is_singleton(self, tol: float | None = None) -> bool:
        t = self.tol if tol is None else tol
        return bool(self.segments) and self.width() <= t

    # ---- point queries -------------------------------------------------

    def contains(self, x: float, tol: float | None = None) -> bool:
        return self.distance(x) <= (self.tol if tol is None else tol)

    def distance(self, x: float) -> float:
        """Distance from ``x`` to the set; inf when the set is empty."""
        if self.is_empty:
            return INF
        best = INF
        for lo, hi in self.segments:
            d = max(lo - x, x - hi, 0.0)
            best = min(best, d)
        return best

    def project(self, x: float) -> float:
        """Nearest member to ``x``; ties break toward smaller values."""
        if self.is_empty:
            raise ParameterError("cannot project onto the empty set")
        best, best_d = None, INF
        for lo, hi in self.segments:
            p = min(max(x, lo), hi)
            if math.isinf(p):  # guard the degenerate all-line segment
                p = min(max(x, -HALFLINE_WINDOW), HALFLINE_WINDOW)
            d = abs(p - x)
            if d < best_d:
                best, best_d = p, d
        return float(best)

    def representatives(self, span: float = 1.0) -> tuple[float, ...]:
        """Finite sample of the set: points of finite sets; endpoints and
        midpoint of intervals; finite endpoint plus an offset of ``span``
        into unbounded directions."""
        reps: list[float] = []
        for lo, hi in self.segments:
            if lo == hi:
                reps.append(lo)
            elif lo == -INF and hi == INF:
                reps.extend([-span, 0.0, span])
            elif lo == -INF:
                reps.extend([hi - span, hi])
            elif hi == INF:
                reps.extend([lo, lo + span])
            else:
                reps.extend([lo, 0.5 * (lo + hi), hi])
        return tuple(dict.fromkeys(reps))

    # ---- set algebra ---------------------------------------------------

    def shift(self, delta: float) -> "SetValue":
        segs = tuple(
            (lo + delta if lo != -INF else -INF, hi + delta if hi != INF else INF)
            for lo, hi in self.segments
        )
        return SetValue(segs, self.tol)

    def intersect(self, other: "SetValue") -> "SetValue":
        out: list[tuple[float, float]] = []
        for alo, ahi in self.segments:
            for blo, bhi in other.segments:
                lo, hi = max(alo, blo), min(ahi, bhi)
                if lo <= hi:
                    out.append((lo, hi))
        return SetValue(tuple(sorted(out)), min(self.tol, other.tol))

    def convex_hull(self) -> "SetValue":
        if self.is_empty:
            return self
        return SetValue(((self.lo, self.hi),), self.tol)

    def truncated(self, window: float = HALFLINE_WINDOW) -> "SetValue":
        """Clip unbounded segments to [-window, window]."""
        out = []
        for lo, hi in self.segments:
            lo2, hi2 = max(lo, -window), min(hi, window)
            if lo2 <= hi2:
                out.append((lo2, hi2))
        return SetValue(tuple(out), self.tol)

    # ---- comparison ----------------------------------------------------

    def hausdorff(self, other: "SetValue", window: float = HALFLINE_WINDOW) -> float:
        """Hausdorff distance, with unbounded sets compared on the window.

        Returns inf when exactly one side is empty and 0 when both are.
        """
        a, b = self.truncated(window), other.truncated(window)
        if a.is_empty and b.is_empty:
            return 0.0
        if a.is_empty or b.is_empty:
            return INF
        return max(_directed_hausdorff(a, b), _directed_hausdorff(b, a))

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        k = self.kind
        if k == "empty":
            return "{}"
        if k == "finite":
            return "{" + ", ".join(f"{p:g}" for p in self.points) + "}"
        return " U ".join(f"[{lo:g}, {hi:g}]" for lo, hi in self.segments)


def _directed_hausdorff(a: SetValue, b: SetValue) -> float:
    # sup_{x in a} d(x, b) is attained at a segment endpoint of `a` or at a
    # gap midpoint of `b` interior to a segment of `a`.
    candidates = [p for lo, hi in a.segments for p in (lo, hi)]
    for (_, hi_prev), (lo_next, _) in zip(b.segments, b.segments[1:]):
        mid = 0.5 * (hi_prev + lo_next)
        if any(lo <= mid <= hi for lo, hi in a.segments):
            candidates.append(mid)
    return max(b.distance(x) for x in candidates)


def setvalue_equal(a: SetValue, b: SetValue, tol: float) -> bool:
    """True iff the Hausdorff distance (on the bounded window) is <= tol.

    The empty set equals only the empty set.
    """
    if tol <= 0:
        raise ParameterError("tol must be positive")
    if a.is_empty or b.is_empty:
        return a.is_empty and b.is_empty
    return a.hausdorff(b) <= tol
