"""Fuzzy distance between two fuzzy points.

The alpha-cut of the distance collects the extremal distances between
opposite boundary points of the two cut ellipses taken along a common
direction.  Writing V(theta, u) = (d1 + R1*u*cos(theta), d2 + R2*u*sin(theta))
with u = 1 - alpha, R_i the summed spreads and (d1, d2) the core offset,
the over/under boundary gap is |V(theta, u)| and the two cross pairings of
a direction are |V(theta, u)| and |V(theta + pi, u)|.  Extremizing over the
full circle therefore reduces to extremizing the single function |V|.

The extremal directions are located once at the support level and then
held fixed across alpha; for circular spreads this is exact (the extremal
direction is the core-to-core slope for every alpha) and it keeps the
per-alpha endpoints exact quadratics in alpha for elliptical spreads.  When the
supports overlap, the lower endpoint collapses to zero down to the level
u0 at which the cuts separate, and below u0 it grows linearly along the
direction in which the cuts last touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FuzzyNumber, FuzzyPoint, TriangularTriple

TWO_PI = 2.0 * math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class DistanceMembershipParams:
    """Shared geometry of a fuzzy point pair: summed spreads and core offset."""

    R1: float
    R2: float
    d1: float
    d2: float
    dc: float

    @classmethod
    def from_points(cls, a: FuzzyPoint, b: FuzzyPoint) -> "DistanceMembershipParams":
        d1 = a.core.x - b.core.x
        d2 = a.core.y - b.core.y
        return cls(
            R1=a.spread.p1 + b.spread.p1,
            R2=a.spread.p2 + b.spread.p2,
            d1=d1,
            d2=d2,
            dc=math.hypot(d1, d2),
        )

    def gap(self, theta, u):
        """Distance between the over-boundary of A and under-boundary of B."""
        return np.hypot(self.d1 + self.R1 * u * np.cos(theta),
                        self.d2 + self.R2 * u * np.sin(theta))

    @property
    def separation_level(self) -> float:
        """u0: the largest cut scale at which the two cuts do not overlap."""
        return math.hypot(self.d1 / self.R1, self.d2 / self.R2)


@dataclass(frozen=True)
class PerAlphaDistance:
    alpha: float
    lo: float
    mid: float
    hi: float
    argmin_theta: float
    argmax_theta: float
    refined: bool = True


def golden_minimize(f, a: float, b: float, tol: float = 1e-12):
    """Golden-section search for the minimum of f on [a, b]."""
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INV_PHI * h
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _refine_extrema(f, coarse: int = 64, tol: float = 1e-12):
    """Locate the global minimum and maximum of a 2*pi-periodic function.

    Every local extremum bracketed by the coarse grid is refined by
    golden-section search and the best refined value wins, so multiple
    basins (possible for elliptical spreads) are all inspected.

    Returns (theta_min, theta_max, refined); refined is False when the
    coarse scan finds no strict bracket and the dense-grid argument is
    used as a fallback.
    """
    thetas = np.linspace(0.0, TWO_PI, coarse, endpoint=False)
    values = f(thetas)
    step = TWO_PI / coarse

    results = []
    for sign in (1.0, -1.0):
        vals = sign * values
        brackets = [i for i in range(coarse)
                    if vals[i] <= vals[(i - 1) % coarse] and vals[i] <= vals[(i + 1) % coarse]]
        strict = [i for i in brackets
                  if vals[i] < vals[(i - 1) % coarse] or vals[i] < vals[(i + 1) % coarse]]
        if strict:
            best_x, best_v = None, math.inf
            for i in strict:
                x, v = golden_minimize(lambda t: sign * float(f(t)),
                                       thetas[i] - step, thetas[i] + step, tol)
                if v < best_v:
                    best_x, best_v = x, v
            results.append((best_x % TWO_PI, True))
        else:
            # flat or pathological profile: dense grid fallback
            dense = np.linspace(0.0, TWO_PI, 10_000, endpoint=False)
            idx = int(np.argmin(sign * f(dense)))
            results.append((float(dense[idx]), False))

    (theta_min, ok_min), (theta_max, ok_max) = results
    return theta_min, theta_max, ok_min and ok_max


class FuzzyDistance(FuzzyNumber):
    """The fuzzy distance d(A, B) as a fuzzy number with closed-form cuts."""

    def __init__(self, a: FuzzyPoint, b: FuzzyPoint):
        self.point_a = a
        self.point_b = b
        self.params = DistanceMembershipParams.from_points(a, b)
        p = self.params
        self._u0 = p.separation_level

        theta_min, theta_max, refined = _refine_extrema(lambda t: p.gap(t, 1.0))
        self.refined = refined
        self.argmax_theta = theta_max
        if self._u0 >= 1.0:
            self.argmin_theta = theta_min
        elif self._u0 > 0.0:
            # angle at which the shrinking cuts last touch
            self.argmin_theta = math.atan2(-p.d2 / (p.R2 * self._u0),
                                           -p.d1 / (p.R1 * self._u0)) % TWO_PI
        else:
            self.argmin_theta = 0.0
        super().__init__(self._cut)

    def _cut(self, alpha: float) -> tuple[float, float]:
        p = self.params
        u = 1.0 - alpha
        hi = float(p.gap(self.argmax_theta, u))
        if self._u0 >= 1.0:
            lo = float(p.gap(self.argmin_theta, u))
        elif self._u0 > 0.0:
            lo = p.dc * max(0.0, self._u0 - u) / self._u0
        else:
            lo = 0.0
        return (max(0.0, lo), hi)

    @property
    def summary(self) -> TriangularTriple:
        if self._summary is None:
            lo0, hi0 = self.cut(0.0)
            self._summary = TriangularTriple(lo0, self.params.dc, hi0)
        return self._summary

    def per_alpha(self, alpha: float) -> PerAlphaDistance:
        lo, hi = self.cut(alpha)
        return PerAlphaDistance(
            alpha=alpha, lo=lo, mid=self.params.dc, hi=hi,
            argmin_theta=self.argmin_theta, argmax_theta=self.argmax_theta,
            refined=self.refined,
        )


def endpoint_distances(a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                       theta: float) -> tuple[float, float]:
    """The two cross-boundary distances at a common direction, as (min, max)."""
    ba = a.cut_boundary(alpha, theta)
    bb = b.cut_boundary(alpha, theta)
    d_under_over = ba.under.distance_to(bb.over)
    d_over_under = ba.over.distance_to(bb.under)
    return (min(d_under_over, d_over_under), max(d_under_over, d_over_under))


def fuzzy_distance(a: FuzzyPoint, b: FuzzyPoint) -> FuzzyDistance:
    return FuzzyDistance(a, b)


def distance_alpha(a: FuzzyPoint, b: FuzzyPoint, alpha: float) -> PerAlphaDistance:
    return FuzzyDistance(a, b).per_alpha(alpha)


def distance_membership(a: FuzzyPoint, b: FuzzyPoint, x: float) -> float:
    """Grade of a candidate distance value x in the fuzzy distance of (a, b)."""
    if x < 0:
        raise ValueError(f"distance value must be nonnegative, got {x}")
    return fuzzy_distance(a, b).membership(x)


def membership_closed_form(a: FuzzyPoint, b: FuzzyPoint, x: float) -> float:
    """Closed-form grade 1 - phi(x, theta) at the recorded extremal angles.

    Inverts the frozen-direction quadratic
    x^2 = dc^2 + 2*u*K1 + u^2*K2 for u and returns 1 - u; serves as a
    cross-check of the bisection-based membership at the extremal angles.
    """
    dist = FuzzyDistance(a, b)
    p = dist.params
    lo0, hi0 = dist.cut(0.0)
    if x < lo0 or x > hi0:
        return 0.0
    if x <= p.dc:
        theta = dist.argmin_theta
        if dist._u0 < 1.0:
            # linear regime below the touching level
            u = dist._u0 * (1.0 - x / p.dc) if p.dc > 0 else 0.0
            return 1.0 - u
        branch = -1.0
    else:
        theta = dist.argmax_theta
        branch = 1.0
    c, s = math.cos(theta), math.sin(theta)
    k1 = p.d1 * p.R1 * c + p.d2 * p.R2 * s
    k2 = p.R1 ** 2 * c ** 2 + p.R2 ** 2 * s ** 2
    disc = k1 * k1 - k2 * (p.dc ** 2 - x ** 2)
    u = (-k1 + branch * math.sqrt(max(0.0, disc))) / k2
    return min(1.0, max(0.0, 1.0 - u))


def prop_core_angle(a: FuzzyPoint, b: FuzzyPoint) -> float:
    """Slope angle of the core-joining line, in [0, pi).

    For circular spreads the extremal boundary directions coincide with
    this angle modulo pi at every alpha level.
    """
    if not (a.is_circular and b.is_circular):
        raise ValueError("the slope property applies to circular spreads only")
    d1 = a.core.x - b.core.x
    d2 = a.core.y - b.core.y
    if d1 == 0.0 and d2 == 0.0:
        raise ValueError("coincident cores: slope undefined")
    return math.atan2(d2, d1) % math.pi
