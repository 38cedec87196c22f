"""Crisp Hausdorff distance between convex shapes and its fuzzy extension.

For compact convex sets the Hausdorff distance equals the sup-norm
difference of their support functions, which for disks gives the closed
form dc + |r1 - r2| and for axis-aligned ellipses is evaluated on a
direction fan with local refinement.

The fuzzy Hausdorff distance of two fuzzy points projects both onto the
line joining the cores and differences the inverse endpoints of the two
projected fuzzy numbers per alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FuzzyNumber, FuzzyPoint, Point2, TriangularTriple
from .distance import golden_minimize
from .lines import LineSpec, ProjectedFuzzyNumber, project_onto_line


@dataclass(frozen=True)
class Ellipse:
    """Axis-aligned ellipse; rx == ry is a disk and rx == ry == 0 a point."""

    cx: float
    cy: float
    rx: float
    ry: float

    def __post_init__(self):
        if self.rx < 0 or self.ry < 0:
            raise ValueError("ellipse radii must be nonnegative")

    @classmethod
    def point(cls, x: float, y: float) -> "Ellipse":
        return cls(x, y, 0.0, 0.0)

    @classmethod
    def disk(cls, x: float, y: float, r: float) -> "Ellipse":
        return cls(x, y, r, r)

    @classmethod
    def from_fuzzy_cut(cls, p: FuzzyPoint, alpha: float) -> "Ellipse":
        rx, ry = p.cut_radii(alpha)
        return cls(p.core.x, p.core.y, rx, ry)

    @property
    def is_disk(self) -> bool:
        return self.rx == self.ry

    def support(self, theta) -> float:
        """Support function value in direction (cos(theta), sin(theta))."""
        c, s = np.cos(theta), np.sin(theta)
        return self.cx * c + self.cy * s + np.sqrt(
            (self.rx * c) ** 2 + (self.ry * s) ** 2)


def crisp_hausdorff(s1: Ellipse, s2: Ellipse, directions: int = 360) -> float:
    """Hausdorff distance between two convex shapes.

    Disk pairs use the exact closed form; ellipse pairs maximize the
    support-function difference over a fan of directions with golden
    section refinement around the best bracket.
    """
    if s1.is_disk and s2.is_disk:
        dc = math.hypot(s1.cx - s2.cx, s1.cy - s2.cy)
        return dc + abs(s1.rx - s2.rx)

    thetas = np.linspace(0.0, 2.0 * math.pi, directions, endpoint=False)
    diff = np.abs(s1.support(thetas) - s2.support(thetas))
    best = int(np.argmax(diff))
    step = 2.0 * math.pi / directions
    _, neg = golden_minimize(
        lambda t: -abs(float(s1.support(t) - s2.support(t))),
        thetas[best] - step, thetas[best] + step, tol=1e-12)
    return max(float(diff[best]), -neg)


@dataclass(frozen=True)
class HausdorffResult:
    """Fuzzy Hausdorff distance with the line and projections it came from."""

    value: FuzzyNumber
    line: LineSpec
    projected_a: ProjectedFuzzyNumber
    projected_b: ProjectedFuzzyNumber

    @property
    def summary(self) -> TriangularTriple:
        return self.value.summary


def fuzzy_hausdorff(a: FuzzyPoint, b: FuzzyPoint) -> HausdorffResult:
    """Fuzzy Hausdorff distance between two fuzzy points with distinct cores.

    Both points are projected onto the core-joining line; the cut at level
    alpha differences the inverse endpoints of the projections, with the
    point projecting further along the line taking the upper role.
    """
    if a.core.x == b.core.x and a.core.y == b.core.y:
        raise ValueError("fuzzy Hausdorff distance requires distinct cores")
    line = LineSpec.through_points(a.core, b.core)
    proj_a = project_onto_line(a, line)
    proj_b = project_onto_line(b, line)

    lo_side, hi_side = proj_a.value, proj_b.value
    if hi_side.summary.m < lo_side.summary.m:
        lo_side, hi_side = hi_side, lo_side

    def cut(alpha: float) -> tuple[float, float]:
        a_lo, a_hi = lo_side.cut(alpha)
        b_lo, b_hi = hi_side.cut(alpha)
        return (max(0.0, b_lo - a_hi), b_hi - a_lo)

    value = FuzzyNumber(cut)
    lo0, hi0 = cut(0.0)
    value._summary = TriangularTriple(
        lo0, hi_side.summary.m - lo_side.summary.m, hi0)
    return HausdorffResult(value=value, line=line,
                           projected_a=proj_a, projected_b=proj_b)
