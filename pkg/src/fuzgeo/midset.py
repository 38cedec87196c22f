"""Fuzzy equidistant sets (midsets) of two circular fuzzy points.

Per alpha level the midset is the zero set of a signed residual.  With
d_i the distance from the query point to core i and c_i = r_i * (1 - alpha)
the cut radius, the inverse-points branch solves

    (d1 - c1) - (d2 - c2) = 0        (hyperbolic type, the accepted set)

and the same-points branch solves

    (d1 - c1) - (c2 - d2) = 0        (elliptic type).

Both reduce to two-focus conics d1 -+ d2 = k with foci at the cores, so
analytic coefficients of the general second-degree equation are available
by double squaring; the squaring introduces a conjugate locus which a sign
filter removes from sampled output.  Which branches are active at a level
follows from the overlap configuration of the two cut disks.

Focal sets are restricted to circular spreads; elliptical spreads would
need a direction-dependent cut radius and are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .core import FuzzyPoint, Point2

DEFAULT_RESOLUTION = 512
_ZERO_TOL = 1e-9


class Branch(Enum):
    INVERSE = "inverse_points"
    SAME = "same_points"


class OverlapCase(Enum):
    NON_OVERLAPPING = "non_overlapping"
    EXTERNALLY_TANGENT = "externally_tangent"
    PARTIALLY_OVERLAPPING = "partially_overlapping"
    INTERNALLY_TANGENT = "internally_tangent"
    FULLY_OVERLAPPING = "fully_overlapping"
    CONCENTRIC = "concentric"


_ACTIVE_BRANCHES = {
    OverlapCase.NON_OVERLAPPING: (Branch.INVERSE,),
    OverlapCase.EXTERNALLY_TANGENT: (Branch.INVERSE,),
    OverlapCase.PARTIALLY_OVERLAPPING: (Branch.INVERSE, Branch.SAME),
    OverlapCase.INTERNALLY_TANGENT: (Branch.INVERSE, Branch.SAME),
    OverlapCase.FULLY_OVERLAPPING: (Branch.SAME,),
    OverlapCase.CONCENTRIC: (Branch.SAME,),
}


def _require_circular(p: FuzzyPoint, name: str) -> float:
    if not p.is_circular:
        raise ValueError(f"midset focal point {name} must have a circular spread")
    return p.radius


def _pair_radii(a: FuzzyPoint, b: FuzzyPoint) -> tuple[float, float, float]:
    r1 = _require_circular(a, "A")
    r2 = _require_circular(b, "B")
    dc = a.core.distance_to(b.core)
    return r1, r2, dc


def branch_residual(q: Point2, a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                    branch: Branch) -> float:
    r1, r2, _ = _pair_radii(a, b)
    u = 1.0 - alpha
    d1 = q.distance_to(a.core)
    d2 = q.distance_to(b.core)
    if branch is Branch.INVERSE:
        return (d1 - r1 * u) - (d2 - r2 * u)
    return (d1 - r1 * u) - (r2 * u - d2)


def _residual_field(a: FuzzyPoint, b: FuzzyPoint, alpha: float, branch: Branch,
                    X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    r1, r2, _ = _pair_radii(a, b)
    u = 1.0 - alpha
    d1 = np.hypot(X - a.core.x, Y - a.core.y)
    d2 = np.hypot(X - b.core.x, Y - b.core.y)
    if branch is Branch.INVERSE:
        return d1 - d2 - (r1 - r2) * u
    return d1 + d2 - (r1 + r2) * u


def overlap_case(a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                 tol: float = _ZERO_TOL) -> OverlapCase:
    """Relative position of the two alpha-cut disks, tangencies within tol."""
    r1, r2, dc = _pair_radii(a, b)
    u = 1.0 - alpha
    if dc <= tol:
        return OverlapCase.CONCENTRIC
    sum_r = (r1 + r2) * u
    diff_r = abs(r1 - r2) * u
    if abs(dc - sum_r) <= tol:
        return OverlapCase.EXTERNALLY_TANGENT
    if dc > sum_r:
        return OverlapCase.NON_OVERLAPPING
    if abs(dc - diff_r) <= tol:
        return OverlapCase.INTERNALLY_TANGENT
    if dc < diff_r:
        return OverlapCase.FULLY_OVERLAPPING
    return OverlapCase.PARTIALLY_OVERLAPPING


def active_branches(case: OverlapCase) -> tuple[Branch, ...]:
    return _ACTIVE_BRANCHES[case]


@dataclass(frozen=True)
class Thresholds:
    """Alpha levels at which the cut disks change overlap regime.

    n2 == n is the separation threshold; n1 the full-overlap threshold.
    None means the regime never occurs (or, for concentric cores, that the
    configuration is the same at all levels).
    """

    n: Optional[float]
    n1: Optional[float]
    n2: Optional[float]


def alpha_thresholds(a: FuzzyPoint, b: FuzzyPoint) -> Thresholds:
    r1, r2, dc = _pair_radii(a, b)
    if dc == 0.0:
        return Thresholds(n=None, n1=None, n2=None)
    n = min(1.0, max(0.0, 1.0 - dc / (r1 + r2)))
    n1 = None
    if r1 != r2:
        n1 = min(1.0, max(0.0, 1.0 - dc / abs(r1 - r2)))
    return Thresholds(n=n, n1=n1, n2=n)


@dataclass(frozen=True)
class ConicCoefficients:
    """General second-degree curve A x^2 + 2H xy + B y^2 + 2G x + 2F y + C = 0."""

    A: float
    H: float
    B: float
    G: float
    F: float
    C: float

    @property
    def Delta(self) -> float:
        return (self.A * self.B * self.C + 2 * self.F * self.G * self.H
                - self.A * self.F ** 2 - self.B * self.G ** 2 - self.C * self.H ** 2)

    @property
    def delta(self) -> float:
        return self.A * self.B - self.H ** 2

    def normalized(self) -> "ConicCoefficients":
        coeffs = (self.A, self.H, self.B, self.G, self.F, self.C)
        pivot = max(coeffs, key=abs)
        if pivot == 0.0:
            return self
        return ConicCoefficients(*(v / pivot for v in coeffs))

    def evaluate(self, x, y):
        return (self.A * x * x + 2 * self.H * x * y + self.B * y * y
                + 2 * self.G * x + 2 * self.F * y + self.C)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.A, self.H, self.B, self.G, self.F, self.C)


def conic_coefficients(a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                       branch: Branch) -> ConicCoefficients:
    """Analytic conic of a midset branch, by double squaring of d1 -+ d2 = k.

    The equal-radii inverse branch degenerates to the perpendicular
    bisector and is returned directly as line coefficients.
    """
    r1, r2, _ = _pair_radii(a, b)
    u = 1.0 - alpha
    k = (r1 - r2) * u if branch is Branch.INVERSE else (r1 + r2) * u

    a1, a2 = a.core.x, a.core.y
    b1, b2 = b.core.x, b.core.y
    # linear form d1^2 - d2^2 = l1 x + l2 y + l0
    l1 = 2.0 * (b1 - a1)
    l2 = 2.0 * (b2 - a2)
    l0 = (a1 * a1 + a2 * a2) - (b1 * b1 + b2 * b2)

    if branch is Branch.INVERSE and abs(k) <= 1e-12:
        return ConicCoefficients(0.0, 0.0, 0.0, l1 / 2.0, l2 / 2.0, l0).normalized()

    k2 = k * k
    coeffs = ConicCoefficients(
        A=l1 * l1 - 4.0 * k2,
        H=l1 * l2,
        B=l2 * l2 - 4.0 * k2,
        G=l1 * (l0 - k2) + 4.0 * k2 * b1,
        F=l2 * (l0 - k2) + 4.0 * k2 * b2,
        C=(l0 - k2) ** 2 - 4.0 * k2 * (b1 * b1 + b2 * b2),
    )
    return coeffs.normalized()


def classify_conic(c: ConicCoefficients, tol: float = _ZERO_TOL) -> str:
    """Tag by the discriminants of the normalized coefficients."""
    c = c.normalized()
    if all(v == 0.0 for v in c.as_tuple()):
        return "degenerate"
    if abs(c.Delta) <= tol:
        return "line" if abs(c.delta) <= tol else "degenerate"
    if c.delta > tol:
        return "ellipse"
    if c.delta < -tol:
        return "hyperbola"
    return "degenerate"


def support_bbox(a: FuzzyPoint, b: FuzzyPoint,
                 inflate: float = 0.5) -> tuple[float, float, float, float]:
    """Union of the two support boxes, inflated about its center."""
    xmin = min(a.core.x - a.spread.p1, b.core.x - b.spread.p1)
    xmax = max(a.core.x + a.spread.p1, b.core.x + b.spread.p1)
    ymin = min(a.core.y - a.spread.p2, b.core.y - b.spread.p2)
    ymax = max(a.core.y + a.spread.p2, b.core.y + b.spread.p2)
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    hx = 0.5 * (xmax - xmin) * (1.0 + inflate)
    hy = 0.5 * (ymax - ymin) * (1.0 + inflate)
    half = max(hx, hy, 1e-6)
    return (cx - half, cy - half, cx + half, cy + half)


# marching-squares segment table: corner bits BL=1, BR=2, TR=4, TL=8;
# edges 0=bottom, 1=right, 2=top, 3=left; cases 5/10 resolved by center sign
_MS_TABLE = {
    0: [], 15: [],
    1: [(0, 3)], 14: [(0, 3)],
    2: [(0, 1)], 13: [(0, 1)],
    3: [(3, 1)], 12: [(3, 1)],
    4: [(1, 2)], 11: [(1, 2)],
    6: [(0, 2)], 9: [(0, 2)],
    7: [(2, 3)], 8: [(2, 3)],
}


def _edge_crossing(edge: int, ix: int, iy: int, xs, ys, F) -> tuple[float, float]:
    if edge == 0:
        pa = (xs[ix], ys[iy]); va = F[iy, ix]
        pb = (xs[ix + 1], ys[iy]); vb = F[iy, ix + 1]
    elif edge == 1:
        pa = (xs[ix + 1], ys[iy]); va = F[iy, ix + 1]
        pb = (xs[ix + 1], ys[iy + 1]); vb = F[iy + 1, ix + 1]
    elif edge == 2:
        pa = (xs[ix], ys[iy + 1]); va = F[iy + 1, ix]
        pb = (xs[ix + 1], ys[iy + 1]); vb = F[iy + 1, ix + 1]
    else:
        pa = (xs[ix], ys[iy]); va = F[iy, ix]
        pb = (xs[ix], ys[iy + 1]); vb = F[iy + 1, ix]
    denom = va - vb
    t = 0.5 if denom == 0.0 else min(1.0, max(0.0, va / denom))
    return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))


def _marching_squares(F: np.ndarray, xs: np.ndarray, ys: np.ndarray,
                      center_fn) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Zero-contour segments of the sampled field F[iy, ix]."""
    pos = F > 0.0
    mixed = (pos[:-1, :-1] != pos[:-1, 1:]) | (pos[:-1, :-1] != pos[1:, 1:]) \
        | (pos[:-1, :-1] != pos[1:, :-1])
    segments = []
    for iy, ix in np.argwhere(mixed):
        idx = (int(pos[iy, ix]) | (int(pos[iy, ix + 1]) << 1)
               | (int(pos[iy + 1, ix + 1]) << 2) | (int(pos[iy + 1, ix]) << 3))
        if idx in (5, 10):
            cx = 0.5 * (xs[ix] + xs[ix + 1])
            cy = 0.5 * (ys[iy] + ys[iy + 1])
            center_pos = center_fn(cx, cy) > 0.0
            if idx == 5:
                pairs = [(0, 1), (2, 3)] if center_pos else [(0, 3), (1, 2)]
            else:
                pairs = [(0, 3), (1, 2)] if center_pos else [(0, 1), (2, 3)]
        else:
            pairs = _MS_TABLE[idx]
        for e1, e2 in pairs:
            p1 = _edge_crossing(e1, ix, iy, xs, ys, F)
            p2 = _edge_crossing(e2, ix, iy, xs, ys, F)
            segments.append((p1, p2))
    return segments


def _refine_point(x: float, y: float, a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                  branch: Branch, steps: int = 3, tol: float = 1e-10):
    """Newton steps along the residual gradient toward the zero level."""
    r1, r2, _ = _pair_radii(a, b)
    u = 1.0 - alpha
    sign = -1.0 if branch is Branch.INVERSE else 1.0
    offset = (r1 - r2) * u if branch is Branch.INVERSE else (r1 + r2) * u
    for _ in range(steps):
        d1 = math.hypot(x - a.core.x, y - a.core.y)
        d2 = math.hypot(x - b.core.x, y - b.core.y)
        if d1 < 1e-12 or d2 < 1e-12:
            break
        f = d1 + sign * d2 - offset
        if abs(f) <= tol:
            break
        gx = (x - a.core.x) / d1 + sign * (x - b.core.x) / d2
        gy = (y - a.core.y) / d1 + sign * (y - b.core.y) / d2
        norm2 = gx * gx + gy * gy
        if norm2 < 1e-18:
            break
        x -= f * gx / norm2
        y -= f * gy / norm2
    return x, y


def _chain_segments(segments, cell: float) -> list[np.ndarray]:
    """Stitch unordered segments into polylines by endpoint matching."""
    if not segments:
        return []
    eps = cell * 1e-3

    def key(p):
        return (round(p[0] / eps), round(p[1] / eps))

    adjacency: dict = {}
    for i, (p1, p2) in enumerate(segments):
        adjacency.setdefault(key(p1), []).append((i, p1, p2))
        adjacency.setdefault(key(p2), []).append((i, p2, p1))

    used = [False] * len(segments)
    polylines = []

    def walk(start_entry):
        i, p_from, p_to = start_entry
        used[i] = True
        pts = [p_from, p_to]
        while True:
            nxt = None
            for entry in adjacency.get(key(pts[-1]), []):
                if not used[entry[0]]:
                    nxt = entry
                    break
            if nxt is None:
                return pts
            used[nxt[0]] = True
            pts.append(nxt[2])

    # open chains first (endpoints of degree 1), then leftover loops
    for start_key in sorted(adjacency):
        entries = adjacency[start_key]
        if len(entries) == 1 and not used[entries[0][0]]:
            polylines.append(np.array(walk(entries[0])))
    for i, seg in enumerate(segments):
        if not used[i]:
            polylines.append(np.array(walk((i, seg[0], seg[1]))))
    return polylines


def sample_branch(a: FuzzyPoint, b: FuzzyPoint, alpha: float, branch: Branch,
                  bbox: Optional[tuple] = None,
                  resolution: int = DEFAULT_RESOLUTION) -> list[np.ndarray]:
    """Polylines of one branch's zero set inside the bounding box.

    Contour vertices are refined onto the residual zero level and then
    sign-filtered so no conjugate-locus point survives.
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    if bbox is None:
        bbox = support_bbox(a, b)
    xmin, ymin, xmax, ymax = bbox
    if not (xmax > xmin and ymax > ymin):
        raise ValueError(f"empty bounding box {bbox}")
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    X, Y = np.meshgrid(xs, ys)
    F = _residual_field(a, b, alpha, branch, X, Y)

    def center_fn(cx, cy):
        return branch_residual(Point2(cx, cy), a, b, alpha, branch)

    segments = _marching_squares(F, xs, ys, center_fn)
    r1, r2, _ = _pair_radii(a, b)
    u = 1.0 - alpha
    refined = []
    for p1, p2 in segments:
        q1 = _refine_point(*p1, a, b, alpha, branch)
        q2 = _refine_point(*p2, a, b, alpha, branch)
        if branch is Branch.INVERSE:
            keep = True
            for (x, y) in (q1, q2):
                d1 = math.hypot(x - a.core.x, y - a.core.y)
                d2 = math.hypot(x - b.core.x, y - b.core.y)
                if (d1 - d2) * (r1 - r2) * u < -_ZERO_TOL:
                    keep = False
            if not keep:
                continue
        refined.append((q1, q2))
    cell = max((xmax - xmin), (ymax - ymin)) / (resolution - 1)
    return _chain_segments(refined, cell)


def sample_midset(a: FuzzyPoint, b: FuzzyPoint, alpha: float,
                  bbox: Optional[tuple] = None,
                  resolution: int = DEFAULT_RESOLUTION) -> dict[Branch, list[np.ndarray]]:
    """Polylines per branch active at this level."""
    case = overlap_case(a, b, alpha)
    return {
        branch: sample_branch(a, b, alpha, branch, bbox, resolution)
        for branch in active_branches(case)
    }


@dataclass(frozen=True)
class MidsetEntry:
    alpha: float
    branch: Branch
    polylines: tuple
    conic: ConicCoefficients
    conic_class: str
    accepted: bool


@dataclass(frozen=True)
class MidsetResult:
    entries: tuple
    case_at_support: OverlapCase
    thresholds: Thresholds
    bbox: tuple
    resolution: int


def compute_midset(a: FuzzyPoint, b: FuzzyPoint,
                   alphas: Optional[Sequence[float]] = None,
                   bbox: Optional[tuple] = None,
                   resolution: int = DEFAULT_RESOLUTION) -> MidsetResult:
    """Sampled midset across alpha levels with analytic conic tags.

    The inverse-points branch is the accepted equidistant set whenever it
    is active; the same-points branch is reported alongside it in the
    overlapping regimes.
    """
    if alphas is None:
        alphas = np.linspace(0.0, 1.0, 11)
    if bbox is None:
        bbox = support_bbox(a, b)
    entries = []
    for alpha in sorted(float(x) for x in alphas):
        case = overlap_case(a, b, alpha)
        for branch in active_branches(case):
            polylines = sample_branch(a, b, alpha, branch, bbox, resolution)
            conic = conic_coefficients(a, b, alpha, branch)
            entries.append(MidsetEntry(
                alpha=alpha, branch=branch, polylines=tuple(polylines),
                conic=conic, conic_class=classify_conic(conic),
                accepted=branch is Branch.INVERSE))
    return MidsetResult(
        entries=tuple(entries),
        case_at_support=overlap_case(a, b, 0.0),
        thresholds=alpha_thresholds(a, b),
        bbox=tuple(bbox),
        resolution=resolution)


def equidistant_membership(q: Point2, a: FuzzyPoint, b: FuzzyPoint,
                           levels: int = 101, tol: float = 1e-10) -> float:
    """Grade of a point in the fuzzy equidistant set.

    The residual of each branch is scanned over the alpha grid from the
    top; a bracketing sign change is refined by bisection and the root
    counts when its branch is active at that level.  Residuals here are
    linear in alpha, so the first root found from the top is the supremum.
    """
    best = 0.0
    alphas = np.linspace(0.0, 1.0, levels)
    for branch in (Branch.INVERSE, Branch.SAME):
        vals = [branch_residual(q, a, b, float(al), branch) for al in alphas]
        for i in range(levels - 1, -1, -1):
            al = float(alphas[i])
            if abs(vals[i]) <= 1e-12:
                if branch in active_branches(overlap_case(a, b, al)):
                    best = max(best, al)
                    break
            if i + 1 < levels and vals[i] * vals[i + 1] < 0.0:
                lo_a, hi_a = al, float(alphas[i + 1])
                f_lo = vals[i]
                while hi_a - lo_a > tol:
                    mid = 0.5 * (lo_a + hi_a)
                    f_mid = branch_residual(q, a, b, mid, branch)
                    if f_mid == 0.0 or (f_lo < 0) == (f_mid < 0):
                        lo_a, f_lo = mid, f_mid
                    else:
                        hi_a = mid
                root = 0.5 * (lo_a + hi_a)
                if branch in active_branches(overlap_case(a, b, root)):
                    best = max(best, root)
                    break
    return best


@dataclass
class InvarianceReport:
    """Zero-set comparison of the distance form and the closeness form.

    A disagreement is a grid point where one residual is clearly zero
    (inside tol) while the other, scaled by the exact derivative factor of
    x -> t/(t+x), is clearly nonzero (outside 2*tol); the in-between band
    absorbs floating-point rounding without hiding a genuine mismatch.
    """

    checked: int = 0
    disagreements: int = 0
    pole_points: int = 0

    @property
    def passed(self) -> bool:
        return self.disagreements == 0


def invariance_check(a: FuzzyPoint, b: FuzzyPoint,
                     t_values: Sequence[float],
                     bbox: Optional[tuple] = None,
                     resolution: int = DEFAULT_RESOLUTION,
                     alphas: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0),
                     tol: float = 1e-9) -> InvarianceReport:
    """Compare the equidistance zero sets under both metric formulations."""
    for t in t_values:
        if t <= 0:
            raise ValueError(f"scale t must be positive, got {t}")
    r1, r2, _ = _pair_radii(a, b)
    if bbox is None:
        bbox = support_bbox(a, b)
    xmin, ymin, xmax, ymax = bbox
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    X, Y = np.meshgrid(xs, ys)
    d1 = np.hypot(X - a.core.x, Y - a.core.y)
    d2 = np.hypot(X - b.core.x, Y - b.core.y)

    report = InvarianceReport()
    for alpha in alphas:
        u = 1.0 - float(alpha)
        case = overlap_case(a, b, float(alpha))
        for branch in active_branches(case):
            fa = d1 - r1 * u
            fb = (d2 - r2 * u) if branch is Branch.INVERSE else -(d2 - r2 * u)
            res_d = fa - fb
            for t in t_values:
                with np.errstate(divide="ignore", invalid="ignore"):
                    res_m = t / (t + fa) - t / (t + fb)
                    scale = np.abs((t + fa) * (t + fb)) / t
                poles = ~np.isfinite(res_m) | (scale == 0.0)
                res_m_scaled = np.where(poles, np.inf, np.abs(res_m) * scale)
                abs_d = np.abs(res_d)
                zero_d = abs_d <= tol
                zero_m = res_m_scaled <= tol
                clear_nonzero_d = abs_d >= 2.0 * tol
                clear_nonzero_m = res_m_scaled >= 2.0 * tol
                disagree = (zero_d & clear_nonzero_m) | (zero_m & clear_nonzero_d)
                disagree &= ~poles
                report.checked += int(res_d.size)
                report.disagreements += int(np.count_nonzero(disagree))
                report.pole_points += int(np.count_nonzero(poles))
    return report
