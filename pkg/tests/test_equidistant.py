import math

import numpy as np
import pytest

import fuzgeo as fg
from fuzgeo import Branch, OverlapCase

# the six configurations of the overlap-case table, one per row
TABLE_CONFIGS = {
    "non_overlapping": ((0, 0, 1), (5, 0, 2)),
    "externally_tangent": ((0, 0, 1), (3, 0, 2)),
    "partially_overlapping": ((0, 0, 1), (2, 0, 2)),
    "internally_tangent": ((0, 0, 1), (2, 0, 3)),
    "fully_overlapping": ((0, 0, 2), (1, 0, 4)),
    "concentric": ((0, 0, 1), (0, 0, 2)),
}


def make_pair(config):
    (x1, y1, r1), (x2, y2, r2) = config
    return fg.FuzzyPoint.circular(x1, y1, r1), fg.FuzzyPoint.circular(x2, y2, r2)


def reference_hyperbola_residual(x, y, alpha):
    # the (0,0,r=1)/(5,0,r=2) midset: (2x-5)^2/u^2 - 4y^2/(25-u^2) = 1
    u = 1.0 - alpha
    return (2 * x - 5) ** 2 / u ** 2 - 4 * y ** 2 / (25 - u ** 2) - 1.0


class TestBranchResidual:
    def test_equal_spreads_bisector(self, ex41_pair):
        a, b = ex41_pair
        for alpha in (0.0, 0.3, 0.9):
            res = fg.branch_residual(fg.Point2(2.5, 1.0), a, b, alpha, Branch.INVERSE)
            assert res == pytest.approx(0.0, abs=1e-12)

    def test_axis_solution(self, ex42_pair):
        a, b = ex42_pair
        assert fg.branch_residual(fg.Point2(2, 0), a, b, 0.0, Branch.INVERSE) \
            == pytest.approx(0.0, abs=1e-12)

    def test_conjugate_point_not_zero(self, ex42_pair):
        # (3,0) solves the conjugate equation, not the midset
        a, b = ex42_pair
        assert fg.branch_residual(fg.Point2(3, 0), a, b, 0.0, Branch.INVERSE) \
            == pytest.approx(2.0, abs=1e-12)

    def test_elliptical_focal_points_rejected(self):
        a = fg.FuzzyPoint.elliptical(0, 0, 1, 2)
        b = fg.FuzzyPoint.circular(5, 0, 1)
        with pytest.raises(ValueError):
            fg.branch_residual(fg.Point2(2, 0), a, b, 0.0, Branch.INVERSE)


class TestConicCoefficients:
    def test_reference_hyperbola_at_support(self, ex42_pair):
        conic = fg.conic_coefficients(*ex42_pair, alpha=0.0, branch=Branch.INVERSE)
        # (x-2.5)^2/0.25 - y^2/6 = 1 expanded and normalized the same way
        reference = fg.ConicCoefficients(4.0, 0.0, -1.0 / 6.0, -10.0, 0.0, 24.0)
        expected = reference.normalized()
        for got, want in zip(conic.as_tuple(), expected.as_tuple()):
            assert got == pytest.approx(want, abs=1e-9)

    def test_general_alpha_matches_reference_form(self, ex42_pair):
        a, b = ex42_pair
        rng = np.random.default_rng(7)
        for alpha in (0.0, 0.3, 0.6):
            conic = fg.conic_coefficients(a, b, alpha, Branch.INVERSE)
            for _ in range(50):
                x, y = rng.uniform(-2, 7), rng.uniform(-5, 5)
                mine = conic.evaluate(x, y)
                # zero sets agree: evaluate the reference form at this conic's zeros
                if abs(mine) < 1e-9:
                    assert reference_hyperbola_residual(x, y, alpha) \
                        == pytest.approx(0.0, abs=1e-6)
            # stronger: proportionality of the two quadratic forms on a grid
            pts = rng.uniform(-3, 8, size=(20, 2))
            mine_vals = np.array([conic.evaluate(px, py) for px, py in pts])
            ref_vals = np.array([reference_hyperbola_residual(px, py, alpha)
                                   for px, py in pts])
            ratio = mine_vals / ref_vals
            assert np.allclose(ratio, ratio[0], rtol=1e-9)

    def test_equal_radii_gives_line(self, ex41_pair):
        conic = fg.conic_coefficients(*ex41_pair, alpha=0.4, branch=Branch.INVERSE)
        assert fg.classify_conic(conic) == "line"
        # the line is x = 2.5
        assert conic.A == conic.H == conic.B == 0.0
        assert -conic.C / (2 * conic.G) == pytest.approx(2.5, abs=1e-12)


class TestClassifyConic:
    def test_line_for_equal_spreads(self, ex41_pair):
        for alpha in (0.0, 0.5, 1.0):
            conic = fg.conic_coefficients(*ex41_pair, alpha=alpha,
                                          branch=Branch.INVERSE)
            assert fg.classify_conic(conic) == "line"

    def test_hyperbola_at_support(self, ex42_pair):
        conic = fg.conic_coefficients(*ex42_pair, alpha=0.0, branch=Branch.INVERSE)
        assert fg.classify_conic(conic) == "hyperbola"

    def test_concentric_same_branch_is_circle(self):
        a, b = make_pair(TABLE_CONFIGS["concentric"])
        conic = fg.conic_coefficients(a, b, 0.25, Branch.SAME)
        assert fg.classify_conic(conic) == "ellipse"

    def test_same_branch_ellipse_when_overlapping(self):
        a, b = make_pair(TABLE_CONFIGS["partially_overlapping"])
        conic = fg.conic_coefficients(a, b, 0.0, Branch.SAME)
        assert fg.classify_conic(conic) == "ellipse"


class TestOverlapCase:
    def test_example_42_always_separate(self, ex42_pair):
        for alpha in (0.0, 0.5, 1.0):
            assert fg.overlap_case(*ex42_pair, alpha=alpha) \
                == OverlapCase.NON_OVERLAPPING

    def test_full_overlap_condition(self):
        a, b = make_pair(TABLE_CONFIGS["fully_overlapping"])
        assert fg.overlap_case(a, b, 0.0) == OverlapCase.FULLY_OVERLAPPING

    def test_concentric_for_all_alpha(self):
        a, b = make_pair(TABLE_CONFIGS["concentric"])
        for alpha in np.linspace(0, 1, 7):
            assert fg.overlap_case(a, b, float(alpha)) == OverlapCase.CONCENTRIC

    def test_tangencies_detected(self):
        a, b = make_pair(TABLE_CONFIGS["externally_tangent"])
        assert fg.overlap_case(a, b, 0.0) == OverlapCase.EXTERNALLY_TANGENT
        a, b = make_pair(TABLE_CONFIGS["internally_tangent"])
        assert fg.overlap_case(a, b, 0.0) == OverlapCase.INTERNALLY_TANGENT


class TestAlphaThresholds:
    def test_example_42_clamps_to_zero(self, ex42_pair):
        th = fg.alpha_thresholds(*ex42_pair)
        assert th.n == 0.0
        assert th.n2 == 0.0
        # scan oracle: never overlapping
        for alpha in np.linspace(0, 1, 21):
            assert fg.overlap_case(*ex42_pair, alpha=float(alpha)) \
                == OverlapCase.NON_OVERLAPPING

    def test_reference_fully_overlapping_thresholds(self):
        a, b = make_pair(TABLE_CONFIGS["fully_overlapping"])
        th = fg.alpha_thresholds(a, b)
        assert th.n1 == pytest.approx(0.5, abs=1e-9)
        assert th.n2 == pytest.approx(5.0 / 6.0, abs=1e-9)
        # scan oracle: regimes switch exactly at the thresholds
        for alpha, case in ((0.25, OverlapCase.FULLY_OVERLAPPING),
                            (0.6, OverlapCase.PARTIALLY_OVERLAPPING),
                            (0.95, OverlapCase.NON_OVERLAPPING)):
            assert fg.overlap_case(a, b, alpha) == case

    def test_concentric_has_no_thresholds(self):
        a, b = make_pair(TABLE_CONFIGS["concentric"])
        th = fg.alpha_thresholds(a, b)
        assert th.n is None and th.n1 is None and th.n2 is None


class TestSampleMidset:
    def test_bisector_line(self, ex41_pair):
        a, b = ex41_pair
        cell = 7.0 / 127
        for alpha in (0.0, 0.3, 1.0):
            polys = fg.sample_midset(a, b, alpha, bbox=(-1, -4, 6, 4),
                                     resolution=128)
            pts = np.vstack(polys[Branch.INVERSE])
            assert len(pts) > 50
            assert np.max(np.abs(pts[:, 0] - 2.5)) < 2 * cell

    def test_hyperbola_residuals_after_refinement(self, ex42_pair):
        a, b = ex42_pair
        for alpha in (0.0, 0.3, 0.6):
            polys = fg.sample_midset(a, b, alpha, bbox=(-1, -4, 6, 4),
                                     resolution=256)
            pts = np.vstack(polys[Branch.INVERSE])
            assert len(pts) > 40
            ref_res = reference_hyperbola_residual(pts[:, 0], pts[:, 1], alpha)
            assert np.max(np.abs(ref_res)) < 1e-2
            own_res = [abs(fg.branch_residual(fg.Point2(x, y), a, b, alpha,
                                              Branch.INVERSE))
                       for x, y in pts]
            assert max(own_res) < 1e-8

    def test_same_branch_empty_for_disjoint(self, ex42_pair):
        out = fg.sample_branch(*ex42_pair, alpha=0.0, branch=Branch.SAME,
                               bbox=(-1, -4, 6, 4), resolution=64)
        assert out == []

    def test_branch_filter_soundness(self, ex42_pair):
        # no emitted inverse point satisfies the conjugate equation unless
        # it is degenerate (d1 = d2 and c1 = c2)
        a, b = ex42_pair
        polys = fg.sample_midset(a, b, 0.0, bbox=(-1, -4, 6, 4), resolution=128)
        for pts in polys[Branch.INVERSE]:
            for x, y in pts:
                d1 = math.hypot(x - a.core.x, y - a.core.y)
                d2 = math.hypot(x - b.core.x, y - b.core.y)
                conjugate = (d1 - d2) + (a.radius - b.radius)
                assert abs(conjugate) > 1e-3

    def test_fully_overlapping_has_only_same_branch(self):
        a, b = make_pair(TABLE_CONFIGS["fully_overlapping"])
        polys = fg.sample_midset(a, b, 0.0, resolution=128)
        assert set(polys) == {Branch.SAME}
        pts = np.vstack(polys[Branch.SAME])
        # the same-points locus is the ellipse d1 + d2 = 6
        d1 = np.hypot(pts[:, 0] - 0, pts[:, 1] - 0)
        d2 = np.hypot(pts[:, 0] - 1, pts[:, 1] - 0)
        assert np.max(np.abs(d1 + d2 - 6.0)) < 1e-8

    def test_resolution_guard(self, ex41_pair):
        with pytest.raises(ValueError):
            fg.sample_branch(*ex41_pair, alpha=0.0, branch=Branch.INVERSE,
                             resolution=8)


class TestComputeMidset:
    def test_entries_sorted_and_tagged(self, ex42_pair):
        result = fg.compute_midset(*ex42_pair, alphas=(0.5, 0.0, 1.0),
                                   resolution=64)
        alphas = [e.alpha for e in result.entries]
        assert alphas == sorted(alphas)
        assert result.case_at_support == OverlapCase.NON_OVERLAPPING
        for entry in result.entries:
            assert entry.accepted == (entry.branch is Branch.INVERSE)

    def test_accepted_is_always_inverse(self):
        a, b = make_pair(TABLE_CONFIGS["partially_overlapping"])
        result = fg.compute_midset(a, b, alphas=np.linspace(0, 1, 5),
                                   resolution=64)
        for entry in result.entries:
            if entry.accepted:
                assert entry.branch is Branch.INVERSE

    def test_classes_match_table_prediction(self):
        a, b = make_pair(TABLE_CONFIGS["fully_overlapping"])
        result = fg.compute_midset(a, b, alphas=(0.25, 0.6, 0.95),
                                   resolution=64)
        classes = {(e.alpha, e.branch): e.conic_class for e in result.entries}
        assert classes[(0.25, Branch.SAME)] == "ellipse"
        assert classes[(0.6, Branch.SAME)] == "ellipse"
        assert classes[(0.6, Branch.INVERSE)] == "hyperbola"
        assert classes[(0.95, Branch.INVERSE)] == "hyperbola"
        assert (0.95, Branch.SAME) not in classes


class TestEquidistantMembership:
    def test_bisector_point_full_grade(self, ex41_pair):
        assert fg.equidistant_membership(fg.Point2(2.5, 0), *ex41_pair) == 1.0

    def test_axis_vertex_half_grade(self, ex42_pair):
        assert fg.equidistant_membership(fg.Point2(2.25, 0), *ex42_pair) \
            == pytest.approx(0.5, abs=1e-9)

    def test_never_equidistant_point(self, ex42_pair):
        assert fg.equidistant_membership(fg.Point2(0, 0), *ex42_pair) == 0.0

    def test_closed_form_oracle_on_axis(self, ex42_pair):
        # on the segment between the supports the inverse residual is
        # (2p - 5) + u, so the grade is alpha = 1 - (5 - 2p)
        a, b = ex42_pair
        for p in (2.1, 2.3, 2.45):
            expected = 1.0 - (5.0 - 2.0 * p)
            assert fg.equidistant_membership(fg.Point2(p, 0), a, b) \
                == pytest.approx(expected, abs=1e-9)

    def test_superlevel_sets_match_midsets(self, ex42_pair):
        a, b = ex42_pair
        for alpha in (0.2, 0.5, 0.8):
            polys = fg.sample_midset(a, b, alpha, bbox=(-1, -4, 6, 4),
                                     resolution=64)
            pts = np.vstack(polys[Branch.INVERSE])
            for x, y in pts[::5]:
                grade = fg.equidistant_membership(fg.Point2(x, y), a, b)
                assert grade >= alpha - 1e-6

    def test_grade_matches_linear_root_on_grid(self, ex42_pair):
        # both directions of the superlevel equivalence: the inverse
        # residual is linear in u, so the grade has the closed form
        # alpha = 1 - (d1 - d2)/(r1 - r2) clipped to [0, 1]
        a, b = ex42_pair
        for x in np.linspace(-1, 6, 9):
            for y in np.linspace(-3, 3, 7):
                q = fg.Point2(float(x), float(y))
                d1 = q.distance_to(a.core)
                d2 = q.distance_to(b.core)
                u_root = (d1 - d2) / (a.radius - b.radius)
                expected = 1.0 - u_root if 0.0 <= u_root <= 1.0 else 0.0
                assert fg.equidistant_membership(q, a, b) == pytest.approx(
                    expected, abs=1e-8)


class TestInvariance:
    def test_examples_agree(self, ex41_pair, ex42_pair):
        for pair in (ex41_pair, ex42_pair):
            report = fg.invariance_check(*pair, t_values=(0.5, 1.0, 10.0),
                                         resolution=128)
            assert report.passed
            assert report.checked > 0

    def test_random_configs_agree(self, rng):
        for _ in range(5):
            a = fg.FuzzyPoint.circular(*rng.uniform(-3, 3, size=2),
                                       rng.uniform(0.5, 2))
            b = fg.FuzzyPoint.circular(*rng.uniform(-3, 3, size=2),
                                       rng.uniform(0.5, 2))
            if a.core.distance_to(b.core) < 1e-6:
                continue
            report = fg.invariance_check(a, b, t_values=(0.5, 1.0, 10.0),
                                         resolution=96)
            assert report.passed

    def test_nonpositive_t_rejected(self, ex41_pair):
        with pytest.raises(ValueError):
            fg.invariance_check(*ex41_pair, t_values=(0.0,))
