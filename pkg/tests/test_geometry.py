import math

import numpy as np
import pytest

from etastrings import (DegenerateGeometryError, DomainError, FlareKind,
                        FlareThresholds, IllConditionedError, SigmaGrid,
                        StringFamily, TString, arc_length, build_family,
                        build_string, classify_flare, fit_center,
                        large_sigma_angle, nearest_approach, self_crossings)
from conftest import ACCEL10

GRID_01 = SigmaGrid(0.0, 1.0, 0.05)


def polyline(points) -> TString:
    """Synthetic string with sigma = 0, 1, 2, ... over given xy points."""
    return TString(t=0.0, samples=tuple(
        (float(i), complex(x, y)) for i, (x, y) in enumerate(points)))


def oracle_crossings(string: TString, gap_tolerance: float = 0.0):
    """Independent all-pairs reference for self_crossings.

    Orientation-test based: segments AB and CD intersect (endpoints
    inclusive) iff the endpoints of each straddle the other's carrier line.
    Exactly parallel pairs never count as crossings but may appear as
    near-misses; interpolated sigma parameters within one grid step are
    excluded; results sorted by segment indices.
    """
    sigmas = string.sigmas()
    pts = [(v.real, v.imag) for v in string.values()]
    step = min(b - a for a, b in zip(sigmas, sigmas[1:]))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def seg_min_distance(a, b, c, d):
        """(distance, param on ab, param on cd) of the closest approach."""
        def project(p, u, v):
            ux, uy = v[0] - u[0], v[1] - u[1]
            den = ux * ux + uy * uy
            w = 0.0 if den == 0.0 else max(0.0, min(1.0, ((p[0] - u[0]) * ux + (p[1] - u[1]) * uy) / den))
            return w, math.hypot(u[0] + w * ux - p[0], u[1] + w * uy - p[1])
        candidates = []
        for p, wp in ((c, 0.0), (d, 1.0)):
            w, dist = project(p, a, b)
            candidates.append((dist, w, wp))
        for p, wp in ((a, 0.0), (b, 1.0)):
            w, dist = project(p, c, d)
            candidates.append((dist, wp, w))
        best = candidates[0]
        for cand in candidates[1:]:   # first strict minimum, matching production
            if cand[0] < best[0]:
                best = cand
        return best

    found = []
    m = len(pts) - 1
    for i in range(m):
        for j in range(i + 2, m):
            a, b, c, d = pts[i], pts[i + 1], pts[j], pts[j + 1]
            d1, d2 = cross(c, d, a), cross(c, d, b)
            d3, d4 = cross(a, b, c), cross(a, b, d)
            denom = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
            touching = (d1 * d2 <= 0.0 and d3 * d4 <= 0.0)
            if denom != 0.0 and touching:
                u = d3 / (d3 - d4) if d3 != d4 else 0.0
                # parameter along AB from the symmetric formula
                u_ab = d1 / (d1 - d2) if d1 != d2 else 0.0
                s_i = sigmas[i] + u_ab * (sigmas[i + 1] - sigmas[i])
                s_j = sigmas[j] + u * (sigmas[j + 1] - sigmas[j])
                if s_j - s_i <= step * (1.0 + 1e-9):
                    continue
                found.append(((i, j), s_i, s_j, 0.0))
            elif gap_tolerance > 0.0:
                gap, u_ab, v_cd = seg_min_distance(a, b, c, d)
                if 0.0 < gap <= gap_tolerance:
                    s_i = sigmas[i] + u_ab * (sigmas[i + 1] - sigmas[i])
                    s_j = sigmas[j] + v_cd * (sigmas[j + 1] - sigmas[j])
                    if s_j - s_i <= step * (1.0 + 1e-9):
                        continue
                    found.append(((i, j), s_i, s_j, gap))
    found.sort(key=lambda item: item[0])
    return found


class TestArcLength:
    def test_real_axis_compression(self):
        st = build_string(0.0, GRID_01, ACCEL10)
        assert abs(arc_length(st) - (math.log(2.0) - 0.5)) < 1e-9

    def test_single_sample(self):
        assert arc_length(polyline([(3.0, 4.0)])) == 0.0

    def test_unit_square_hand_value(self):
        assert arc_length(polyline([(0, 0), (1, 0), (1, 1), (0, 1)])) == 3.0


class TestNearestApproach:
    def test_first_zero_string(self):
        st = build_string(14.134725, SigmaGrid(0.02, 0.98, 0.02), ACCEL10)
        sigma, dist = nearest_approach(st)
        assert sigma == 0.5
        assert dist < 2e-6

    def test_conversion_zero_string_minimizes_at_sigma_one(self):
        st = build_string(9.0647, GRID_01, ACCEL10)
        sigma, _ = nearest_approach(st)
        assert sigma == 1.0

    def test_short_string_stays_far(self):
        _, dist = nearest_approach(build_string(1.0, GRID_01, ACCEL10))
        assert dist > 0.4

    def test_tie_breaks_to_smaller_sigma(self):
        st = TString(t=0.0, samples=((0.0, 1 + 0j), (1.0, -1 + 0j), (2.0, 2 + 0j)))
        sigma, dist = nearest_approach(st)
        assert sigma == 0.0 and dist == 1.0

    def test_bound_by_every_sample(self):
        for t in (5.0, 21.0, 67.0):
            st = build_string(t, GRID_01)
            _, dist = nearest_approach(st)
            assert all(dist <= abs(v) for v in st.values())


class TestSelfCrossings:
    def test_straight_polylines_have_none(self):
        st = polyline([(i, 2.0 * i) for i in range(10)])
        assert self_crossings(st) == []

    def test_figure_eight(self):
        st = polyline([(0, 0), (1, 1), (1, 0), (0, 1)])
        hits = self_crossings(st)
        assert len(hits) == 1
        assert abs(hits[0].point - complex(0.5, 0.5)) < 1e-12
        assert hits[0].gap == 0.0
        s_lo, s_hi = hits[0].sigma_pair
        assert s_lo == pytest.approx(0.5) and s_hi == pytest.approx(2.5)

    def test_loop_string_has_exactly_one(self):
        st = build_string(357.612, SigmaGrid(0.4, 1.5, 0.01), ACCEL10)
        hits = self_crossings(st)
        assert len(hits) == 1
        assert abs(hits[0].point - complex(0.861215, 0.186958)) < 1e-3
        assert abs(hits[0].sigma_pair[0] - 0.4934) < 1e-3
        assert abs(hits[0].sigma_pair[1] - 1.2592) < 1e-3

    def test_kink_at_coincident_samples_filtered(self):
        # consecutive equal values make the corner touch its neighbour
        # exactly one grid step away; that contact is not a loop
        st = TString(t=0.0, samples=((0.0, 0 + 0j), (1.0, 1 + 0j),
                                     (2.0, 1 + 0j), (3.0, -1j)))
        assert self_crossings(st) == []

    def test_gap_tolerance_near_miss(self):
        # the vertex at (0.5, 0.01) passes 0.01 above segment 0; both
        # segments meeting at that vertex report the approach
        st = polyline([(0, 0), (2, 0), (2, 1), (0.5, 0.01), (-1, 1)])
        assert self_crossings(st, gap_tolerance=0.0) == []
        hits = self_crossings(st, gap_tolerance=0.05)
        assert len(hits) == 2
        assert all(0.0 < h.gap <= 0.011 for h in hits)
        assert self_crossings(st, gap_tolerance=0.005) == []

    def test_needs_four_samples(self):
        with pytest.raises(DomainError):
            self_crossings(polyline([(0, 0), (1, 1), (2, 0)]))

    def test_against_brute_force_oracle_random(self):
        rng = np.random.default_rng(20240817)
        for case in range(200):
            n_pts = int(rng.integers(4, 31))
            if case % 3 == 0:
                pts = rng.integers(0, 6, size=(n_pts, 2)).astype(float)
            else:
                steps = rng.normal(size=(n_pts, 2))
                pts = np.cumsum(steps, axis=0)
            # collapse accidental duplicate consecutive points
            keep = [0]
            for i in range(1, n_pts):
                if not np.array_equal(pts[i], pts[keep[-1]]):
                    keep.append(i)
            if len(keep) < 4:
                continue
            st = polyline(pts[keep])
            tol = float(rng.choice([0.0, 0.0, 0.3]))
            got = self_crossings(st, gap_tolerance=tol)
            want = oracle_crossings(st, gap_tolerance=tol)
            assert len(got) == len(want), f"case {case}: {len(got)} vs {len(want)}"
            got_all = sorted((r.sigma_pair[0], r.sigma_pair[1], r.gap) for r in got)
            want_all = sorted((w[1], w[2], w[3]) for w in want)
            for (a, b, g1), (c, d, g2) in zip(got_all, want_all):
                assert abs(a - c) < 1e-9 and abs(b - d) < 1e-9, f"case {case}"
                assert abs(g1 - g2) < 1e-9, f"case {case}"


class TestLargeSigmaAngle:
    def test_quoted_angle(self):
        assert abs(large_sigma_angle(22.0) - 26.283023) < 1e-5

    def test_t_zero_points_backwards(self):
        assert large_sigma_angle(0.0) == 180.0

    def test_phase_wrap_zero(self):
        assert abs(large_sigma_angle(math.pi / math.log(2.0))) < 1e-9

    def test_range(self):
        for t in np.linspace(0.0, 500.0, 101):
            a = large_sigma_angle(float(t))
            assert -180.0 < a <= 180.0

    def test_consistent_with_endpoint_directions(self):
        # endpoint-to-(1,0) direction deviates from the two-term angle by
        # roughly the relative size of the third term, (3/2)**-sigma
        for t in (22.0, 25.0, 67.3):
            predicted = math.radians(large_sigma_angle(t))
            for sigma in (9.0, 10.0, 12.0, 15.0):
                v = build_string(t, SigmaGrid(sigma, sigma, 1.0), ACCEL10).values()[0]
                actual = math.atan2(v.imag, v.real - 1.0)
                diff = abs(math.remainder(actual - predicted, 2.0 * math.pi))
                assert diff < 1.5 ** -sigma, (t, sigma, diff)


def synthetic_family(lines, n_samples=9, span=2.0) -> StringFamily:
    """Family whose strings lie exactly on given (point, angle) lines."""
    strings = []
    for (px, py), ang in lines:
        ux, uy = math.cos(ang), math.sin(ang)
        samples = tuple((float(i), complex(px + ux * (i - n_samples // 2) * span / n_samples,
                                           py + uy * (i - n_samples // 2) * span / n_samples))
                        for i in range(n_samples))
        strings.append(TString(t=float(len(strings)), samples=samples))
    grid = SigmaGrid(0.0, float(n_samples - 1), 1.0)
    return StringFamily(strings=tuple(strings), grid=grid, t_start=0.0,
                        t_stop=float(len(strings) - 1), t_step=1.0)


def family_window(fam: StringFamily) -> SigmaGrid:
    return fam.grid


class TestFlareClassification:
    def test_concurrent_lines_are_radial(self):
        fam = synthetic_family([((2.0, 3.0), a) for a in (0.1, 1.3, 2.2)])
        rep = classify_flare(fam, family_window(fam))
        assert rep.kind is FlareKind.RADIAL
        assert abs(rep.center - complex(2.0, 3.0)) < 1e-9
        assert rep.residual < 1e-9

    def test_parallel_lines(self):
        fam = synthetic_family([((0.0, y), 0.4) for y in (0.0, 1.0, 2.0)])
        rep = classify_flare(fam, family_window(fam))
        assert rep.kind is FlareKind.PARALLEL
        assert rep.spread < 1e-9
        assert abs(rep.direction - math.degrees(0.4)) < 1e-6

    def test_scattered_lines_are_jumble(self):
        rng = np.random.default_rng(7)
        lines = [((float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5))),
                  float(rng.uniform(0, math.pi))) for _ in range(8)]
        fam = synthetic_family(lines)
        rep = classify_flare(fam, family_window(fam),
                             FlareThresholds(parallel_spread_deg=20.0,
                                             radial_residual_ratio=0.05))
        assert rep.kind is FlareKind.JUMBLE

    def test_invariant_under_reordering_and_scaling(self):
        lines = [((2.0, 3.0), a) for a in (0.1, 1.3, 2.2, 0.7)]
        fam = synthetic_family(lines)
        rep = classify_flare(fam, family_window(fam))
        reordered = StringFamily(strings=tuple(reversed(fam.strings)), grid=fam.grid,
                                 t_start=fam.t_start, t_stop=fam.t_stop, t_step=fam.t_step)
        rep2 = classify_flare(reordered, family_window(fam))
        assert rep2.kind is rep.kind
        assert abs(rep2.spread - rep.spread) < 1e-9
        scaled = StringFamily(strings=tuple(
            TString(t=s.t, samples=tuple((sg, 3.7 * v) for sg, v in s.samples))
            for s in fam.strings), grid=fam.grid, t_start=fam.t_start,
            t_stop=fam.t_stop, t_step=fam.t_step)
        rep3 = classify_flare(scaled, family_window(fam))
        assert rep3.kind is rep.kind
        assert abs(rep3.center - 3.7 * rep.center) < 1e-8
        assert abs(rep3.residual - rep.residual) < 1e-9

    def test_degenerate_family(self):
        fam = synthetic_family([((1.0, 1.0), 0.3)] * 3, span=0.0)
        with pytest.raises(DegenerateGeometryError):
            classify_flare(fam, family_window(fam))

    def test_preconditions(self):
        fam = synthetic_family([((2.0, 3.0), a) for a in (0.1, 1.3)])
        with pytest.raises(DomainError):
            classify_flare(fam, family_window(fam))
        fam3 = synthetic_family([((2.0, 3.0), a) for a in (0.1, 1.3, 2.0)])
        with pytest.raises(DomainError):
            classify_flare(fam3, SigmaGrid(0.0, 1.0, 1.0))   # 2 samples in window


class TestFitCenter:
    def test_exact_concurrency(self):
        fam = synthetic_family([((2.0, 3.0), a) for a in (0.3, 1.5, 2.6)])
        center, residual = fit_center(fam, family_window(fam))
        assert abs(center - complex(2.0, 3.0)) < 1e-9
        assert residual < 1e-9

    def test_parallel_lines_ill_conditioned(self):
        fam = synthetic_family([((0.0, y), 0.9) for y in (0.0, 1.0, 2.0)])
        with pytest.raises(IllConditionedError):
            fit_center(fam, family_window(fam))

    def test_computed_family_center(self):
        fam = build_family(21.0, 23.0, 0.2, GRID_01)
        center, _ = fit_center(fam, SigmaGrid(0.5, 1.0, 0.05))
        assert abs(center - complex(1.5, 0.5)) < 0.5
