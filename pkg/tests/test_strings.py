import math

import numpy as np
import pytest

from etastrings import (DomainError, SigmaGrid, TString, build_family,
                        build_string, range_points)
from conftest import ACCEL10, TRUNC3

GRID_01 = SigmaGrid(0.0, 1.0, 0.05)


class TestGridSemantics:
    def test_inclusive_counts(self):
        assert len(range_points(0.0, 1.0, 0.05)) == 21
        assert len(range_points(0.02, 0.98, 0.02)) == 49
        assert len(range_points(9.0, 10.0, 0.1)) == 11
        assert len(range_points(5.0, 5.0, 1.0)) == 1
        assert len(range_points(111.0295, 111.8746, 0.0939)) == 10
        assert len(range_points(0.4, 1.5, 0.01)) == 111

    def test_points_at_start_plus_k_step(self):
        pts = range_points(0.0, 1.0, 0.05)
        for k, p in enumerate(pts):
            assert p == 0.0 + k * 0.05

    def test_validation(self):
        with pytest.raises(DomainError):
            SigmaGrid(-0.1, 1.0, 0.05)
        with pytest.raises(DomainError):
            SigmaGrid(1.0, 0.5, 0.05)
        with pytest.raises(DomainError):
            SigmaGrid(0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            range_points(0.0, 1.0, -0.5)


class TestBuildString:
    def test_sample_count(self):
        assert len(build_string(19.0, GRID_01).samples) == 21

    def test_first_zero_grid(self):
        st = build_string(14.134725, SigmaGrid(0.02, 0.98, 0.02), ACCEL10)
        assert len(st.samples) == 49
        sigma, value = st.samples[24]
        assert sigma == 0.5
        assert abs(value) < 2e-6

    def test_real_axis_string(self):
        st = build_string(0.0, GRID_01, ACCEL10)
        assert all(abs(v.imag) < 1e-13 for _, v in st.samples)
        reals = [v.real for _, v in st.samples]
        assert all(b > a for a, b in zip(reals, reals[1:]))
        assert abs(reals[0] - 0.5) < 1e-12
        assert abs(reals[-1] - math.log(2.0)) < 1e-12

    def test_truncated_rejects_sigma_zero_with_location(self):
        with pytest.raises(DomainError, match="sigma = 0"):
            build_string(5.0, GRID_01, TRUNC3)

    def test_sigma_strictly_increasing_enforced(self):
        with pytest.raises(DomainError):
            TString(t=1.0, samples=((0.5, 1 + 0j), (0.5, 2 + 0j)))


class TestBuildFamily:
    def test_table_counts(self):
        fam = build_family(19.0, 21.0, 0.2, GRID_01)
        assert len(fam.strings) == 11
        assert all(len(s.samples) == 21 for s in fam.strings)

    def test_seven_strings(self):
        fam = build_family(22.0, 28.0, 1.0, SigmaGrid(9.0, 10.0, 0.1))
        assert len(fam.strings) == 7

    def test_degenerate_range(self):
        fam = build_family(5.0, 5.0, 1.0, GRID_01)
        assert len(fam.strings) == 1

    def test_ordered_by_t(self):
        fam = build_family(19.0, 21.0, 0.2, GRID_01)
        ts = [s.t for s in fam.strings]
        assert ts == sorted(ts)

    def test_stop_below_start_rejected(self):
        with pytest.raises(DomainError):
            build_family(21.0, 19.0, 0.2, GRID_01)

    def test_deterministic_rebuild(self):
        a = build_family(19.0, 20.0, 0.5, GRID_01)
        b = build_family(19.0, 20.0, 0.5, GRID_01)
        assert a == b


class TestStringShapeProperties:
    def test_density_higher_at_large_sigma(self):
        # chord between the two smallest-sigma samples exceeds the chord
        # between the two largest-sigma samples once strings are long
        for t in (6.0, 10.0, 20.0, 29.0):
            st = build_string(t, GRID_01)
            vals = st.values()
            first_chord = abs(vals[1] - vals[0])
            last_chord = abs(vals[-1] - vals[-2])
            assert first_chord > last_chord

    def test_arc_length_grows_with_t(self):
        from etastrings import arc_length
        lengths = [arc_length(build_string(float(t), GRID_01)) for t in range(1, 7)]
        assert all(b > a for a, b in zip(lengths, lengths[1:]))

    def test_strings_laid_down_clockwise(self):
        # angle of each string's centroid about the family centroid steps
        # clockwise with t (principal difference stays in (-pi, 0))
        for t_start, t_stop, step in ((1.0, 11.0, 1.0), (19.0, 21.0, 0.2),
                                      (24.0, 26.0, 0.2)):
            fam = build_family(t_start, t_stop, step, GRID_01)
            all_pts = np.array([[v.real, v.imag]
                                for s in fam.strings for _, v in s.samples])
            center = all_pts.mean(axis=0)
            angles = []
            for s in fam.strings:
                pts = np.array([[v.real, v.imag] for _, v in s.samples])
                c = pts.mean(axis=0)
                angles.append(math.atan2(c[1] - center[1], c[0] - center[0]))
            for a, b in zip(angles, angles[1:]):
                delta = (b - a + math.pi) % (2.0 * math.pi) - math.pi
                assert -math.pi < delta < 0.0
