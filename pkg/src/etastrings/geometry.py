"""Geometry of strings: arc length, origin approach, self-crossings, and
flare classification of string families.

Self-crossing semantics: two non-adjacent polyline segments cross when they
intersect at a single point, endpoints inclusive.  Exactly parallel pairs
never count as crossings (a collinear overlap has no single crossing
point).  With a positive gap tolerance, segment pairs at a positive
minimum distance within the tolerance are reported as near-crossings with
the gap recorded; parallel pairs can qualify.

Flare classification fits each string's windowed samples with a total
least squares line (perpendicular residuals; strings are often nearly
vertical so ordinary regression would be axis-biased) and then looks at
the family of fitted lines:

* directions clustered inside a spread threshold -> Parallel;
* otherwise, if the least-squares point of concurrency sits close to all
  lines relative to the cloud radius -> Radial with that center;
* otherwise -> Jumble.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateGeometryError, DomainError, IllConditionedError
from .eta import LN2
from .strings import SigmaGrid, StringFamily, TString

_WINDOW_SLACK = 1e-12


def arc_length(string: TString) -> float:
    """Sum of chord lengths between consecutive samples."""
    if not string.samples:
        raise DomainError("arc_length: empty string")
    vals = string.values()
    return float(sum(abs(b - a) for a, b in zip(vals, vals[1:])))


def nearest_approach(string: TString) -> tuple[float, float]:
    """(sigma, |eta|) of the sample closest to the origin.

    No interpolation between samples; ties resolve to the smaller sigma.
    """
    if not string.samples:
        raise DomainError("nearest_approach: empty string")
    best_sigma, best_dist = string.samples[0][0], abs(string.samples[0][1])
    for sigma, value in string.samples[1:]:
        d = abs(value)
        if d < best_dist:
            best_sigma, best_dist = sigma, d
    return best_sigma, best_dist


@dataclass(frozen=True)
class CrossingReport:
    point: complex
    sigma_pair: tuple[float, float]
    gap: float


def _segment_params(p1, p2, p3, p4):
    """Intersection parameters (u, v) of segments p1p2 and p3p4, or None."""
    r = p2 - p1
    q = p4 - p3
    den = r[0] * q[1] - r[1] * q[0]
    if den == 0.0:
        return None
    w = p3 - p1
    u = (w[0] * q[1] - w[1] * q[0]) / den
    v = (w[0] * r[1] - w[1] * r[0]) / den
    if 0.0 <= u <= 1.0 and 0.0 <= v <= 1.0:
        return u, v
    return None


def _segment_gap(p1, p2, p3, p4):
    """Minimum distance between two segments and the parameters attaining it."""
    best = None
    # candidate param pairs: each endpoint projected onto the other segment
    for (a, b, c, d, swap) in ((p1, p2, p3, p4, False), (p3, p4, p1, p2, True)):
        ab = b - a
        denom = float(ab @ ab)
        for pt, w in ((c, 0.0), (d, 1.0)):
            u = 0.0 if denom == 0.0 else float(np.clip((pt - a) @ ab / denom, 0.0, 1.0))
            dist = float(np.hypot(*(a + u * ab - pt)))
            pair = (w, u) if swap else (u, w)
            if best is None or dist < best[0]:
                best = (dist, pair)
    return best


def self_crossings(string: TString, gap_tolerance: float = 0.0) -> list[CrossingReport]:
    """All non-adjacent segment pairs that intersect or pass within the gap
    tolerance, with interpolated crossing point and sigma parameters.

    Pairs whose interpolated sigma parameters differ by no more than one
    grid step are discarded: those are kinks at a shared corner, not loops.
    Results are sorted by the smaller sigma parameter.
    """
    if gap_tolerance < 0.0:
        raise DomainError(f"self_crossings: gap_tolerance >= 0 required, got {gap_tolerance}")
    if len(string.samples) < 4:
        raise DomainError("self_crossings: need at least 4 samples")
    sigmas = string.sigmas()
    pts = np.array([[v.real, v.imag] for v in string.values()])
    step = min(b - a for a, b in zip(sigmas, sigmas[1:]))
    m = len(pts) - 1

    lo = np.minimum(pts[:-1], pts[1:])
    hi = np.maximum(pts[:-1], pts[1:])

    reports = []
    for i in range(m):
        for j in range(i + 2, m):
            if (lo[i, 0] > hi[j, 0] + gap_tolerance or lo[j, 0] > hi[i, 0] + gap_tolerance
                    or lo[i, 1] > hi[j, 1] + gap_tolerance or lo[j, 1] > hi[i, 1] + gap_tolerance):
                continue
            hit = _segment_params(pts[i], pts[i + 1], pts[j], pts[j + 1])
            if hit is not None:
                u, v = hit
                gap = 0.0
            elif gap_tolerance > 0.0:
                gap, (u, v) = _segment_gap(pts[i], pts[i + 1], pts[j], pts[j + 1])
                if not (0.0 < gap <= gap_tolerance):
                    continue
            else:
                continue
            s_i = sigmas[i] + u * (sigmas[i + 1] - sigmas[i])
            s_j = sigmas[j] + v * (sigmas[j + 1] - sigmas[j])
            if s_j - s_i <= step * (1.0 + 1e-9):
                continue
            pi = pts[i] + u * (pts[i + 1] - pts[i])
            pj = pts[j] + v * (pts[j + 1] - pts[j])
            mid = 0.5 * (pi + pj)
            reports.append(CrossingReport(point=complex(mid[0], mid[1]),
                                          sigma_pair=(s_i, s_j), gap=gap))
    reports.sort(key=lambda r: min(r.sigma_pair))
    return reports


def large_sigma_angle(t: float) -> float:
    """Direction, in degrees relative to (1, 0), of the n = 2 signed term:
    pi - t*ln 2 reduced to (-180, 180]."""
    angle = math.pi - t * LN2
    angle = angle - 2.0 * math.pi * math.floor(angle / (2.0 * math.pi))
    if angle > math.pi:
        angle -= 2.0 * math.pi
    return math.degrees(angle)


class FlareKind(Enum):
    PARALLEL = "Parallel"
    RADIAL = "Radial"
    JUMBLE = "Jumble"


@dataclass(frozen=True)
class FlareThresholds:
    """Classification knobs.  parallel_spread_deg bounds the direction fan
    of a Parallel family; radial_residual_ratio bounds the concurrency RMS
    residual relative to the RMS cloud radius about the fitted center."""

    parallel_spread_deg: float = 60.0
    radial_residual_ratio: float = 0.4


DEFAULT_THRESHOLDS = FlareThresholds()


@dataclass(frozen=True)
class FlareReport:
    kind: FlareKind
    spread: float                      # direction fan of fitted lines, degrees
    residual: float                    # concurrency RMS / cloud RMS radius
    direction: float | None = None     # mean direction, degrees in [0, 180)
    center: complex | None = None


def _windowed_points(string: TString, window: SigmaGrid) -> np.ndarray:
    pts = [[v.real, v.imag] for sg, v in string.samples
           if window.start - _WINDOW_SLACK <= sg <= window.stop + _WINDOW_SLACK]
    return np.array(pts)


def _tls_line(pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Total-least-squares line: (centroid, unit direction)."""
    centroid = pts.mean(axis=0)
    centered = pts - centroid
    if float(np.max(np.abs(centered))) == 0.0:
        raise DegenerateGeometryError("line fit: all points coincident")
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    return centroid, vt[0]


def _direction_spread_deg(directions: list[np.ndarray]) -> tuple[float, float]:
    """(spread, mean) of undirected line directions in degrees.

    Works on doubled angles so that d and -d are the same direction.
    """
    doubled = np.array([2.0 * math.atan2(d[1], d[0]) for d in directions])
    z = np.exp(1j * doubled)
    mean = z.mean()
    if abs(mean) == 0.0:
        return 180.0, 0.0
    dev = np.angle(z / mean)
    spread = math.degrees(float(dev.max() - dev.min())) / 2.0
    mean_dir = math.degrees(float(np.angle(mean))) / 2.0 % 180.0
    return spread, mean_dir


def _concurrency(lines: list[tuple[np.ndarray, np.ndarray]],
                 cond_limit: float = 1e10) -> tuple[np.ndarray, float]:
    """Least-squares point minimizing summed squared distance to the lines."""
    a = np.zeros((2, 2))
    b = np.zeros(2)
    for centroid, direction in lines:
        proj = np.eye(2) - np.outer(direction, direction)
        a += proj
        b += proj @ centroid
    if np.linalg.det(a) == 0.0 or np.linalg.cond(a) > cond_limit:
        raise IllConditionedError(
            "concurrency fit: lines are (nearly) parallel, no stable crossing point")
    center = np.linalg.solve(a, b)
    sq = [float((center - c) @ (np.eye(2) - np.outer(d, d)) @ (center - c))
          for c, d in lines]
    return center, math.sqrt(sum(sq) / len(sq))


def _window_fits(family: StringFamily, window: SigmaGrid):
    if len(family.strings) < 3:
        raise DomainError("flare analysis: need at least 3 strings")
    fits, clouds = [], []
    for string in family.strings:
        pts = _windowed_points(string, window)
        if len(pts) < 3:
            raise DomainError(
                f"flare analysis: window [{window.start}, {window.stop}] selects "
                f"{len(pts)} samples of the t = {string.t} string; need >= 3")
        fits.append(_tls_line(pts))
        clouds.append(pts)
    return fits, np.vstack(clouds)


def fit_center(family: StringFamily, window: SigmaGrid) -> tuple[complex, float]:
    """Least-squares concurrency point of the windowed TLS lines and the RMS
    perpendicular distance from that point to the lines."""
    fits, _ = _window_fits(family, window)
    center, rms = _concurrency(fits)
    return complex(center[0], center[1]), rms


def classify_flare(family: StringFamily, window: SigmaGrid,
                   thresholds: FlareThresholds = DEFAULT_THRESHOLDS) -> FlareReport:
    """Classify the windowed family as Parallel, Radial, or Jumble."""
    fits, cloud = _window_fits(family, window)
    spread, mean_dir = _direction_spread_deg([d for _, d in fits])
    if spread < thresholds.parallel_spread_deg:
        # residual still reported, relative to the cloud about its own centroid
        centroid = cloud.mean(axis=0)
        scale = math.sqrt(float(np.mean(np.sum((cloud - centroid) ** 2, axis=1))))
        sq = [float((centroid - c) @ (np.eye(2) - np.outer(d, d)) @ (centroid - c))
              for c, d in fits]
        ratio = math.sqrt(sum(sq) / len(sq)) / scale if scale > 0.0 else 0.0
        return FlareReport(kind=FlareKind.PARALLEL, spread=spread,
                           residual=ratio, direction=mean_dir)
    try:
        center, rms = _concurrency(fits)
    except IllConditionedError:
        return FlareReport(kind=FlareKind.JUMBLE, spread=spread, residual=math.inf)
    scale = math.sqrt(float(np.mean(np.sum((cloud - center) ** 2, axis=1))))
    ratio = rms / scale if scale > 0.0 else 0.0
    if ratio < thresholds.radial_residual_ratio:
        return FlareReport(kind=FlareKind.RADIAL, spread=spread, residual=ratio,
                           center=complex(center[0], center[1]))
    return FlareReport(kind=FlareKind.JUMBLE, spread=spread, residual=ratio)
