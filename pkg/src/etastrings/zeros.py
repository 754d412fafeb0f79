"""Zero location: scan |eta| along the critical and sigma = 1 lines, refine
minima by bracketed golden-section search, and classify the results.

Zeros are detected as local minima of |eta| on a t grid rather than through
sign changes of a rotated real function; at desk scale (t up to a few
hundred) the minima are sharp and isolated, and a grid step of 0.1 samples
every zero's dip well below the detection threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import ClassificationError, DomainError, NoZeroInBracketError
from .eta import DEFAULT_SPEC, LN2, TWO_PI, PrecisionSpec, eta

# refined minima with |eta| above this are discarded as non-zeros
RESIDUAL_TOLERANCE = 1e-6

# |t - 2*pi*k/ln 2| below this identifies a conversion-zero candidate
TRIVIAL_MATCH_TOLERANCE = 1e-3

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class ZeroKind(Enum):
    NON_TRIVIAL = "NonTrivial"
    TRIVIAL_ETA = "TrivialEta"


@dataclass(frozen=True)
class ZeroRecord:
    t: float
    kind: ZeroKind
    sigma: float
    residual: float
    k: int | None = None


@dataclass(frozen=True)
class ScanConfig:
    t_min: float
    t_max: float
    step: float = 0.1
    detect_threshold: float = 0.25
    refine_tolerance: float = 1e-9
    spec: PrecisionSpec = field(default_factory=lambda: DEFAULT_SPEC)

    def __post_init__(self) -> None:
        if self.t_max <= self.t_min:
            raise DomainError(f"ScanConfig: t_max > t_min required, got [{self.t_min}, {self.t_max}]")
        if self.step <= 0.0 or self.detect_threshold <= 0.0 or self.refine_tolerance <= 0.0:
            raise DomainError("ScanConfig: step, detect_threshold, refine_tolerance must be > 0")
        if self.t_min <= 100.0 and self.step > 0.5:
            raise DomainError(
                f"ScanConfig: step <= 0.5 required for ranges touching t <= 100, got {self.step}")


def _golden_minimize(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Golden-section minimum of f on [a, b]; robust on V-shaped dips."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def refine_zero(t_lo: float, t_hi: float, sigma: float, config: ScanConfig) -> ZeroRecord:
    """Locate the t minimizing |eta(sigma + t i)| inside [t_lo, t_hi].

    The bracket is contracted well past config.refine_tolerance (to ~1e-12,
    floored by double spacing at t) so the recorded residual reflects the
    evaluator floor rather than bracketing error.
    """
    if t_hi <= t_lo:
        raise DomainError(f"refine_zero: empty bracket [{t_lo}, {t_hi}]")
    f = lambda t: abs(eta(complex(sigma, t), config.spec))
    tol = min(config.refine_tolerance, 1e-12)
    tol = max(tol, 8.0 * math.ulp(max(abs(t_lo), abs(t_hi), 1.0)))
    t_star, residual = _golden_minimize(f, t_lo, t_hi, tol)
    if residual >= config.detect_threshold:
        raise NoZeroInBracketError(
            f"refine_zero: minimum |eta| = {residual:.3g} over [{t_lo}, {t_hi}] "
            f"is above detect_threshold = {config.detect_threshold}")
    span = t_hi - t_lo
    if min(t_star - t_lo, t_hi - t_star) < 2.0 * tol and span > 16.0 * tol:
        raise NoZeroInBracketError(
            f"refine_zero: minimum sits on the bracket edge at t = {t_star}")
    kind = ZeroKind.NON_TRIVIAL if abs(sigma - 0.5) < 0.25 else ZeroKind.TRIVIAL_ETA
    return ZeroRecord(t=t_star, kind=kind, sigma=sigma, residual=residual)


def classify_zero(record: ZeroRecord, spec: PrecisionSpec | None = None,
                  tolerance: float = RESIDUAL_TOLERANCE) -> ZeroRecord:
    """Final classification of a refined record.

    A record whose t matches 2*pi*k/ln 2 within the matching tolerance and
    whose sigma = 1 residual is small is a conversion zero (TrivialEta, with
    that k); otherwise it is a critical-line zero provided the sigma = 0.5
    residual is small.  If both residuals are large the record is not a zero.
    """
    spec = spec or DEFAULT_SPEC
    k = int(round(record.t * LN2 / TWO_PI))
    if k >= 1 and abs(record.t - TWO_PI * k / LN2) < TRIVIAL_MATCH_TOLERANCE:
        residual_1 = abs(eta(complex(1.0, record.t), spec))
        if residual_1 < tolerance:
            return replace(record, kind=ZeroKind.TRIVIAL_ETA, sigma=1.0,
                           residual=residual_1, k=k)
    residual_05 = abs(eta(complex(0.5, record.t), spec))
    if residual_05 < tolerance:
        return replace(record, kind=ZeroKind.NON_TRIVIAL, sigma=0.5,
                       residual=residual_05, k=None)
    raise ClassificationError(
        f"classify_zero: t = {record.t} has residuals {residual_05:.3g} (sigma 0.5) "
        f"and |eta(1+ti)| above tolerance {tolerance}; not a zero of either kind")


def _row_minima(ts: list[float], values: list[float], config: ScanConfig) -> list[int]:
    """Indices of interior local minima below the detection threshold,
    with runs of nearby candidates merged to the smallest sample."""
    candidates = [i for i in range(1, len(values) - 1)
                  if values[i] < values[i - 1] and values[i] <= values[i + 1]
                  and values[i] < config.detect_threshold]
    merged: list[int] = []
    for i in candidates:
        if merged and ts[i] - ts[merged[-1]] <= config.step * (1.0 + 1e-9):
            if values[i] < values[merged[-1]]:
                merged[-1] = i
        else:
            merged.append(i)
    return merged


def scan_zeros(config: ScanConfig) -> list[ZeroRecord]:
    """Scan [t_min, t_max] on both the sigma = 0.5 and sigma = 1 rows,
    refine every detected dip, and return classified records sorted by t."""
    count = int((config.t_max - config.t_min) / config.step + 1e-9) + 1
    ts = [config.t_min + i * config.step for i in range(count)]
    records: list[ZeroRecord] = []
    for sigma in (0.5, 1.0):
        values = [abs(eta(complex(sigma, t), config.spec)) for t in ts]
        for i in _row_minima(ts, values, config):
            try:
                refined = refine_zero(ts[i - 1], ts[i + 1], sigma, config)
            except NoZeroInBracketError:
                continue
            if refined.residual >= RESIDUAL_TOLERANCE:
                continue
            try:
                records.append(classify_zero(refined, config.spec))
            except ClassificationError:
                continue
    records.sort(key=lambda r: r.t)
    deduped: list[ZeroRecord] = []
    for rec in records:
        if deduped and rec.kind is deduped[-1].kind and abs(rec.t - deduped[-1].t) < config.step:
            if rec.residual < deduped[-1].residual:
                deduped[-1] = rec
            continue
        deduped.append(rec)
    return deduped


def verify_modified_reflection(record: ZeroRecord,
                               spec: PrecisionSpec | None = None) -> float:
    """|eta((1 - sigma) + t i)| at the record's point: the reflected partner
    with the same imaginary part.  Near machine zero for critical-line
    records (sigma reflects onto itself); recorded as data otherwise."""
    spec = spec or DEFAULT_SPEC
    return abs(eta(complex(1.0 - record.sigma, record.t), spec))
