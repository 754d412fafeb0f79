"""Construction of strings: eta sampled along a sigma grid at fixed t.

Grids follow inclusive Table-style semantics: points sit at start + k*step
and the endpoint is included up to a relative slack of 1e-9 steps, so that
e.g. start 0, stop 1, step 0.05 yields exactly 21 points despite binary
rounding of the step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .eta import DEFAULT_SPEC, PrecisionSpec, eta

_ENDPOINT_SLACK = 1e-9


def range_points(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic progression start, start+step, ..., ~stop."""
    if step <= 0.0:
        raise DomainError(f"range_points: step > 0 required, got {step}")
    if stop < start:
        raise DomainError(f"range_points: stop >= start required, got [{start}, {stop}]")
    count = int((stop - start) / step + _ENDPOINT_SLACK) + 1
    return [start + k * step for k in range(count)]


@dataclass(frozen=True)
class SigmaGrid:
    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.start < 0.0:
            raise DomainError(f"SigmaGrid: start >= 0 required, got {self.start}")
        if self.stop < self.start:
            raise DomainError(f"SigmaGrid: stop >= start required, got {self.stop}")
        if self.step <= 0.0:
            raise DomainError(f"SigmaGrid: step > 0 required, got {self.step}")

    def points(self) -> list[float]:
        return range_points(self.start, self.stop, self.step)

    def __len__(self) -> int:
        return len(self.points())


@dataclass(frozen=True)
class TString:
    """One string: eta values sampled at strictly increasing sigma, fixed t."""

    t: float
    samples: tuple[tuple[float, complex], ...]

    def __post_init__(self) -> None:
        sigmas = [sg for sg, _ in self.samples]
        if any(b <= a for a, b in zip(sigmas, sigmas[1:])):
            raise DomainError("TString: sigma values must be strictly increasing")

    def sigmas(self) -> list[float]:
        return [sg for sg, _ in self.samples]

    def values(self) -> list[complex]:
        return [v for _, v in self.samples]


@dataclass(frozen=True)
class StringFamily:
    strings: tuple[TString, ...]
    grid: SigmaGrid
    t_start: float
    t_stop: float
    t_step: float


def build_string(t: float, grid: SigmaGrid, spec: PrecisionSpec = DEFAULT_SPEC) -> TString:
    """Evaluate eta on every grid point at this t."""
    samples = []
    for sigma in grid.points():
        try:
            samples.append((sigma, eta(complex(sigma, t), spec)))
        except DomainError as exc:
            raise DomainError(f"build_string: at sigma = {sigma}, t = {t}: {exc}") from exc
    return TString(t=t, samples=tuple(samples))


def build_family(t_start: float, t_stop: float, t_step: float,
                 grid: SigmaGrid, spec: PrecisionSpec = DEFAULT_SPEC) -> StringFamily:
    """One string per t in the inclusive progression t_start .. t_stop."""
    if t_stop < t_start:
        raise DomainError(f"build_family: t_stop >= t_start required, got [{t_start}, {t_stop}]")
    strings = tuple(build_string(t, grid, spec)
                    for t in range_points(t_start, t_stop, t_step))
    return StringFamily(strings=strings, grid=grid,
                        t_start=t_start, t_stop=t_stop, t_step=t_step)
