"""Named figure presets: canned (t values, sigma grid, strategy) recipes
behind the render-figure command.  Presets using the truncated strategy
demonstrate how far the calibrated term count carries the raw series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .eta import PrecisionSpec, Strategy
from .strings import SigmaGrid, TString, build_string, range_points


@dataclass(frozen=True)
class FigurePreset:
    number: int
    t_values: tuple[float, ...]
    grid: SigmaGrid
    description: str
    strategy: Strategy = Strategy.ACCELERATED
    p: float = 6.0


def _spread(start: float, stop: float, step: float) -> tuple[float, ...]:
    return tuple(range_points(start, stop, step))


_T_111 = _spread(111.0295, 111.8746, 0.0939)
_T_357 = _spread(357.151, 357.952, 0.089)
_T_22_28 = _spread(22.0, 28.0, 1.0)

_PRESETS: dict[int, FigurePreset] = {}


def _add(number, t_values, grid, description, strategy=Strategy.ACCELERATED, p=6.0):
    _PRESETS[number] = FigurePreset(number=number, t_values=tuple(t_values),
                                    grid=grid, description=description,
                                    strategy=strategy, p=p)


_add(1, _spread(19, 21, 0.2), SigmaGrid(0.0, 1.0, 0.05),
     "eleven strings for t in [19, 21]")
_add(2, (21.022039639,), SigmaGrid(0.0, 1.0, 0.05),
     "single string through the origin near t = 21.022")
_add(3, _spread(1, 14, 1), SigmaGrid(0.02, 0.98, 0.02),
     "first fourteen integer-t strings")
_add(4, (14.0, 14.134725), SigmaGrid(0.02, 0.98, 0.02),
     "t = 14 next to the first origin crossing")
_add(6, _spread(21, 23, 0.2), SigmaGrid(0.0, 1.0, 0.05),
     "strings organized around (1.5, 0.5)")
_add(7, _spread(24, 26, 0.2), SigmaGrid(0.0, 1.0, 0.05),
     "two apparent organizing centers, zero near t = 25")
_add(8, _spread(55, 56.4, 0.2), SigmaGrid(0.0, 1.0, 0.05),
     "tight center of rotation")
_add(9, _T_22_28, SigmaGrid(9.0, 10.0, 0.1),
     "large-sigma strings pointing at (1, 0)")
_add(10, _T_22_28, SigmaGrid(19.0, 20.0, 0.1),
     "same pattern three orders of magnitude smaller")
_add(11, _T_22_28, SigmaGrid(1.5, 4.0, 0.1),
     "curvature onset outside the critical strip")
_add(12, _T_22_28, SigmaGrid(0.5, 1.5, 0.1),
     "crossing the strip boundary")
_add(13, _T_22_28, SigmaGrid(1.0, 2.0, 0.1),
     "overlap view joining the previous two")
_add(14, _T_22_28, SigmaGrid(0.0, 4.0, 0.1),
     "composite of the sigma segments")
_add(15, _T_111, SigmaGrid(4.0, 7.0, 0.02),
     "narrow-fan flare between two consecutive zeros")
_add(16, _T_111, SigmaGrid(1.5, 4.0, 0.02),
     "the fan turns toward the strip")
_add(17, _T_111, SigmaGrid(0.4, 1.5, 0.01),
     "conversion to circulation inside the strip")
_add(18, _T_111, SigmaGrid(4.0, 7.0, 0.01),
     "truncated-series rendering of preset 15", Strategy.TRUNCATED, 3.0)
_add(19, _T_111, SigmaGrid(1.5, 4.0, 0.01),
     "truncated-series rendering of preset 16", Strategy.TRUNCATED, 3.0)
_add(20, _T_111, SigmaGrid(0.5, 1.5, 0.01),
     "truncated-series rendering inside the strip (sigma >= 0.5 keeps the "
     "term count at 2e6)", Strategy.TRUNCATED, 3.0)
_add(21, _T_111, SigmaGrid(0.0, 0.5, 0.01),
     "small-sigma tails dominate the scale")
_add(22, _T_111, SigmaGrid(0.0, 0.7, 0.01),
     "overlap of the two small-sigma views")
_add(23, _T_357, SigmaGrid(4.0, 7.0, 0.02),
     "narrow fan headed away from the origin")
_add(24, _T_357, SigmaGrid(4.0, 7.0, 0.01),
     "truncated-series rendering of preset 23", Strategy.TRUNCATED, 3.0)
_add(25, _T_357, SigmaGrid(1.5, 4.0, 0.01),
     "abrupt U-turn toward the origin")
_add(26, _T_357, SigmaGrid(1.5, 4.0, 0.01),
     "truncated-series rendering of preset 25", Strategy.TRUNCATED, 3.0)
_add(27, _T_357, SigmaGrid(0.4, 1.5, 0.01),
     "U-turns and a small loop inside the strip")
_add(28, _T_357, SigmaGrid(0.5, 1.5, 0.01),
     "truncated-series rendering of preset 27", Strategy.TRUNCATED, 3.0)
_add(29, (357.596,), SigmaGrid(0.4, 1.5, 0.01),
     "magnified U-turn")
_add(30, (357.612,), SigmaGrid(0.4, 1.5, 0.01),
     "single string with one self-crossing loop")
_add(31, _T_357, SigmaGrid(0.0, 0.7, 0.01),
     "end-of-strip view, outermost strings through the origin")


def available_figures() -> list[int]:
    return sorted(_PRESETS)


def get_preset(number: int) -> FigurePreset:
    if number not in _PRESETS:
        raise DomainError(
            f"render-figure: no preset {number}; available: {available_figures()}")
    return _PRESETS[number]


def build_figure(number: int, compensated_phase: bool = False) -> list[TString]:
    preset = get_preset(number)
    spec = PrecisionSpec(p=preset.p, strategy=preset.strategy,
                         compensated_phase=compensated_phase)
    return [build_string(t, preset.grid, spec) for t in preset.t_values]
