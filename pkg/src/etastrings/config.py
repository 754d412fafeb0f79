"""Configuration resolution: command-line flags > ZSTR_* environment
variables > key=value config file > built-in defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DomainError
from .eta import PrecisionSpec, Strategy

ENV_PREFIX = "ZSTR_"

_DEFAULTS = {
    "precision": "6",
    "strategy": "accelerated",
    "compensated_phase": "false",
    "cache_dir": "",
}

_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


def parse_config_file(path: str) -> dict[str, str]:
    """Read simple key=value lines; '#' starts a comment; blanks ignored."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _parse_bool(word: str, origin: str) -> bool:
    low = word.strip().lower()
    if low in _TRUE_WORDS:
        return True
    if low in _FALSE_WORDS:
        return False
    raise DomainError(f"{origin}: expected a boolean, got {word!r}")


@dataclass(frozen=True)
class Settings:
    precision: float
    strategy: Strategy
    compensated_phase: bool
    cache_dir: str | None

    def spec(self) -> PrecisionSpec:
        return PrecisionSpec(p=self.precision, strategy=self.strategy,
                             compensated_phase=self.compensated_phase)


def resolve_settings(flag_precision: float | None = None,
                     flag_strategy: str | None = None,
                     flag_compensated: bool | None = None,
                     flag_cache_dir: str | None = None,
                     config_path: str | None = None,
                     environ: dict[str, str] | None = None) -> Settings:
    env = os.environ if environ is None else environ

    layered = dict(_DEFAULTS)
    path = config_path or env.get(ENV_PREFIX + "CONFIG")
    if path:
        file_values = parse_config_file(path)
        unknown = set(file_values) - set(_DEFAULTS)
        if unknown:
            raise DomainError(f"{path}: unknown keys {sorted(unknown)}")
        layered.update(file_values)
    for key in _DEFAULTS:
        env_val = env.get(ENV_PREFIX + key.upper())
        if env_val is not None:
            layered[key] = env_val

    precision = flag_precision if flag_precision is not None else float(layered["precision"])
    strategy_word = flag_strategy if flag_strategy is not None else layered["strategy"]
    try:
        strategy = Strategy(strategy_word.strip().lower())
    except ValueError:
        raise DomainError(f"strategy: expected truncated|accelerated, got {strategy_word!r}")
    compensated = (flag_compensated if flag_compensated is not None
                   else _parse_bool(layered["compensated_phase"], "compensated_phase"))
    cache_dir = flag_cache_dir if flag_cache_dir is not None else (layered["cache_dir"] or None)
    if precision <= 0:
        raise DomainError(f"precision: must be positive, got {precision}")
    return Settings(precision=precision, strategy=strategy,
                    compensated_phase=compensated, cache_dir=cache_dir)
