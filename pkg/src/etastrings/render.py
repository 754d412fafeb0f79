"""Serialization of strings: delimited text, SVG, and raster figures.

CSV format is pinned for byte-determinism: header ``t,sigma,re,im``, rows
ordered by (t ascending, sigma ascending), every float printed with 12
significant digits, '.' decimal separator, '\\n' line endings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DomainError
from .strings import TString


class OutputFormat(Enum):
    CSV = "csv"
    SVG = "svg"


@dataclass(frozen=True)
class RenderSpec:
    format: OutputFormat = OutputFormat.CSV
    width: int = 800
    height: int = 600
    equal_axes: bool = True
    dot_radius: float = 2.0
    subtract_one: bool = False

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise DomainError("RenderSpec: width and height must be positive")
        if self.dot_radius <= 0:
            raise DomainError("RenderSpec: dot_radius must be positive")


def fmt12(x: float) -> str:
    """12 significant digits, shortest form."""
    return f"{float(x):.12g}"


def strings_to_csv(strings: Iterable[TString]) -> str:
    lines = ["t,sigma,re,im"]
    for string in strings:
        for sigma, value in string.samples:
            lines.append(",".join((fmt12(string.t), fmt12(sigma),
                                   fmt12(value.real), fmt12(value.imag))))
    return "\n".join(lines) + "\n"


_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _data_bounds(strings: Sequence[TString], subtract_one: bool):
    shift = 1.0 if subtract_one else 0.0
    xs = [v.real - shift for s in strings for _, v in s.samples]
    ys = [v.imag for s in strings for _, v in s.samples]
    if not xs:
        raise DomainError("render: no samples to draw")
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 == 0.0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 - y0 == 0.0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    return x0, x1, y0, y1


def strings_to_svg(strings: Sequence[TString], spec: RenderSpec) -> str:
    """SVG 1.1 document with one group per string: a polyline plus one dot
    per sample (dots keep the sample-density variation visible).

    With equal_axes the unit length is identical on both axes, so apparent
    slopes are faithful to the data.
    """
    x0, x1, y0, y1 = _data_bounds(strings, spec.subtract_one)
    margin = 0.05 * max(x1 - x0, y1 - y0)
    x0, x1, y0, y1 = x0 - margin, x1 + margin, y0 - margin, y1 + margin
    sx = spec.width / (x1 - x0)
    sy = spec.height / (y1 - y0)
    if spec.equal_axes:
        sx = sy = min(sx, sy)
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    shift = 1.0 if spec.subtract_one else 0.0

    def to_px(value: complex) -> tuple[float, float]:
        # SVG y axis points down
        px = spec.width / 2.0 + (value.real - shift - cx) * sx
        py = spec.height / 2.0 - (value.imag - cy) * sy
        return px, py

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    # origin axes (of the possibly shifted frame) when they fall in view
    axis_x = spec.width / 2.0 + (0.0 - cx) * sx
    axis_y = spec.height / 2.0 - (0.0 - cy) * sy
    if x0 <= 0.0 <= x1:
        parts.append(f'<line x1="{axis_x:.3f}" y1="0" x2="{axis_x:.3f}" '
                     f'y2="{spec.height}" stroke="#cccccc" stroke-width="1"/>')
    if y0 <= 0.0 <= y1:
        parts.append(f'<line x1="0" y1="{axis_y:.3f}" x2="{spec.width}" '
                     f'y2="{axis_y:.3f}" stroke="#cccccc" stroke-width="1"/>')
    for idx, string in enumerate(strings):
        color = _PALETTE[idx % len(_PALETTE)]
        pix = [to_px(v) for _, v in string.samples]
        pts = " ".join(f"{px:.3f},{py:.3f}" for px, py in pix)
        parts.append(f'<g id="string-{idx}" data-t="{fmt12(string.t)}">')
        parts.append(f'<polyline points="{pts}" fill="none" '
                     f'stroke="{color}" stroke-width="1"/>')
        for px, py in pix:
            parts.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" '
                         f'r="{spec.dot_radius}" fill="{color}"/>')
        parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def strings_to_png(strings: Sequence[TString], path: str, spec: RenderSpec,
                   title: str | None = None) -> None:
    """Raster figure via matplotlib (Agg): one dotted trace per string."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    shift = 1.0 if spec.subtract_one else 0.0
    fig, ax = plt.subplots(figsize=(spec.width / 100.0, spec.height / 100.0))
    for idx, string in enumerate(strings):
        xs = [v.real - shift for _, v in string.samples]
        ys = [v.imag for _, v in string.samples]
        color = _PALETTE[idx % len(_PALETTE)]
        ax.plot(xs, ys, "-", color=color, linewidth=0.6, alpha=0.5)
        ax.plot(xs, ys, ".", color=color, markersize=3,
                label=f"t = {string.t:g}")
    if spec.equal_axes:
        ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("Re" + (" - 1" if spec.subtract_one else ""))
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    if len(strings) <= 12:
        ax.legend(fontsize=7, loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
