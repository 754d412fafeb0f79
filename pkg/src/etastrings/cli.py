"""Command-line front end.

Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cache import ResultCache, cache_key
from .config import Settings, resolve_settings
from .errors import DomainError, EtaStringsError
from .eta import eta, zeta_from_eta
from .figures import available_figures, build_figure, get_preset
from .geometry import (DEFAULT_THRESHOLDS, FlareKind, FlareThresholds,
                       classify_flare, self_crossings)
from .render import (OutputFormat, RenderSpec, fmt12, strings_to_csv,
                     strings_to_png, strings_to_svg)
from .strings import SigmaGrid, StringFamily, build_family, build_string, range_points
from .zeros import ScanConfig, ZeroKind, scan_zeros


def _parse_range(text: str, what: str, parser: argparse.ArgumentParser):
    parts = text.split(":")
    if len(parts) != 3:
        parser.error(f"{what}: expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        parser.error(f"{what}: non-numeric component in {text!r}")
    return start, stop, step


def _parse_span(text: str, what: str, parser: argparse.ArgumentParser):
    parts = text.split(":")
    if len(parts) != 2:
        parser.error(f"{what}: expected lo:hi, got {text!r}")
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        parser.error(f"{what}: non-numeric component in {text!r}")
    return lo, hi


def _sigma_grid(text: str, parser: argparse.ArgumentParser) -> SigmaGrid:
    start, stop, step = _parse_range(text, "--sigma", parser)
    try:
        return SigmaGrid(start, stop, step)
    except DomainError as exc:
        parser.error(str(exc))


def _settings(args: argparse.Namespace) -> Settings:
    return resolve_settings(flag_precision=args.precision,
                            flag_strategy=args.strategy,
                            flag_compensated=args.compensated_phase,
                            flag_cache_dir=args.cache_dir,
                            config_path=args.config)


def _render_spec(args: argparse.Namespace, fmt: OutputFormat) -> RenderSpec:
    return RenderSpec(format=fmt, width=args.width, height=args.height,
                      equal_axes=not args.no_equal_axes,
                      dot_radius=args.dot_radius,
                      subtract_one=args.subtract_one)


def _cached_payload(settings: Settings, key_parts, producer) -> str:
    if not settings.cache_dir:
        return producer()
    cache = ResultCache(settings.cache_dir)
    key = cache_key(*key_parts)
    hit = cache.get(key)
    if hit is not None:
        return hit
    payload = producer()
    cache.put(key, payload)
    return payload


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        Path(out).write_text(payload, encoding="utf-8", newline="")


def cmd_eval(args, parser) -> int:
    settings = _settings(args)
    s = complex(args.sigma, args.t)
    value = zeta_from_eta(s, settings.spec()) if args.zeta else eta(s, settings.spec())
    print(f"{fmt12(value.real)} {fmt12(value.imag)}")
    return 0


def _family_from_args(args, parser, settings) -> StringFamily:
    t_start, t_stop, t_step = _parse_range(args.t, "--t", parser)
    grid = _sigma_grid(args.sigma, parser)
    return build_family(t_start, t_stop, t_step, grid, settings.spec())


def _write_strings(strings, args, parser, settings, key_op: str, key_parts) -> int:
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.CSV:
        payload = _cached_payload(settings, (key_op + "-csv", *key_parts),
                                  lambda: strings_to_csv(strings))
    else:
        if args.out is None:
            parser.error("--format svg requires --out")
        spec = _render_spec(args, fmt)
        payload = _cached_payload(settings, (key_op + "-svg", *key_parts, spec),
                                  lambda: strings_to_svg(strings, spec))
    _emit(payload, args.out)
    return 0


def cmd_string(args, parser) -> int:
    settings = _settings(args)
    grid = _sigma_grid(args.sigma, parser)
    string = build_string(args.t, grid, settings.spec())
    key = (args.t, grid, settings.spec())
    return _write_strings([string], args, parser, settings, "string", key)


def cmd_family(args, parser) -> int:
    settings = _settings(args)
    family = _family_from_args(args, parser, settings)
    key = (family.t_start, family.t_stop, family.t_step, family.grid, settings.spec())
    return _write_strings(family.strings, args, parser, settings, "family", key)


def cmd_zeros(args, parser) -> int:
    settings = _settings(args)
    t_min, t_max = _parse_span(args.t, "--t", parser)
    try:
        config = ScanConfig(t_min=t_min, t_max=t_max, step=args.step,
                            detect_threshold=args.threshold, spec=settings.spec())
    except DomainError as exc:
        parser.error(str(exc))
    records = scan_zeros(config)
    if args.kind == "nontrivial":
        records = [r for r in records if r.kind is ZeroKind.NON_TRIVIAL]
    elif args.kind == "trivial":
        records = [r for r in records if r.kind is ZeroKind.TRIVIAL_ETA]
    lines = ["t,kind,sigma,residual,k"]
    for r in records:
        k = "" if r.k is None else str(r.k)
        lines.append(f"{fmt12(r.t)},{r.kind.value},{fmt12(r.sigma)},{fmt12(r.residual)},{k}")
    payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    if args.out is not None:
        print(f"wrote {len(records)} records to {args.out}")
    return 0


def cmd_flare(args, parser) -> int:
    settings = _settings(args)
    t_start, t_stop, t_step = _parse_range(args.t, "--t", parser)
    if len(range_points(t_start, t_stop, t_step)) < 3:
        parser.error("flare: need a family of at least 3 strings")
    grid = _sigma_grid(args.sigma, parser)
    lo, hi = _parse_span(args.window, "--window", parser)
    in_window = [s for s in grid.points() if lo - 1e-12 <= s <= hi + 1e-12]
    if len(in_window) < 3:
        parser.error(f"flare: window [{lo}, {hi}] selects {len(in_window)} "
                     "grid points per string; need >= 3")
    family = build_family(t_start, t_stop, t_step, grid, settings.spec())
    thresholds = FlareThresholds(parallel_spread_deg=args.parallel_spread,
                                 radial_residual_ratio=args.radial_ratio)
    report = classify_flare(family, SigmaGrid(lo, hi, grid.step), thresholds)
    fields = [report.kind.value, f"spread={report.spread:.2f}deg",
              f"residual={report.residual:.4g}"]
    if report.kind is FlareKind.PARALLEL:
        fields.append(f"direction={report.direction:.2f}deg")
    if report.kind is FlareKind.RADIAL:
        fields.append(f"center=({report.center.real:.6f},{report.center.imag:.6f})")
    print(" ".join(fields))
    return 0


def cmd_crossings(args, parser) -> int:
    settings = _settings(args)
    grid = _sigma_grid(args.sigma, parser)
    string = build_string(args.t, grid, settings.spec())
    reports = self_crossings(string, gap_tolerance=args.gap_tolerance)
    print(f"crossings: {len(reports)}")
    for r in reports:
        print(f"point=({fmt12(r.point.real)},{fmt12(r.point.imag)}) "
              f"sigma=({r.sigma_pair[0]:.6f},{r.sigma_pair[1]:.6f}) gap={fmt12(r.gap)}")
    return 0


def cmd_render_figure(args, parser) -> int:
    settings = _settings(args)
    if args.figure not in available_figures():
        parser.error(f"render-figure: no preset {args.figure}; "
                     f"available: {available_figures()}")
    preset = get_preset(args.figure)
    formats = [f.strip() for f in args.formats.split(",") if f.strip()]
    unknown = set(formats) - {"csv", "svg", "png"}
    if unknown:
        parser.error(f"render-figure: unknown formats {sorted(unknown)}")
    strings = build_figure(args.figure, compensated_phase=settings.compensated_phase)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    base = out_dir / f"figure{args.figure:02d}"
    spec = _render_spec(args, OutputFormat.SVG)
    written = []
    if "csv" in formats:
        path = base.with_suffix(".csv")
        path.write_text(strings_to_csv(strings), encoding="utf-8", newline="")
        written.append(str(path))
    if "svg" in formats:
        path = base.with_suffix(".svg")
        path.write_text(strings_to_svg(strings, spec), encoding="utf-8", newline="")
        written.append(str(path))
    if "png" in formats:
        path = base.with_suffix(".png")
        strings_to_png(strings, str(path), spec, title=preset.description)
        written.append(str(path))
    for path in written:
        print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=float, default=None,
                        help="decimal digits p relative to the n = 2 term")
    common.add_argument("--strategy", choices=["truncated", "accelerated"], default=None)
    common.add_argument("--compensated-phase", action="store_true", default=None,
                        help="double-word phase reduction (large t)")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--config", default=None, help="key=value config file")

    render = argparse.ArgumentParser(add_help=False)
    render.add_argument("--width", type=int, default=800)
    render.add_argument("--height", type=int, default=600)
    render.add_argument("--dot-radius", type=float, default=2.0)
    render.add_argument("--no-equal-axes", action="store_true")
    render.add_argument("--subtract-one", action="store_true",
                        help="shift the origin to (1, 0) before rendering")

    parser = argparse.ArgumentParser(
        prog="etastrings",
        description="Evaluate the alternating eta/zeta pair, build strings, "
                    "locate zeros, classify flares, render figures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate eta (or zeta) at one point")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--zeta", action="store_true", help="divide by 1 - 2**(1-s)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("string", parents=[common, render], help="one string to CSV/SVG")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--sigma", required=True, metavar="START:STOP:STEP")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_string)

    p = sub.add_parser("family", parents=[common, render], help="string family to CSV/SVG")
    p.add_argument("--t", required=True, metavar="START:STOP:STEP")
    p.add_argument("--sigma", required=True, metavar="START:STOP:STEP")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("zeros", parents=[common], help="scan a t range for zeros")
    p.add_argument("--t", required=True, metavar="MIN:MAX")
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--threshold", type=float, default=0.25,
                   help="detection threshold on sampled |eta|")
    p.add_argument("--kind", choices=["all", "nontrivial", "trivial"], default="all")
    p.add_argument("--out", default=None, help="also write the table to a CSV file")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("flare", parents=[common], help="classify a windowed family")
    p.add_argument("--t", required=True, metavar="START:STOP:STEP")
    p.add_argument("--sigma", required=True, metavar="START:STOP:STEP")
    p.add_argument("--window", required=True, metavar="LO:HI")
    p.add_argument("--parallel-spread", type=float,
                   default=DEFAULT_THRESHOLDS.parallel_spread_deg)
    p.add_argument("--radial-ratio", type=float,
                   default=DEFAULT_THRESHOLDS.radial_residual_ratio)
    p.set_defaults(func=cmd_flare)

    p = sub.add_parser("crossings", parents=[common], help="self-crossings of one string")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--sigma", required=True, metavar="START:STOP:STEP")
    p.add_argument("--gap-tolerance", type=float, default=0.0)
    p.set_defaults(func=cmd_crossings)

    p = sub.add_parser("render-figure", parents=[common, render],
                       help="render a numbered figure preset")
    p.add_argument("--figure", type=int, required=True,
                   help=f"preset number, one of {available_figures()}")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--formats", default="csv,svg,png",
                   help="comma-separated subset of csv,svg,png")
    p.set_defaults(func=cmd_render_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except EtaStringsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
