"""Command-line front end: synthesis, per-stage access, and the full pipeline.

Output formats live here: numeric matrix CSV (leading axis column plus a
header row of time indices), 8-bit binary PGM heatmaps with linear min-max
normalization, and a key-value report that round-trips through its own
parser. All writes go to a temp file in the destination directory and are
renamed into place, so a rerun with identical flags replaces outputs with
byte-identical files and never leaves partial ones.

Exit codes: 0 success, 1 I/O or unreadable input, 2 invalid flags or
configuration, 3 requested month absent from the input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .errors import MonthAbsent
from .filtering import MedianFilterConfig, median_filter
from .pipeline import (
    AgitatedModel,
    CalmModel,
    PipelineConfig,
    StepModel,
    SUMMER_BRANCH,
    run_pipeline,
    synth_wind,
)
from .series import CSV_HEADER, TimeSeries, parse_csv, serialize_csv
from .stockwell import STConfig, s_transform, s_transform_direct, st_magnitude
from .wavelets import DESCRIPTOR_NAMES, descriptor
from .cwt import cwt

_ANALYZE_WAVELETS = ("haar", "db4", "sym8", "coif6", "morlet")


class _InputFileError(OSError):
    """Input file exists but its content cannot be used."""


# ---------------------------------------------------------------------------
# readers

def _load_text(path: str) -> str:
    # a missing file raises FileNotFoundError, which already carries the path
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_timeseries(path: str) -> TimeSeries:
    text = _load_text(path)
    try:
        return parse_csv(text)
    except ValueError as exc:
        raise _InputFileError(f"{path}: {exc}") from exc


def _read_values(path: str) -> np.ndarray:
    """Stage input: the dated CSV, or one float per line."""
    text = _load_text(path)
    lines = text.splitlines()
    if lines and lines[0].strip() == CSV_HEADER:
        try:
            return parse_csv(text).values
        except ValueError as exc:
            raise _InputFileError(f"{path}: {exc}") from exc
    vals = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            vals.append(float(line))
        except ValueError as exc:
            raise _InputFileError(f"{path}:{lineno}: not a number: {line!r}") from exc
    if not vals:
        raise _InputFileError(f"{path}: no samples")
    return np.asarray(vals, dtype=float)


# ---------------------------------------------------------------------------
# writers

def _atomic_write_bytes(path, data: bytes) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def _atomic_write_text(path, text: str) -> None:
    _atomic_write_bytes(path, text.encode("utf-8"))


def matrix_csv(matrix, axis_values, axis_name: str) -> str:
    """Row-per-scale/frequency CSV; header row is the time index."""
    m = np.asarray(matrix)
    header = axis_name + "," + ",".join(str(t) for t in range(m.shape[1]))
    lines = [header]
    for axis, row in zip(axis_values, m):
        cells = [repr(float(axis))] + [repr(float(v)) for v in row]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def pgm_bytes(matrix) -> bytes:
    """Binary 8-bit PGM, min -> 0 and max -> 255; constant input -> all 128."""
    m = np.asarray(matrix, dtype=float)
    lo, hi = float(m.min()), float(m.max())
    if hi == lo:
        gray = np.full(m.shape, 128, dtype=np.uint8)
    else:
        gray = np.rint((m - lo) / (hi - lo) * 255.0).astype(np.uint8)
    header = f"P5\n{m.shape[1]} {m.shape[0]}\n255\n".encode("ascii")
    return header + gray.tobytes()


def report_text(report) -> str:
    """Serialize an AnalysisReport as `key = <json>` lines, one per field."""
    pairs = [
        ("month", report.month),
        ("branch", report.branch_taken),
        ("agitation", float(report.agitation)),
        ("day_index", [int(d) for d in report.input_series.day_index]),
        ("input_values", [float(v) for v in report.input_series.values]),
        ("years_used", [int(c) for c in report.input_series.years_used]),
        ("source_span", [int(y) for y in report.input_series.source_span]),
    ]
    if report.branch_taken == SUMMER_BRANCH:
        pairs.append(("filtered_values", [float(v) for v in report.filtered_series]))
        pairs.append(("st_rows", int(report.st_spectrum.coefficients.shape[0])))
        pairs.append(("st_cols", int(report.st_spectrum.coefficients.shape[1])))
    else:
        pairs.append(("scales", [float(s) for s in report.scalogram.scales]))
        pairs.append(("discontinuities", [int(t) for t in report.discontinuities]))
    pairs.append(("provenance", report.provenance))
    return "".join(f"{k} = {json.dumps(v)}\n" for k, v in pairs)


def parse_report(text: str) -> dict:
    """Inverse of report_text; `parse_report(report_text(r))` is lossless."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, payload = line.partition(" = ")
        out[key] = json.loads(payload)
    return out


# ---------------------------------------------------------------------------
# flag parsing helpers; raising ArgumentTypeError keeps argparse's usage+2 path

def _years_arg(text: str) -> int:
    v = int(text)
    if not 1 <= v <= 50:
        raise argparse.ArgumentTypeError("years must be in 1..50")
    return v


def _month_arg(text: str) -> int:
    v = int(text)
    if not 1 <= v <= 12:
        raise argparse.ArgumentTypeError("month must be in 1..12")
    return v


def _model_arg(text: str):
    if text == "calm":
        return CalmModel()
    if text == "agitated":
        return AgitatedModel()
    if text.startswith("step:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError("step model looks like step:DAY:MAG")
        return StepModel(day=int(parts[1]), magnitude=float(parts[2]))
    raise argparse.ArgumentTypeError(f"unknown model {text!r}")


def _month_list_arg(text: str) -> frozenset:
    return frozenset(int(tok) for tok in text.split(",") if tok.strip())


# ---------------------------------------------------------------------------
# commands

def cmd_synth(args) -> int:
    ts = synth_wind(args.years, args.model, args.seed)
    _atomic_write_text(args.out, serialize_csv(ts))
    print(f"wrote {args.out} ({len(ts)} samples)")
    return 0


def cmd_analyze(args) -> int:
    cfg = PipelineConfig(
        winter_months=args.winter_months,
        summer_months=args.summer_months,
        winter_wavelet=args.wavelet,
        filter=MedianFilterConfig(window=args.window),
        st=STConfig(gamma=args.gamma),
    )
    ts = _read_timeseries(getattr(args, "in"))
    report = run_pipeline(ts, args.month, cfg)
    out_dir = Path(args.out_dir)
    os.makedirs(out_dir, exist_ok=True)
    _atomic_write_text(out_dir / "report.txt", report_text(report))
    if report.branch_taken == SUMMER_BRANCH:
        filtered_lines = [f"{d},{float(v)!r}" for d, v in
                          zip(report.input_series.day_index, report.filtered_series)]
        _atomic_write_text(out_dir / "filtered.csv",
                           "day_index,speed_mps\n" + "\n".join(filtered_lines) + "\n")
        mag = st_magnitude(report.st_spectrum)
        _atomic_write_text(out_dir / "st_magnitude.csv",
                           matrix_csv(mag, range(mag.shape[0]), "bin"))
        _atomic_write_bytes(out_dir / "st_magnitude.pgm", pgm_bytes(mag))
    else:
        scal = report.scalogram
        _atomic_write_text(out_dir / "scalogram.csv",
                           matrix_csv(scal.coefficients, scal.scales, "scale"))
        _atomic_write_bytes(out_dir / "scalogram.pgm", pgm_bytes(scal.coefficients))
    print(f"{report.branch_taken} agitation={report.agitation!r}")
    return 0


def cmd_st(args) -> int:
    x = _read_values(getattr(args, "in"))
    cfg = STConfig(gamma=args.gamma)
    spec = s_transform(x, cfg)
    if args.verify:
        direct = s_transform_direct(x, cfg)
        dev = float(np.max(np.abs(spec.coefficients - direct.coefficients)))
        print(f"max deviation = {dev:.6e}")
    mag = st_magnitude(spec)
    if args.out_matrix:
        _atomic_write_text(args.out_matrix, matrix_csv(mag, range(mag.shape[0]), "bin"))
    if args.out_heatmap:
        _atomic_write_bytes(args.out_heatmap, pgm_bytes(mag))
    print(f"st rows={mag.shape[0]} cols={mag.shape[1]}")
    return 0


def cmd_cwt(args) -> int:
    x = _read_values(getattr(args, "in"))
    scal = cwt(x, descriptor(args.wavelet))
    if args.out_matrix:
        _atomic_write_text(args.out_matrix,
                           matrix_csv(scal.coefficients, scal.scales, "scale"))
    if args.out_heatmap:
        _atomic_write_bytes(args.out_heatmap, pgm_bytes(scal.coefficients))
    print(f"cwt rows={len(scal.scales)} cols={scal.coefficients.shape[1]}")
    return 0


def cmd_medfilt(args) -> int:
    x = _read_values(getattr(args, "in"))
    y = median_filter(x, MedianFilterConfig(window=args.window, boundary=args.boundary))
    if args.out:
        _atomic_write_text(args.out, "".join(f"{float(v)!r}\n" for v in y))
    print(f"medfilt n={len(y)} window={args.window}")
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="windtf",
        description="Seasonal wind-speed time-frequency analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a seeded synthetic daily series")
    p.add_argument("--years", type=_years_arg, required=True)
    p.add_argument("--model", type=_model_arg, required=True,
                   help="calm | agitated | step:DAY:MAG")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("analyze", help="run the seasonal pipeline on a CSV")
    p.add_argument("--in", required=True)
    p.add_argument("--month", type=_month_arg, required=True)
    p.add_argument("--wavelet", choices=_ANALYZE_WAVELETS, default="db4")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--winter-months", type=_month_list_arg,
                   default=frozenset({12, 1, 2}), metavar="LIST")
    p.add_argument("--summer-months", type=_month_list_arg,
                   default=frozenset({4, 5, 6}), metavar="LIST")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("st", help="S-transform of a series")
    p.add_argument("--in", required=True)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--verify", action="store_true",
                   help="also run the direct-definition oracle and print "
                        "the max elementwise deviation")
    p.add_argument("--out-matrix")
    p.add_argument("--out-heatmap")
    p.set_defaults(func=cmd_st)

    p = sub.add_parser("cwt", help="wavelet scalogram of a series")
    p.add_argument("--in", required=True)
    p.add_argument("--wavelet", choices=DESCRIPTOR_NAMES, default="db4")
    p.add_argument("--out-matrix")
    p.add_argument("--out-heatmap")
    p.set_defaults(func=cmd_cwt)

    p = sub.add_parser("medfilt", help="median-filter a series")
    p.add_argument("--in", required=True)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--boundary", choices=("replicate", "reflect"), default="replicate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_medfilt)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MonthAbsent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
