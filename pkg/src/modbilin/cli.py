"""Benchmark command line: downsample a reference, upscale it back under
every rounding scheme, and emit metric/timing/conformance CSV artifacts.

Artifacts written to the output directory:

* ``metrics.csv``     -- scheme,scale,mse,snr_db,psnr_db,corr2,seconds,disagreement_count
* ``timing.csv``      -- mean/min/max wall seconds per scheme x output resolution
* ``<scheme>_x<scale>.pgm`` -- the interpolated images
* ``table1.csv``      -- the five standard rounding rules on half-integers
* ``table2.csv``      -- Maxfield's ten-mode diagram
* ``fig2_errors.csv`` -- per-addend round-off errors on the canonical vectors
* ``fig3_errors.csv`` -- post-sum round-off errors on the canonical vectors

Timing columns are wall-clock and vary run to run; every other column is
deterministic for a given input and configuration.
"""

from __future__ import annotations

import argparse
import csv
import importlib.resources
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import active_backend_name
from .engine import ALL_SCHEMES, DEFAULT_EPS, Scheme, timed_resize
from .metrics import MetricsReport, compare_schemes
from .modfloor import (
    CANONICAL_DIVISORS,
    CANONICAL_NUMERATORS,
    IMPROVED,
    per_addend_error_profile,
    post_sum_error_profile,
    post_sum_rounded,
)
from .raster import DOWNSAMPLER_NAME, RasterFormat, decode_pgm, downsample, load, pad_to, save
from .rounding import (
    IEEE_EXAMPLE_INPUTS,
    IEEE_MODES,
    MAXFIELD_INPUTS,
    MAXFIELD_LABELS,
    MAXFIELD_MODES,
    conformance_table,
)

#: Scheme order and error-profile vocabulary for the error CSVs.
PROFILE_SCHEMES = ("floor", "ceil", "fix", "round", IMPROVED)

GOLDEN_FILENAME = "fixture_metrics_golden.csv"


@dataclass
class BenchmarkConfig:
    """Configuration of one benchmark run."""

    input_path: Path
    scales: "tuple[int, ...]" = (2, 3, 4, 5)
    schemes: "tuple[Scheme, ...]" = ALL_SCHEMES
    eps: float = DEFAULT_EPS
    repetitions: int = 10
    out_dir: Path = field(default_factory=lambda: Path("modbilin-out"))

    def validate(self) -> None:
        if not self.scales or any(s < 2 for s in self.scales):
            raise ValueError(f"scales must all be >= 2, got {self.scales!r}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions!r}")
        if not self.eps > 0:
            raise ValueError(f"L must be positive, got {self.eps!r}")
        if not self.schemes:
            raise ValueError("at least one scheme is required")


def fixture_path() -> Path:
    """Path of the bundled 128x128 benchmark fixture."""
    return Path(str(importlib.resources.files(__package__) / "data" / "fixture_128.pgm"))


def load_fixture() -> np.ndarray:
    """The bundled 128x128 grayscale fixture as an array."""
    data = (importlib.resources.files(__package__) / "data" / "fixture_128.pgm").read_bytes()
    return decode_pgm(data)


def _fmt(value) -> str:
    """Deterministic CSV cell formatting; floats round-trip, inf stays 'inf'."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return repr(value)
    if value is None:
        return ""
    return str(value)


def _write_csv(path: Path, meta: "list[str]", header: "list[str]", rows) -> None:
    with open(path, "w", newline="") as fh:
        for line in meta:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])


def _meta_lines(cfg: "BenchmarkConfig | None" = None, padded: "list[int] | None" = None) -> "list[str]":
    lines = [f"tool=modbilin {__version__}", f"downsampler={DOWNSAMPLER_NAME}"]
    if cfg is not None:
        lines.insert(1, f"L={cfg.eps!r}")
        lines.append(f"backend={active_backend_name()}")
    if padded:
        lines.append(
            "warning=input dimensions not divisible by scale(s) "
            f"{','.join(str(s) for s in padded)}; reference edge-padded to match"
        )
    return lines


def _warm_kernels(eps: float) -> None:
    # first call per kernel may compile; keep that out of the timed runs
    from .engine import resize

    slab = np.zeros((4, 4), dtype=np.uint8)
    resize(slab, 2, Scheme.BA_F, eps)
    resize(slab, 2, Scheme.BA_M, eps)


def run_benchmark(cfg: BenchmarkConfig) -> "list[MetricsReport]":
    """Execute the full pipeline and write metrics/timing/image artifacts."""
    cfg.validate()
    img = load(cfg.input_path)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    _warm_kernels(cfg.eps)

    metric_rows = []
    timing_rows = []
    all_reports = []
    padded_scales = []
    for scale in cfg.scales:
        low = downsample(img, scale)
        target = (low.shape[0] * scale, low.shape[1] * scale)
        if target != img.shape:
            padded_scales.append(scale)
        ref = pad_to(img, target)
        reports, disagreement = compare_schemes(ref, low, scale, cfg.schemes, cfg.eps)
        all_reports.extend(reports)
        for report in reports:
            metric_rows.append(
                [
                    report.scheme,
                    scale,
                    report.mse,
                    report.snr_db,
                    report.psnr_db,
                    report.corr2,
                    report.seconds,
                    disagreement,
                ]
            )
        for scheme in cfg.schemes:
            out, durations = timed_resize(low, scale, scheme, cfg.repetitions, cfg.eps)
            timing_rows.append(
                [
                    scheme.value,
                    scale,
                    out.shape[1],
                    out.shape[0],
                    sum(durations) / len(durations),
                    min(durations),
                    max(durations),
                ]
            )
            save(out, cfg.out_dir / f"{scheme.value}_x{scale}.pgm", RasterFormat.PGM_BINARY)

    meta = _meta_lines(cfg, padded_scales)
    _write_csv(
        cfg.out_dir / "metrics.csv",
        meta,
        ["scheme", "scale", "mse", "snr_db", "psnr_db", "corr2", "seconds", "disagreement_count"],
        metric_rows,
    )
    _write_csv(
        cfg.out_dir / "timing.csv",
        meta,
        ["scheme", "scale", "out_width", "out_height", "mean_seconds", "min_seconds", "max_seconds"],
        timing_rows,
    )
    return all_reports


def emit_tables(out_dir: Path) -> None:
    """Write the rounding-conformance tables and the error-profile CSVs."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    meta = _meta_lines()

    cells = conformance_table(IEEE_MODES, IEEE_EXAMPLE_INPUTS)
    rows = [[mode.value, *row] for mode, row in zip(IEEE_MODES, cells)]
    _write_csv(
        out_dir / "table1.csv",
        meta,
        ["mode", *(f"{x:+g}" for x in IEEE_EXAMPLE_INPUTS)],
        rows,
    )

    cells = conformance_table(MAXFIELD_MODES, MAXFIELD_INPUTS)
    rows = [[MAXFIELD_LABELS[mode], *row] for mode, row in zip(MAXFIELD_MODES, cells)]
    _write_csv(
        out_dir / "table2.csv",
        meta,
        ["mode", *(f"{x:.1f}" for x in MAXFIELD_INPUTS)],
        rows,
    )

    profiles = per_addend_error_profile(
        CANONICAL_NUMERATORS, CANONICAL_DIVISORS, PROFILE_SCHEMES
    )
    rows = [
        [p.scheme, i, err]
        for p in profiles
        for i, err in enumerate(p.per_addend_abs_errors)
    ]
    _write_csv(out_dir / "fig2_errors.csv", meta, ["scheme", "addend_index", "abs_error"], rows)

    post = post_sum_error_profile(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, PROFILE_SCHEMES)
    rows = [
        [
            p.scheme,
            post_sum_rounded(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, p.scheme),
            p.total_abs_error,
        ]
        for p in post
    ]
    # the "floor" row doubles as the floored-exact-sum reading of the
    # improved scheme; the "improved" row is the transformed-sum reading
    _write_csv(out_dir / "fig3_errors.csv", meta, ["scheme", "rounded_sum", "abs_error"], rows)


def golden_rows(eps: float = DEFAULT_EPS) -> "list[list]":
    """Deterministic metric rows for the bundled fixture at scales 2-5."""
    img = load_fixture()
    rows = []
    for scale in (2, 3, 4, 5):
        low = downsample(img, scale)
        ref = pad_to(img, (low.shape[0] * scale, low.shape[1] * scale))
        reports, disagreement = compare_schemes(ref, low, scale, ALL_SCHEMES, eps)
        for report in reports:
            rows.append(
                [
                    report.scheme,
                    scale,
                    report.mse,
                    report.snr_db,
                    report.psnr_db,
                    report.corr2,
                    disagreement,
                ]
            )
    return rows


def seed_goldens(out_dir: Path, eps: float = DEFAULT_EPS) -> Path:
    """Write the locked regression values for the bundled fixture."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / GOLDEN_FILENAME
    _write_csv(
        path,
        [f"tool=modbilin {__version__}", f"L={eps!r}", f"downsampler={DOWNSAMPLER_NAME}"],
        ["scheme", "scale", "mse", "snr_db", "psnr_db", "corr2", "disagreement_count"],
        golden_rows(eps),
    )
    return path


def _parse_scales(text: str) -> "tuple[int, ...]":
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid scales list {text!r}") from None


def _parse_schemes(text: str) -> "tuple[Scheme, ...]":
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(Scheme(part))
        except ValueError:
            names = ",".join(s.value for s in ALL_SCHEMES)
            raise argparse.ArgumentTypeError(
                f"unknown scheme {part!r}; choose from {names}"
            ) from None
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modbilin",
        description=(
            "Benchmark bilinear upscaling under floor, round and modulo-based "
            "floor rounding schemes; emit metric, timing and conformance CSVs."
        ),
    )
    parser.add_argument("--input", type=Path, help="reference image (PGM or 8-bit grayscale PNG)")
    parser.add_argument(
        "--scales",
        type=_parse_scales,
        default=(2, 3, 4, 5),
        help="comma-separated integer upscale factors (default 2,3,4,5)",
    )
    parser.add_argument(
        "--schemes",
        type=_parse_schemes,
        default=ALL_SCHEMES,
        help="comma-separated scheme names (default ba_f,ba_r,ba_m,ba_m_swap)",
    )
    parser.add_argument(
        "--L",
        dest="eps",
        type=float,
        default=DEFAULT_EPS,
        help="perturbation added to each weight before inversion (default 1e-9)",
    )
    parser.add_argument(
        "--repetitions", type=int, default=10, help="timed resize repetitions (default 10)"
    )
    parser.add_argument(
        "--out", type=Path, default=Path("modbilin-out"), help="output directory"
    )
    parser.add_argument(
        "--tables",
        action="store_true",
        help="emit only the conformance and error-profile tables",
    )
    parser.add_argument(
        "--seed-goldens",
        action="store_true",
        help="write the locked fixture regression CSV and exit",
    )
    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.seed_goldens:
            path = seed_goldens(args.out, args.eps)
            print(f"wrote {path}")
            return 0
        if args.tables:
            emit_tables(args.out)
            print(f"wrote tables to {args.out}")
            return 0
        if args.input is None:
            raise ValueError("--input is required unless --tables or --seed-goldens is given")
        cfg = BenchmarkConfig(
            input_path=args.input,
            scales=args.scales,
            schemes=args.schemes,
            eps=args.eps,
            repetitions=args.repetitions,
            out_dir=args.out,
        )
        run_benchmark(cfg)
        emit_tables(args.out)
        print(f"wrote benchmark artifacts to {args.out}")
        return 0
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
