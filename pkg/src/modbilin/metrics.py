"""Full-reference image quality metrics: MSE, SNR, PSNR, 2-D correlation.

Standard definitions with peak = 255 for 8-bit images. A zero-MSE pair
reports infinity for SNR/PSNR (serialized as the literal string ``inf``,
never a fake large number). All accumulations run in double precision via
numpy's pairwise summation, so results do not depend on traversal order.

The metric functions accept any real-valued 2-D arrays of equal shape;
uint8 images are the common case, but properties such as affine
invariance of the correlation are stated on real values before intensity
quantization, so floats are allowed too.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import DEFAULT_EPS, Scheme, require_gray, resize

PEAK = 255.0


@dataclass(frozen=True)
class MetricsReport:
    """Per-scheme quality metrics and timing for one benchmark cell."""

    scheme: str
    scale: float
    mse: float
    snr_db: float  # math.inf when the noise power is zero
    psnr_db: float  # math.inf when mse == 0
    corr2: float
    seconds: float


def _as_float_pair(ref, test) -> "tuple[np.ndarray, np.ndarray]":
    a = np.asarray(ref)
    b = np.asarray(test)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError(f"expected 2-D arrays, got ndim {a.ndim} and {b.ndim}")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise ValueError("metrics are undefined for empty images")
    return a.astype(np.float64), b.astype(np.float64)


def mse(ref, test) -> float:
    """Mean squared error over all pixels."""
    a, b = _as_float_pair(ref, test)
    d = a - b
    return float(np.mean(d * d))


def psnr(ref, test) -> float:
    """Peak signal-to-noise ratio in dB: ``10*log10(255^2 / mse)``."""
    m = mse(ref, test)
    if m == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / m)


def snr(ref, test) -> float:
    """Signal-to-noise ratio in dB, anchored on the reference.

    ``10*log10(sum(ref^2) / sum((ref - test)^2))``; not symmetric in its
    arguments.
    """
    a, b = _as_float_pair(ref, test)
    signal = float(np.sum(a * a))
    if signal == 0.0:
        raise ValueError("snr undefined: all-zero reference has no signal power")
    d = a - b
    noise = float(np.sum(d * d))
    if noise == 0.0:
        return math.inf
    return 10.0 * math.log10(signal / noise)


def corr2(ref, test) -> float:
    """Pearson linear correlation over the flattened pixel grids."""
    a, b = _as_float_pair(ref, test)
    da = a - np.mean(a)
    db = b - np.mean(b)
    va = float(np.sum(da * da))
    vb = float(np.sum(db * db))
    if va == 0.0 or vb == 0.0:
        raise ValueError("corr2 undefined for a constant image (zero variance)")
    num = float(np.sum(da * db))
    return num / math.sqrt(va * vb)


def compare_schemes(
    ref,
    lowres,
    scale,
    schemes: Sequence[Scheme],
    eps: float = DEFAULT_EPS,
    backend: "str | None" = None,
) -> "tuple[list[MetricsReport], int | None]":
    """Upscale ``lowres`` under each scheme and score it against ``ref``.

    Returns one report per scheme plus the per-pixel disagreement count
    between the floor and round schemes (None unless both were run). The
    reference must have exactly the dimensions the resize will produce.
    """
    ref_img = require_gray(ref)
    low = require_gray(lowres)
    scale_f = float(scale)
    expected = (
        math.floor(scale_f * low.shape[0]),
        math.floor(scale_f * low.shape[1]),
    )
    if ref_img.shape != expected:
        raise ValueError(
            f"reference shape {ref_img.shape} does not match the interpolated "
            f"shape {expected} for scale {scale!r}"
        )
    reports = []
    images = {}
    for scheme in schemes:
        t0 = time.perf_counter()
        out = resize(low, scale_f, scheme, eps, backend)
        seconds = time.perf_counter() - t0
        images[scheme] = out
        reports.append(
            MetricsReport(
                scheme=scheme.value,
                scale=scale_f,
                mse=mse(ref_img, out),
                snr_db=snr(ref_img, out),
                psnr_db=psnr(ref_img, out),
                corr2=corr2(ref_img, out),
                seconds=seconds,
            )
        )
    disagreement = None
    if Scheme.BA_F in images and Scheme.BA_R in images:
        disagreement = int(np.count_nonzero(images[Scheme.BA_F] != images[Scheme.BA_R]))
    return reports, disagreement
