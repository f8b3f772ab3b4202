"""Bilinear image upscaling with a pluggable final-rounding scheme.

Schemes:

* ``BA_F``      -- floor of the exact bilinear value
* ``BA_R``      -- round-half-away-from-zero of the exact value
* ``BA_M``      -- modulo-based improved floor over the four addends
* ``BA_M_SWAP`` -- improved floor with the third/fourth main-quotient
  divisors exchanged

Coordinate mapping is ``source = dest / scale`` split into integer part
and fractional offset (no half-pixel-center shift); neighbors past the
last row/column are border-clamped. Rounded values are clamped to the
displayable [0, 255] range after rounding, never before.
"""

from __future__ import annotations

import math
import time
from enum import Enum, unique
from typing import NamedTuple, Sequence

import numpy as np

from ._backend import resolve_backend
from .modfloor import improved_floor_sum, improved_floor_sum_swapped, make_divisors

#: Default perturbation added to a weight before taking its reciprocal.
#: Keeps the per-addend bias below 255 * 1e-9, far under one intensity
#: step, while 1/eps stays finite in double precision.
DEFAULT_EPS = 1e-9

#: Type of a grayscale image: a 2-D uint8 array, row-major.
GrayImage = np.ndarray


@unique
class Scheme(Enum):
    """Identifier of the final-rounding strategy applied per output pixel."""

    BA_F = "ba_f"
    BA_R = "ba_r"
    BA_M = "ba_m"
    BA_M_SWAP = "ba_m_swap"


ALL_SCHEMES = (Scheme.BA_F, Scheme.BA_R, Scheme.BA_M, Scheme.BA_M_SWAP)


class Neighborhood(NamedTuple):
    """The four source pixels around a sample point.

    ``n1 = I(r, c)``, ``n2 = I(r+1, c)``, ``n3 = I(r, c+1)``,
    ``n4 = I(r+1, c+1)``.
    """

    n1: int
    n2: int
    n3: int
    n4: int


class WeightVector(NamedTuple):
    """The four bilinear weights; they sum to 1 within 2 ulp."""

    w1: float
    w2: float
    w3: float
    w4: float


class SourceLocus(NamedTuple):
    """Base source coordinates plus fractional offsets of a sample point."""

    r: int
    c: int
    dr: float
    dc: float


def require_gray(img) -> GrayImage:
    """Validate and return a non-empty 2-D uint8 array (C-contiguous)."""
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D grayscale array, got ndim={arr.ndim}")
    if arr.dtype != np.uint8:
        raise ValueError(f"expected dtype uint8, got {arr.dtype}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a non-empty image, got shape {arr.shape}")
    return np.ascontiguousarray(arr)


def weights(dr: float, dc: float) -> WeightVector:
    """Bilinear weights for fractional offsets.

    Offsets live in [0, 1]; the closed upper end admits the worked cases
    where a sample sits exactly on the next row/column.
    """
    if not (0.0 <= dr <= 1.0 and 0.0 <= dc <= 1.0):
        raise ValueError(f"offsets must lie in [0, 1], got dr={dr!r}, dc={dc!r}")
    return WeightVector(
        (1.0 - dr) * (1.0 - dc),
        dr * (1.0 - dc),
        (1.0 - dr) * dc,
        dr * dc,
    )


def interpolate_exact(nb: Sequence[int], w: Sequence[float]) -> float:
    """Unrounded bilinear value ``n1*w1 + n2*w2 + n3*w3 + n4*w4``."""
    n1, n2, n3, n4 = nb
    w1, w2, w3, w4 = w
    return n1 * w1 + n2 * w2 + n3 * w3 + n4 * w4


def interpolate_pixel_unclamped(
    nb: Sequence[int],
    w: Sequence[float],
    scheme: Scheme,
    eps: float = DEFAULT_EPS,
) -> int:
    """Scheme-rounded pixel value before the [0, 255] clamp."""
    if scheme is Scheme.BA_F:
        v = interpolate_exact(nb, w)
        return math.floor(v)
    if scheme is Scheme.BA_R:
        v = interpolate_exact(nb, w)
        f = math.floor(v)
        return f + 1 if v - f >= 0.5 else f
    divisors = make_divisors(w, eps)
    if scheme is Scheme.BA_M:
        return improved_floor_sum(tuple(nb), divisors.values)
    if scheme is Scheme.BA_M_SWAP:
        return improved_floor_sum_swapped(nb, divisors)
    raise TypeError(f"unknown scheme {scheme!r}")


def interpolate_pixel(
    nb: Sequence[int],
    w: Sequence[float],
    scheme: Scheme,
    eps: float = DEFAULT_EPS,
) -> int:
    """Scheme-rounded pixel value clamped to the displayable [0, 255] range."""
    raw = interpolate_pixel_unclamped(nb, w, scheme, eps)
    return min(max(raw, 0), 255)


def source_locus(dest_r: int, dest_c: int, scale: float) -> SourceLocus:
    """Map a destination pixel back to base source coordinates and offsets.

    ``source = dest / scale``, split into integer part and fractional
    offset. ``resize`` applies exactly this mapping per axis; the helper
    exists so tests can cross-check the kernels pixel by pixel.
    """
    pr = dest_r / scale
    pc = dest_c / scale
    br = math.floor(pr)
    bc = math.floor(pc)
    return SourceLocus(br, bc, pr - br, pc - bc)


def neighborhood_at(img: GrayImage, locus: SourceLocus) -> Neighborhood:
    """Gather the four border-clamped source pixels at a mapped locus."""
    h, w = img.shape
    r0 = locus.r
    c0 = locus.c
    r1 = min(r0 + 1, h - 1)
    c1 = min(c0 + 1, w - 1)
    return Neighborhood(
        int(img[r0, c0]), int(img[r1, c0]), int(img[r0, c1]), int(img[r1, c1])
    )


def resize(
    img: GrayImage,
    scale,
    scheme: Scheme,
    eps: float = DEFAULT_EPS,
    backend: "str | None" = None,
) -> GrayImage:
    """Upscale a grayscale image by ``scale`` under the given scheme.

    Output dimensions are ``floor(scale * height) x floor(scale * width)``.
    Every output pixel is computed independently, so the result is
    bit-identical across runs and across kernel backends.
    """
    src = require_gray(img)
    scale_f = float(scale)
    if not (math.isfinite(scale_f) and scale_f >= 1.0):
        raise ValueError(f"scale must be >= 1 (downscaling lives in raster), got {scale!r}")
    if scheme in (Scheme.BA_M, Scheme.BA_M_SWAP) and not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    out_h = math.floor(scale_f * src.shape[0])
    out_w = math.floor(scale_f * src.shape[1])
    kernels = resolve_backend(backend)
    if scheme is Scheme.BA_F:
        return kernels.resize_floor_round(src, out_h, out_w, scale_f, False)
    if scheme is Scheme.BA_R:
        return kernels.resize_floor_round(src, out_h, out_w, scale_f, True)
    if scheme is Scheme.BA_M:
        return kernels.resize_modfloor(src, out_h, out_w, scale_f, float(eps), False)
    if scheme is Scheme.BA_M_SWAP:
        return kernels.resize_modfloor(src, out_h, out_w, scale_f, float(eps), True)
    raise TypeError(f"unknown scheme {scheme!r}")


def timed_resize(
    img: GrayImage,
    scale,
    scheme: Scheme,
    repetitions: int,
    eps: float = DEFAULT_EPS,
    backend: "str | None" = None,
) -> "tuple[GrayImage, list[float]]":
    """Run resize ``repetitions`` times; return the (identical) output and
    the wall-clock duration of each run in seconds."""
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions!r}")
    durations = []
    out = None
    for _ in range(repetitions):
        t0 = time.perf_counter()
        out = resize(img, scale, scheme, eps, backend)
        durations.append(time.perf_counter() - t0)
    return out, durations


def elapsed_time(
    img: GrayImage,
    scale,
    scheme: Scheme,
    repetitions: int,
    eps: float = DEFAULT_EPS,
    backend: "str | None" = None,
) -> float:
    """Mean wall-clock seconds per resize over ``repetitions`` runs."""
    _, durations = timed_resize(img, scale, scheme, repetitions, eps, backend)
    return sum(durations) / len(durations)
