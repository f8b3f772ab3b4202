"""Grayscale bilinear upscaling with pluggable rounding schemes.

The package bundles bit-exact scalar rounding modes, a modulo-based
improved-floor scheme for sums of weighted addends, a bilinear resize
engine with numba-accelerated kernels (pure-numpy fallback selected via
the ``MODBILIN_BACKEND`` environment variable), full-reference image
quality metrics, PGM/PNG raster I/O, and a benchmark CLI.
"""

__version__ = "0.1.0"

from ._backend import ENV_VAR as BACKEND_ENV_VAR
from ._backend import active_backend_name, available_backends
from .engine import (
    ALL_SCHEMES,
    DEFAULT_EPS,
    GrayImage,
    Neighborhood,
    Scheme,
    SourceLocus,
    WeightVector,
    elapsed_time,
    interpolate_exact,
    interpolate_pixel,
    interpolate_pixel_unclamped,
    neighborhood_at,
    require_gray,
    resize,
    source_locus,
    timed_resize,
    weights,
)
from .metrics import MetricsReport, compare_schemes, corr2, mse, psnr, snr
from .modfloor import (
    CANONICAL_DIVISORS,
    CANONICAL_NUMERATORS,
    IMPROVED,
    AddendTrace,
    DivisorSet,
    ErrorProfile,
    improved_addend,
    improved_floor_sum,
    improved_floor_sum_swapped,
    make_divisors,
    per_addend_error_profile,
    post_sum_error_profile,
    post_sum_rounded,
)
from .raster import RasterFormat, decode_pgm, downsample, encode_pgm, load, pad_to, save
from .rounding import (
    IEEE_EXAMPLE_INPUTS,
    IEEE_MODES,
    MAXFIELD_INPUTS,
    MAXFIELD_LABELS,
    MAXFIELD_MODES,
    RoundingMode,
    apply_mode,
    conformance_table,
    floor_via_mod,
    real_mod,
)

__all__ = [
    "__version__",
    "BACKEND_ENV_VAR",
    "active_backend_name",
    "available_backends",
    "ALL_SCHEMES",
    "DEFAULT_EPS",
    "GrayImage",
    "Neighborhood",
    "Scheme",
    "SourceLocus",
    "WeightVector",
    "elapsed_time",
    "interpolate_exact",
    "interpolate_pixel",
    "interpolate_pixel_unclamped",
    "neighborhood_at",
    "require_gray",
    "resize",
    "source_locus",
    "timed_resize",
    "weights",
    "MetricsReport",
    "compare_schemes",
    "corr2",
    "mse",
    "psnr",
    "snr",
    "CANONICAL_DIVISORS",
    "CANONICAL_NUMERATORS",
    "IMPROVED",
    "AddendTrace",
    "DivisorSet",
    "ErrorProfile",
    "improved_addend",
    "improved_floor_sum",
    "improved_floor_sum_swapped",
    "make_divisors",
    "per_addend_error_profile",
    "post_sum_error_profile",
    "post_sum_rounded",
    "RasterFormat",
    "decode_pgm",
    "downsample",
    "encode_pgm",
    "load",
    "pad_to",
    "save",
    "IEEE_EXAMPLE_INPUTS",
    "IEEE_MODES",
    "MAXFIELD_INPUTS",
    "MAXFIELD_LABELS",
    "MAXFIELD_MODES",
    "RoundingMode",
    "apply_mode",
    "conformance_table",
    "floor_via_mod",
    "real_mod",
]


def fixture_path():
    """Path of the bundled 128x128 benchmark fixture image."""
    from .cli import fixture_path as _fp

    return _fp()


def load_fixture():
    """The bundled 128x128 grayscale fixture as a 2-D uint8 array."""
    from .cli import load_fixture as _lf

    return _lf()
