"""Grayscale raster I/O and the reference-preparation downsampler.

Supported formats: binary and ASCII PGM (maxval exactly 255) and 8-bit
single-channel PNG. Anything else — 16-bit depths, palettes, color,
alpha — is rejected, never silently converted. PGM is the primary
interchange format; PNG decode/encode is delegated to Pillow, restricted
to mode ``L``.
"""

from __future__ import annotations

import os
from enum import Enum, unique

import numpy as np

from .engine import GrayImage, require_gray


@unique
class RasterFormat(Enum):
    PGM_BINARY = "pgm-binary"
    PGM_ASCII = "pgm-ascii"
    PNG_GRAY8 = "png-gray8"


class _PgmScanner:
    """Token scanner for PGM headers: whitespace-separated, '#' comments."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def token(self) -> bytes:
        data, n = self.data, len(self.data)
        i = self.pos
        while i < n:
            ch = data[i]
            if ch in b"#":
                while i < n and data[i] not in b"\r\n":
                    i += 1
            elif chr(ch).isspace():
                i += 1
            else:
                break
        if i >= n:
            raise ValueError("truncated PGM header")
        start = i
        while i < n and not chr(data[i]).isspace():
            i += 1
        self.pos = i
        return data[start:i]

    def int_token(self, what: str) -> int:
        tok = self.token()
        try:
            return int(tok)
        except ValueError:
            raise ValueError(f"invalid PGM {what}: {tok!r}") from None


def decode_pgm(data: bytes) -> GrayImage:
    """Decode PGM bytes (P2 or P5, maxval 255) to a 2-D uint8 array."""
    scanner = _PgmScanner(data)
    magic = scanner.token()
    if magic not in (b"P2", b"P5"):
        raise ValueError(f"not a PGM image (magic {magic!r})")
    width = scanner.int_token("width")
    height = scanner.int_token("height")
    maxval = scanner.int_token("maxval")
    if width < 1 or height < 1:
        raise ValueError(f"invalid PGM dimensions {width}x{height}")
    if maxval != 255:
        raise ValueError(f"only 8-bit PGM with maxval 255 is supported, got maxval {maxval}")
    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if scanner.pos >= len(data) or not chr(data[scanner.pos]).isspace():
            raise ValueError("malformed PGM: missing whitespace after maxval")
        start = scanner.pos + 1
        payload = data[start : start + count]
        if len(payload) < count:
            raise ValueError(f"PGM raster truncated: expected {count} bytes, got {len(payload)}")
        flat = np.frombuffer(payload, dtype=np.uint8, count=count)
    else:
        values = []
        for _ in range(count):
            v = scanner.int_token("sample")
            if not 0 <= v <= 255:
                raise ValueError(f"PGM sample {v} out of range [0, 255]")
            values.append(v)
        flat = np.asarray(values, dtype=np.uint8)
    return flat.reshape(height, width).copy()


def encode_pgm(img: GrayImage, binary: bool = True) -> bytes:
    """Encode a 2-D uint8 array as PGM bytes (P5, or P2 when binary=False)."""
    arr = require_gray(img)
    h, w = arr.shape
    if binary:
        return f"P5\n{w} {h}\n255\n".encode("ascii") + arr.tobytes()
    lines = [f"P2\n{w} {h}\n255"]
    for row in arr:
        # keep plain-format lines at most 70 characters
        for i in range(0, w, 17):
            lines.append(" ".join(str(int(v)) for v in row[i : i + 17]))
    return ("\n".join(lines) + "\n").encode("ascii")


def _load_png(path) -> GrayImage:
    from PIL import Image

    with Image.open(path) as im:
        if im.format != "PNG":
            raise ValueError(f"expected a PNG file, got {im.format!r}")
        if im.mode != "L":
            raise ValueError(
                f"only 8-bit single-channel grayscale PNG is supported, got mode {im.mode!r}"
            )
        return np.asarray(im, dtype=np.uint8).copy()


def _save_png(img: GrayImage, path) -> None:
    from PIL import Image

    Image.fromarray(require_gray(img), mode="L").save(path, format="PNG")


def load(path) -> GrayImage:
    """Load a grayscale image, detecting the format from its magic bytes."""
    path = os.fspath(path)
    with open(path, "rb") as fh:
        head = fh.read(2)
    if head in (b"P2", b"P5"):
        with open(path, "rb") as fh:
            return decode_pgm(fh.read())
    if head == b"\x89P":
        return _load_png(path)
    raise ValueError(f"unsupported image format in {path!r} (magic {head!r})")


def save(img: GrayImage, path, fmt: RasterFormat = RasterFormat.PGM_BINARY) -> None:
    """Write a grayscale image; load(save(img)) round-trips bit-exactly."""
    arr = require_gray(img)
    path = os.fspath(path)
    if fmt is RasterFormat.PNG_GRAY8:
        _save_png(arr, path)
        return
    data = encode_pgm(arr, binary=fmt is RasterFormat.PGM_BINARY)
    with open(path, "wb") as fh:
        fh.write(data)


#: Name recorded in CSV headers for the reference-preparation step.
DOWNSAMPLER_NAME = "box-mean-half-even"


def downsample(img: GrayImage, factor: int) -> GrayImage:
    """Shrink by an integer factor with a box filter.

    Each output pixel is the half-to-even-rounded mean of a factor x factor
    block. When the dimensions are not divisible by the factor the image is
    edge-padded first, so the output is ceil(input/factor) in each axis.
    """
    arr = require_gray(img)
    if not isinstance(factor, (int, np.integer)) or isinstance(factor, bool):
        raise ValueError(f"factor must be a positive integer, got {factor!r}")
    if factor < 1:
        raise ValueError(f"factor must be >= 1, got {factor}")
    factor = int(factor)
    if factor == 1:
        return arr.copy()
    h, w = arr.shape
    pad_h = (-h) % factor
    pad_w = (-w) % factor
    if pad_h or pad_w:
        arr = np.pad(arr, ((0, pad_h), (0, pad_w)), mode="edge")
    out_h = arr.shape[0] // factor
    out_w = arr.shape[1] // factor
    blocks = arr.reshape(out_h, factor, out_w, factor).astype(np.float64)
    means = blocks.sum(axis=(1, 3)) / float(factor * factor)
    return np.rint(means).astype(np.uint8)


def pad_to(img: GrayImage, shape: "tuple[int, int]") -> GrayImage:
    """Edge-pad an image up to the given (height, width)."""
    arr = require_gray(img)
    h, w = arr.shape
    th, tw = shape
    if th < h or tw < w:
        raise ValueError(f"target shape {shape} smaller than image {arr.shape}")
    if (th, tw) == (h, w):
        return arr.copy()
    return np.pad(arr, ((0, th - h), (0, tw - w)), mode="edge")
