"""Regenerate the bundled 128x128 benchmark fixture.

Deterministic synthetic texture: low-frequency sinusoidal shading, two
Gaussian blobs, a diagonal ramp, and seeded fine-grain noise, so the
quality metrics have both smooth and detailed content to react to.
"""

from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "modbilin" / "data" / "fixture_128.pgm"


def build() -> np.ndarray:
    size = 128
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    img = (
        110.0
        + 55.0 * np.sin(2.0 * np.pi * x / 37.0) * np.cos(2.0 * np.pi * y / 23.0)
        + 45.0 * np.exp(-((x - 88.0) ** 2 + (y - 36.0) ** 2) / 520.0)
        - 65.0 * np.exp(-((x - 34.0) ** 2 + (y - 92.0) ** 2) / 900.0)
        + 0.35 * (x + y)
    )
    rng = np.random.default_rng(20240229)
    img += rng.normal(0.0, 6.0, size=(size, size))
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def main() -> None:
    arr = build()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    header = f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii")
    OUT.write_bytes(header + arr.tobytes())
    print(f"wrote {OUT} (mean {arr.mean():.2f}, std {arr.std():.2f})")


if __name__ == "__main__":
    main()
