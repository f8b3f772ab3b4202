"""Time the numba kernels against the pure-numpy fallback.

Runs every rounding scheme at several output sizes on both backends and
prints mean wall seconds per resize plus the speedup. The first numba call
per kernel is excluded (compilation); results of the two backends are also
cross-checked for bit-identity.

Usage: python benchmarks/compare_backends.py [--repetitions N]
"""

import argparse
import time

import numpy as np

from modbilin import ALL_SCHEMES, available_backends, resize

SIZES = (128, 256)  # source edge lengths
SCALE = 5


def bench(img, scale, scheme, backend, repetitions):
    resize(img, scale, scheme, backend=backend)  # warm-up / compile
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        out = resize(img, scale, scheme, backend=backend)
        times.append(time.perf_counter() - t0)
    return out, sum(times) / len(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repetitions", type=int, default=7)
    args = parser.parse_args()

    backends = available_backends()
    if "numba" not in backends:
        print("numba backend unavailable; nothing to compare")
        return

    rng = np.random.default_rng(424242)
    print(f"{'scheme':<10} {'src':>5} {'out':>5} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for edge in SIZES:
        img = rng.integers(0, 256, size=(edge, edge), dtype=np.uint8)
        for scheme in ALL_SCHEMES:
            out_np, t_np = bench(img, SCALE, scheme, "numpy", args.repetitions)
            out_nb, t_nb = bench(img, SCALE, scheme, "numba", args.repetitions)
            assert np.array_equal(out_np, out_nb), "backends disagree!"
            print(
                f"{scheme.value:<10} {edge:>5} {edge * SCALE:>5} "
                f"{t_np * 1e3:>11.3f} {t_nb * 1e3:>11.3f} {t_np / t_nb:>8.2f}x"
            )


if __name__ == "__main__":
    main()
