"""Scalar rounding modes and the floored real modulo.

Every mode maps a finite real to a mathematical integer. The half-* modes
differ only on exact ties (fractional part of 0.5 on the parsed double);
tie detection uses exact equality, never an epsilon, so conformance tables
are bit-reproducible.
"""

from __future__ import annotations

import math
from enum import Enum, unique


@unique
class RoundingMode(Enum):
    """Final-value rounding rules for reals.

    ``TOWARD_NEGATIVE_INFINITY`` and ``FLOOR`` alias the same rule, as do
    ``TOWARD_ZERO`` and ``TRUNCATE``; both spellings are kept because the
    two families of conformance tables name them differently.
    """

    HALF_TO_EVEN = "half-to-even"
    HALF_AWAY_FROM_ZERO = "half-away-from-zero"
    TOWARD_ZERO = "toward-zero"
    TOWARD_POSITIVE_INFINITY = "toward-positive-infinity"
    TOWARD_NEGATIVE_INFINITY = "toward-negative-infinity"
    HALF_UP_SYMMETRIC = "half-up-symmetric"
    HALF_UP_ASYMMETRIC = "half-up-asymmetric"
    HALF_DOWN_SYMMETRIC = "half-down-symmetric"
    HALF_DOWN_ASYMMETRIC = "half-down-asymmetric"
    HALF_ODD = "half-odd"
    CEILING = "ceiling"
    FLOOR = "floor"
    TRUNCATE = "truncate"
    AWAY_FROM_ZERO = "away-from-zero"


#: The five rules of the first conformance table, in row order.
IEEE_MODES = (
    RoundingMode.HALF_TO_EVEN,
    RoundingMode.HALF_AWAY_FROM_ZERO,
    RoundingMode.TOWARD_ZERO,
    RoundingMode.TOWARD_POSITIVE_INFINITY,
    RoundingMode.TOWARD_NEGATIVE_INFINITY,
)

#: Canonical half-integer inputs for the five-rule table, in column order.
IEEE_EXAMPLE_INPUTS = (11.5, 12.5, -11.5, -12.5)

#: The ten modes of Maxfield's diagram, in row order.
MAXFIELD_MODES = (
    RoundingMode.HALF_UP_SYMMETRIC,
    RoundingMode.HALF_UP_ASYMMETRIC,
    RoundingMode.HALF_DOWN_SYMMETRIC,
    RoundingMode.HALF_DOWN_ASYMMETRIC,
    RoundingMode.HALF_TO_EVEN,
    RoundingMode.HALF_ODD,
    RoundingMode.CEILING,
    RoundingMode.FLOOR,
    RoundingMode.TRUNCATE,
    RoundingMode.AWAY_FROM_ZERO,
)

#: Row labels used when serializing the Maxfield table.
MAXFIELD_LABELS = {
    RoundingMode.HALF_UP_SYMMETRIC: "R-H-U (s)",
    RoundingMode.HALF_UP_ASYMMETRIC: "R-H-U (a)",
    RoundingMode.HALF_DOWN_SYMMETRIC: "R-H-D (s)",
    RoundingMode.HALF_DOWN_ASYMMETRIC: "R-H-D (a)",
    RoundingMode.HALF_TO_EVEN: "R-H-E",
    RoundingMode.HALF_ODD: "R-H-O",
    RoundingMode.CEILING: "R-C",
    RoundingMode.FLOOR: "R-F",
    RoundingMode.TRUNCATE: "R-T-Z",
    RoundingMode.AWAY_FROM_ZERO: "R-A-F-Z",
}

#: Canonical inputs for the Maxfield table, in column order.
MAXFIELD_INPUTS = (
    -2.0, -1.7, -1.5, -1.3, -1.0, -0.7, -0.5, -0.3,
    0.0, 0.3, 0.5, 0.7, 1.0, 1.3, 1.5, 1.7, 2.0,
)


def real_mod(a: float, b: float) -> float:
    """Floored modulo of reals: ``a - b*floor(a/b)``.

    The result carries the sign of the divisor and lies in ``[0, b)`` for
    ``b > 0``. Computed from the exact ``fmod`` remainder rather than the
    literal ``a - b*floor(a/b)``, which would lose precision for large
    quotients.

    Raises:
        ValueError: if ``b`` is zero (undefined modulus) or an operand is
            non-finite.
    """
    if b == 0:
        raise ValueError("real_mod: modulus undefined for divisor 0")
    r = math.fmod(a, b)  # exact; raises ValueError on non-finite a
    if r != 0.0 and (r < 0.0) != (b < 0.0):
        r += b
        # |true remainder| within half an ulp of |b| rounds to b exactly
        # (e.g. -1e-20 mod 1); collapse to 0 to keep the range contract.
        if r == b:
            r = 0.0
    return r + 0.0  # normalize -0.0


def floor_via_mod(x: float) -> int:
    """Greatest integer <= x, via the identity floor(x) = x - x mod 1."""
    if not math.isfinite(x):
        raise ValueError("floor_via_mod: input must be finite")
    return math.floor(x - real_mod(x, 1.0))


def apply_mode(x: float, mode: RoundingMode) -> int:
    """Round a finite real to an integer under the given mode.

    For non-half-integer inputs every half-* mode agrees with
    round-to-nearest; the modes differ only in tie-breaking and in the
    directed rules.
    """
    if not math.isfinite(x):
        raise ValueError("apply_mode: input must be finite")
    lo = math.floor(x)
    frac = x - lo  # exact for |x| < 2**52; zero at and above
    if frac == 0.0:
        return lo
    hi = lo + 1

    if mode in (RoundingMode.CEILING, RoundingMode.TOWARD_POSITIVE_INFINITY):
        return hi
    if mode in (RoundingMode.FLOOR, RoundingMode.TOWARD_NEGATIVE_INFINITY):
        return lo
    if mode in (RoundingMode.TRUNCATE, RoundingMode.TOWARD_ZERO):
        return lo if x > 0 else hi
    if mode is RoundingMode.AWAY_FROM_ZERO:
        return hi if x > 0 else lo

    # half-* family
    if frac != 0.5:
        return hi if frac > 0.5 else lo
    if mode in (RoundingMode.HALF_AWAY_FROM_ZERO, RoundingMode.HALF_UP_SYMMETRIC):
        return hi if x > 0 else lo
    if mode is RoundingMode.HALF_UP_ASYMMETRIC:
        return hi
    if mode is RoundingMode.HALF_DOWN_SYMMETRIC:
        return lo if x > 0 else hi
    if mode is RoundingMode.HALF_DOWN_ASYMMETRIC:
        return lo
    if mode is RoundingMode.HALF_TO_EVEN:
        return lo if lo % 2 == 0 else hi
    if mode is RoundingMode.HALF_ODD:
        return lo if lo % 2 != 0 else hi
    raise TypeError(f"apply_mode: unknown rounding mode {mode!r}")


def conformance_table(
    modes: "list[RoundingMode] | tuple[RoundingMode, ...]",
    inputs: "list[float] | tuple[float, ...]",
) -> list[list[int]]:
    """One row per mode, one column per input, cell = apply_mode(input, mode)."""
    return [[apply_mode(x, mode) for x in inputs] for mode in modes]
