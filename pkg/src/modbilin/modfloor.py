"""Modulo-based improved-floor rounding for sums of weighted addends.

Each addend N/V (integer numerator, positive real divisor) is transformed
to (N + N mod V)/V before the sum is floored. When V divides N the addend
is already an integer and the transform is the identity; otherwise it
inflates the addend by the fractional part of N/V, which for exact
reciprocal divisors makes the final floor behave like round-half-up.

Divisors are built as 1/(w + eps) from interpolation weights, with a small
positive ``eps`` guarding against zero weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .rounding import RoundingMode, apply_mode, real_mod

#: Scheme name accepted by the error-profile operations alongside
#: RoundingMode values.
IMPROVED = "improved"

#: Short names for the standard rounding functions used in error profiles.
_NAMED_MODES = {
    "floor": RoundingMode.FLOOR,
    "ceil": RoundingMode.CEILING,
    "fix": RoundingMode.TOWARD_ZERO,
    "round": RoundingMode.HALF_AWAY_FROM_ZERO,
}

#: Canonical numerator/divisor vectors for the error-profile comparisons.
CANONICAL_NUMERATORS = (13, 11, 17, 19, 14, 13, 11, 11, 3, 9)
CANONICAL_DIVISORS = (4.0, 10.0, 3.0, 8.0, 3.0, 5.0, 7.0, 9.0, 2.0, 6.0)

SchemeLike = Union[RoundingMode, str]


class DivisorSet(NamedTuple):
    """Reciprocal divisors ``1/(w_i + eps)`` for four bilinear weights."""

    a: float
    b: float
    c: float
    d: float
    eps: float

    @property
    def values(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class AddendTrace:
    """One addend's journey through the modulo transform."""

    numerator: int
    divisor: float
    raw_quotient: float
    remainder: float
    transformed: float


@dataclass(frozen=True)
class ErrorProfile:
    """Absolute round-off errors of one scheme over a list of addends."""

    scheme: str
    per_addend_abs_errors: tuple[float, ...]
    total_abs_error: float


def make_divisors(weights: Sequence[float], eps: float) -> DivisorSet:
    """Build the per-addend divisors ``1/(w + eps)`` for four weights.

    ``eps`` must be strictly positive: it is what keeps the divisor finite
    when a weight is exactly zero.
    """
    if not (eps > 0 and math.isfinite(eps)):
        raise ValueError(f"make_divisors: eps must be a positive finite real, got {eps!r}")
    w1, w2, w3, w4 = weights
    for w in (w1, w2, w3, w4):
        if not (math.isfinite(w) and w >= 0):
            raise ValueError(f"make_divisors: weights must be finite and >= 0, got {w!r}")
    return DivisorSet(
        1.0 / (w1 + eps),
        1.0 / (w2 + eps),
        1.0 / (w3 + eps),
        1.0 / (w4 + eps),
        eps,
    )


def improved_addend(n: int, v: float) -> AddendTrace:
    """Transform one addend: ``(n + n mod v) / v``.

    The transformed value never falls below the raw quotient; it equals it
    exactly when v divides n.
    """
    if not v > 0:
        raise ValueError(f"improved_addend: divisor must be positive, got {v!r}")
    if n < 0:
        raise ValueError(f"improved_addend: numerator must be non-negative, got {n!r}")
    q = n / v
    r = real_mod(n, v)
    t = (n + r) / v
    return AddendTrace(numerator=n, divisor=v, raw_quotient=q, remainder=r, transformed=t)


def improved_floor_sum(
    numerators: Sequence[int], divisors: Sequence[float]
) -> int:
    """Floor of the sum of modulo-transformed addends.

    Addends are summed left to right; the result is
    ``floor(sum_x (N_x + N_x mod V_x) / V_x)``.
    """
    if len(numerators) != len(divisors):
        raise ValueError(
            "improved_floor_sum: numerators and divisors must have equal length "
            f"({len(numerators)} != {len(divisors)})"
        )
    if not numerators:
        raise ValueError("improved_floor_sum: at least one addend is required")
    total = 0.0
    for n, v in zip(numerators, divisors):
        total += improved_addend(n, v).transformed
    return math.floor(total)


def improved_floor_sum_swapped(
    neighborhood: Sequence[int], divisors: DivisorSet
) -> int:
    """Variant with the third and fourth main quotients' divisors exchanged.

    The main quotients of the last two numerators use each other's divisor
    while every remainder term keeps its original pairing:
    ``floor(n1/a + n2/b + n3/d + n4/c
    + (n1 mod a)/a + (n2 mod b)/b + (n3 mod c)/c + (n4 mod d)/d)``.
    """
    n1, n2, n3, n4 = neighborhood
    a, b, c, d = divisors.values
    for n in (n1, n2, n3, n4):
        if n < 0:
            raise ValueError(f"improved_floor_sum_swapped: numerators must be non-negative, got {n!r}")
    for v in (a, b, c, d):
        if not v > 0:
            raise ValueError(f"improved_floor_sum_swapped: divisors must be positive, got {v!r}")
    s = (
        n1 / a
        + n2 / b
        + n3 / d
        + n4 / c
        + real_mod(n1, a) / a
        + real_mod(n2, b) / b
        + real_mod(n3, c) / c
        + real_mod(n4, d) / d
    )
    return math.floor(s)


def _scheme_name(scheme: SchemeLike) -> str:
    if isinstance(scheme, RoundingMode):
        return scheme.value
    return str(scheme)


def _resolve_mode(scheme: SchemeLike) -> "RoundingMode | None":
    """Map a scheme argument to a RoundingMode, or None for the improved scheme."""
    if isinstance(scheme, RoundingMode):
        return scheme
    if scheme == IMPROVED:
        return None
    try:
        return _NAMED_MODES[scheme]
    except KeyError:
        raise ValueError(
            f"unknown scheme {scheme!r}; expected a RoundingMode, "
            f"one of {sorted(_NAMED_MODES)}, or {IMPROVED!r}"
        ) from None


def _rounded_quotient(n: int, v: float, scheme: SchemeLike) -> int:
    mode = _resolve_mode(scheme)
    if mode is None:
        return math.floor(improved_addend(n, v).transformed)
    return apply_mode(n / v, mode)


def _check_vectors(numerators: Sequence[int], divisors: Sequence[float]) -> None:
    if len(numerators) != len(divisors) or not numerators:
        raise ValueError("numerators and divisors must be non-empty and of equal length")


def per_addend_error_profile(
    numerators: Sequence[int],
    divisors: Sequence[float],
    schemes: Sequence[SchemeLike],
) -> list[ErrorProfile]:
    """Absolute error of rounding each addend separately, per scheme.

    For the standard modes the rounded value is ``mode(N/V)``; for the
    improved scheme it is the floor of the transformed addend.
    """
    _check_vectors(numerators, divisors)
    profiles = []
    for scheme in schemes:
        errors = []
        for n, v in zip(numerators, divisors):
            exact = n / v
            errors.append(abs(_rounded_quotient(n, v, scheme) - exact))
        profiles.append(
            ErrorProfile(_scheme_name(scheme), tuple(errors), sum(errors))
        )
    return profiles


def post_sum_rounded(
    numerators: Sequence[int],
    divisors: Sequence[float],
    scheme: SchemeLike,
) -> int:
    """Integer produced by a scheme when rounding happens after the sum.

    Standard modes round the plain sum of N/V quotients. The improved
    scheme's post-sum value is ``improved_floor_sum`` itself, i.e. the sum
    of transformed addends floored; the plain floor of the untransformed
    sum is available as the ``floor`` scheme for comparison.
    """
    _check_vectors(numerators, divisors)
    mode = _resolve_mode(scheme)
    if mode is None:
        return improved_floor_sum(numerators, divisors)
    return apply_mode(_quotient_sum(numerators, divisors), mode)


def _quotient_sum(numerators: Sequence[int], divisors: Sequence[float]) -> float:
    total = 0.0
    for n, v in zip(numerators, divisors):
        if not v > 0:
            raise ValueError(f"divisors must be positive, got {v!r}")
        if n < 0:
            raise ValueError(f"numerators must be non-negative, got {n!r}")
        total += n / v
    return total


def post_sum_error_profile(
    numerators: Sequence[int],
    divisors: Sequence[float],
    schemes: Sequence[SchemeLike],
) -> list[ErrorProfile]:
    """Absolute error of each scheme when rounding the whole sum once."""
    _check_vectors(numerators, divisors)
    exact = _quotient_sum(numerators, divisors)
    profiles = []
    for scheme in schemes:
        err = abs(post_sum_rounded(numerators, divisors, scheme) - exact)
        profiles.append(ErrorProfile(_scheme_name(scheme), (err,), err))
    return profiles
