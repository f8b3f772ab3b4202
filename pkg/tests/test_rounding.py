"""Rounding modes: golden conformance tables and scalar properties."""

import math

import pytest
from hypothesis import given, strategies as st

from modbilin.rounding import (
    IEEE_EXAMPLE_INPUTS,
    IEEE_MODES,
    MAXFIELD_INPUTS,
    MAXFIELD_MODES,
    RoundingMode,
    apply_mode,
    conformance_table,
    floor_via_mod,
    real_mod,
)

M = RoundingMode

# 5 rules x {+11.5, +12.5, -11.5, -12.5}
TABLE1_GOLDEN = [
    [12, 12, -12, -12],  # half-to-even
    [12, 13, -12, -13],  # half-away-from-zero
    [11, 12, -11, -12],  # toward-zero
    [12, 13, -11, -12],  # toward +inf
    [11, 12, -12, -13],  # toward -inf
]

# 10 modes x 17 inputs (-2.0 .. 2.0); "-0" cells are plain 0
TABLE2_GOLDEN = [
    [-2, -2, -2, -1, -1, -1, -1, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2],  # R-H-U (s)
    [-2, -2, -1, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2],   # R-H-U (a)
    [-2, -2, -1, -1, -1, -1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2],   # R-H-D (s)
    [-2, -2, -2, -1, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2],  # R-H-D (a)
    [-2, -2, -2, -1, -1, -1, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2],   # R-H-E
    [-2, -2, -1, -1, -1, -1, -1, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2],  # R-H-O
    [-2, -1, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2],    # R-C
    [-2, -2, -2, -2, -1, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 2], # R-F
    [-2, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2],    # R-T-Z
    [-2, -2, -2, -2, -1, -1, -1, -1, 0, 1, 1, 1, 1, 2, 2, 2, 2], # R-A-F-Z
]

# grid of doubles with exactly representable fractional structure
dyadic = st.integers(-2**22, 2**22).map(lambda k: k / 1024.0)
half_integers = st.integers(-10**6, 10**6).map(lambda n: n + 0.5)


class TestRealMod:
    def test_integer_examples(self):
        assert real_mod(13, 4) == 1
        assert real_mod(91, 4) == 3

    def test_fractional_example(self):
        assert real_mod(3.25, 1) == 0.25

    def test_sign_follows_divisor(self):
        assert real_mod(-1.5, 1.0) == 0.5
        assert real_mod(1.5, -1.0) == -0.5

    def test_zero_divisor_rejected(self):
        with pytest.raises(ValueError):
            real_mod(1.0, 0.0)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            real_mod(math.inf, 1.0)

    def test_subulp_edge_stays_in_range(self):
        # true remainder 1 - 1e-20 rounds to 1.0; the guard collapses it
        assert 0.0 <= real_mod(-1e-20, 1.0) < 1.0

    @given(dyadic)
    def test_unit_modulus_range_and_integrality(self, x):
        r = real_mod(x, 1.0)
        assert 0.0 <= r < 1.0
        n = x - r
        assert n == int(n)

    @given(dyadic, st.sampled_from([0.25, 0.5, 1.0, 2.0, 3.0, 7.5]))
    def test_range_for_positive_divisor(self, a, b):
        assert 0.0 <= real_mod(a, b) < b


class TestFloorViaMod:
    @pytest.mark.parametrize(
        "x,expected", [(3.25, 3), (-1.5, -2), (2.0, 2), (0.0, 0), (-0.25, -1)]
    )
    def test_examples(self, x, expected):
        assert floor_via_mod(x) == expected

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            floor_via_mod(math.nan)

    @given(dyadic)
    def test_matches_math_floor(self, x):
        assert floor_via_mod(x) == math.floor(x)


class TestApplyMode:
    @pytest.mark.parametrize(
        "x,mode,expected",
        [
            (12.5, M.HALF_TO_EVEN, 12),
            (-11.5, M.TOWARD_NEGATIVE_INFINITY, -12),
            (-1.5, M.HALF_UP_ASYMMETRIC, -1),
            (-0.5, M.HALF_DOWN_SYMMETRIC, 0),
            (0.7, M.TRUNCATE, 0),
            (0.3, M.AWAY_FROM_ZERO, 1),
        ],
    )
    def test_examples(self, x, mode, expected):
        assert apply_mode(x, mode) == expected

    @pytest.mark.parametrize("mode", list(RoundingMode))
    def test_zero_fixed_point(self, mode):
        assert apply_mode(0.0, mode) == 0

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            apply_mode(math.inf, M.CEILING)

    @given(st.integers(-10**9, 10**9), st.sampled_from(list(RoundingMode)))
    def test_integer_fixed_points(self, k, mode):
        assert apply_mode(float(k), mode) == k

    @given(dyadic, st.sampled_from(list(RoundingMode)))
    def test_bracketing(self, x, mode):
        r = apply_mode(x, mode)
        assert math.floor(x) <= r <= math.ceil(x)

    @given(dyadic, dyadic, st.sampled_from(list(RoundingMode)))
    def test_monotonic(self, x, y, mode):
        lo, hi = sorted((x, y))
        assert apply_mode(lo, mode) <= apply_mode(hi, mode)

    @given(half_integers)
    def test_half_to_even_parity(self, x):
        assert apply_mode(x, M.HALF_TO_EVEN) % 2 == 0

    @given(half_integers)
    def test_half_odd_parity(self, x):
        assert apply_mode(x, M.HALF_ODD) % 2 != 0

    @given(dyadic)
    def test_floor_aliases(self, x):
        assert apply_mode(x, M.FLOOR) == apply_mode(x, M.TOWARD_NEGATIVE_INFINITY)

    @given(dyadic)
    def test_truncate_aliases(self, x):
        assert apply_mode(x, M.TRUNCATE) == apply_mode(x, M.TOWARD_ZERO)

    @given(dyadic)
    def test_half_up_symmetric_is_half_away(self, x):
        assert apply_mode(x, M.HALF_UP_SYMMETRIC) == apply_mode(x, M.HALF_AWAY_FROM_ZERO)

    @given(dyadic)
    def test_half_up_variants_agree_off_negative_ties(self, x):
        sym = apply_mode(x, M.HALF_UP_SYMMETRIC)
        asym = apply_mode(x, M.HALF_UP_ASYMMETRIC)
        is_negative_half = x < 0 and (x - math.floor(x)) == 0.5
        if is_negative_half:
            assert asym == sym + 1
        else:
            assert asym == sym

    @given(dyadic, st.sampled_from(list(RoundingMode)))
    def test_result_within_one(self, x, mode):
        if x != math.floor(x):
            assert abs(apply_mode(x, mode) - x) < 1


class TestConformanceTable:
    def test_table1_golden(self):
        assert conformance_table(IEEE_MODES, IEEE_EXAMPLE_INPUTS) == TABLE1_GOLDEN

    def test_table2_golden(self):
        assert conformance_table(MAXFIELD_MODES, MAXFIELD_INPUTS) == TABLE2_GOLDEN

    def test_empty_inputs(self):
        assert conformance_table(IEEE_MODES, []) == [[], [], [], [], []]

    def test_empty_modes(self):
        assert conformance_table([], IEEE_EXAMPLE_INPUTS) == []
