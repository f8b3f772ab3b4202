"""Modulo-based improved floor: divisors, addend transform, sums, profiles."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracle
from modbilin.modfloor import (
    CANONICAL_DIVISORS,
    CANONICAL_NUMERATORS,
    IMPROVED,
    DivisorSet,
    improved_addend,
    improved_floor_sum,
    improved_floor_sum_swapped,
    make_divisors,
    per_addend_error_profile,
    post_sum_error_profile,
    post_sum_rounded,
)
from modbilin.rounding import RoundingMode, apply_mode

EPS = 1e-9
T3 = (91, 162, 210, 95)
T4 = (125, 99, 255, 17)
QUARTER_WEIGHTS = (0.25, 0.25, 0.25, 0.25)


class TestMakeDivisors:
    def test_quarter_weights_near_four(self):
        d = make_divisors(QUARTER_WEIGHTS, EPS)
        for v in d.values:
            assert v == 1.0 / (0.25 + EPS)
            assert v == pytest.approx(4.0, rel=1e-8)

    def test_zero_weight_guarded(self):
        d = make_divisors((0.0, 0.5, 0.5, 0.0), EPS)
        assert d.a == 1.0 / EPS
        assert math.isfinite(d.a)
        assert d.b == pytest.approx(2.0, rel=1e-8)

    def test_eps_zero_rejected(self):
        with pytest.raises(ValueError):
            make_divisors(QUARTER_WEIGHTS, 0.0)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            make_divisors((-0.1, 0.5, 0.3, 0.3), EPS)

    @given(
        st.tuples(*[st.floats(0.0, 1.0, allow_nan=False) for _ in range(4)]),
        st.floats(1e-12, 1e-3),
    )
    def test_divisor_window(self, ws, eps):
        d = make_divisors(ws, eps)
        for v in d.values:
            assert 1.0 / (1.0 + eps) <= v <= 1.0 / eps
            assert v > 0 and math.isfinite(v)


class TestImprovedAddend:
    @pytest.mark.parametrize(
        "n,v,transformed,remainder",
        [(13, 4.0, 3.5, 1.0), (91, 4.0, 23.5, 3.0), (124, 4.0, 31.0, 0.0)],
    )
    def test_examples(self, n, v, transformed, remainder):
        t = improved_addend(n, v)
        assert t.transformed == transformed
        assert t.remainder == remainder
        assert t.raw_quotient == n / v

    def test_zero_remainder_is_identity(self):
        t = improved_addend(124, 4.0)
        assert t.transformed == t.raw_quotient == 31.0

    def test_invalid_divisor(self):
        with pytest.raises(ValueError):
            improved_addend(5, 0.0)
        with pytest.raises(ValueError):
            improved_addend(5, -1.0)

    def test_negative_numerator_rejected(self):
        with pytest.raises(ValueError):
            improved_addend(-1, 4.0)

    @given(st.integers(0, 255), st.floats(0.01, 1e6))
    def test_transform_inflation(self, n, v):
        t = improved_addend(n, v)
        assert t.transformed >= t.raw_quotient
        assert 0.0 <= t.remainder < v
        # inflation equals the fractional part, strictly below 1
        assert t.transformed - t.raw_quotient < 1.0 + 1e-12


class TestImprovedFloorSum:
    def test_worked_half_quad(self):
        divisors = make_divisors(QUARTER_WEIGHTS, EPS)
        assert improved_floor_sum(T3, divisors.values) == 142
        assert oracle.improved_floor(T3, oracle.divisors_of(Fraction(1, 2), Fraction(1, 2))) == 142

    def test_worked_integer_quad(self):
        # exact bilinear value is 124; the transform inflates it to 126
        divisors = make_divisors(QUARTER_WEIGHTS, EPS)
        assert improved_floor_sum(T4, divisors.values) == 126
        assert oracle.improved_floor(T4, oracle.divisors_of(Fraction(1, 2), Fraction(1, 2))) == 126

    def test_all_zero_numerators(self):
        assert improved_floor_sum((0, 0, 0, 0), (4.0, 4.0, 4.0, 4.0)) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            improved_floor_sum((1, 2), (4.0,))

    def test_empty(self):
        with pytest.raises(ValueError):
            improved_floor_sum((), ())

    def test_eps_insensitive_window(self):
        # output is stable across small eps until the bias itself matters
        for eps in (1e-12, 1e-10, 1e-9, 1e-8):
            divisors = make_divisors(QUARTER_WEIGHTS, eps)
            assert improved_floor_sum(T3, divisors.values) == 142

    def test_expanded_form_agrees(self):
        # (n + r)/v versus n/v + r/v: identical in rationals, within 4 ulp in floats
        divisors = make_divisors((0.375, 0.375, 0.125, 0.125), EPS)
        factored = 0.0
        expanded = 0.0
        for n, v in zip(T3, divisors.values):
            r = n % v
            factored += (n + r) / v
            expanded += n / v + r / v
        assert expanded == pytest.approx(factored, abs=4 * math.ulp(factored))
        rational = [Fraction(1, 1) / (Fraction(w) + Fraction(EPS)) for w in (0.375, 0.375, 0.125, 0.125)]
        lhs = oracle.improved_sum(T3, rational)
        rhs = sum(
            Fraction(n) / v + oracle.floored_mod(Fraction(n), v) / v
            for n, v in zip(T3, rational)
        )
        assert lhs == rhs


class TestSwappedSum:
    def test_identity_when_divisors_equal(self):
        divisors = make_divisors(QUARTER_WEIGHTS, EPS)
        assert improved_floor_sum_swapped(T3, divisors) == improved_floor_sum(T3, divisors.values)

    def test_asymmetric_case_matches_oracle(self):
        # weights (0.5, 0, 0.5, 0): the third/fourth divisors genuinely differ
        divisors = make_divisors((0.5, 0.0, 0.5, 0.0), EPS)
        got = improved_floor_sum_swapped(T3, divisors)
        want = oracle.swapped_floor(T3, oracle.divisors_of(0, Fraction(1, 2)))
        assert got == want == 93

    def test_half_row_case_matches_oracle(self):
        divisors = make_divisors((0.5, 0.5, 0.0, 0.0), EPS)
        got = improved_floor_sum_swapped(T3, divisors)
        want = oracle.swapped_floor(T3, oracle.divisors_of(Fraction(1, 2), 0))
        assert got == want == 127

    def test_all_zero_neighborhood(self):
        divisors = make_divisors(QUARTER_WEIGHTS, EPS)
        assert improved_floor_sum_swapped((0, 0, 0, 0), divisors) == 0

    def test_invalid_divisor(self):
        with pytest.raises(ValueError):
            improved_floor_sum_swapped(T3, DivisorSet(4.0, 4.0, 0.0, 4.0, EPS))


class TestHalfUpEquivalence:
    """For exact reciprocal divisors the transform flooring acts as
    asymmetric round-half-up on each quotient."""

    @pytest.mark.parametrize("d", range(2, 17))
    def test_integer_divisors(self, d):
        for n in range(0, 256):
            want = apply_mode(n / d, RoundingMode.HALF_UP_ASYMMETRIC)
            got = oracle.transformed_addend(n, d).__floor__()
            assert got == want, (n, d)

    @pytest.mark.parametrize("p,q", [(3, 2), (4, 3), (5, 2), (5, 4), (6, 5), (7, 3), (7, 2)])
    def test_small_rational_divisors(self, p, q):
        v = Fraction(p, q)
        for n in range(0, 256):
            x = float(Fraction(n) / v)  # correctly rounded true quotient
            want = apply_mode(x, RoundingMode.HALF_UP_ASYMMETRIC)
            got = oracle.transformed_addend(n, v).__floor__()
            assert got == want, (n, p, q)


class TestErrorProfiles:
    def test_canonical_totals_ordering(self):
        profiles = per_addend_error_profile(
            CANONICAL_NUMERATORS,
            CANONICAL_DIVISORS,
            ("floor", "ceil", "fix", "round", IMPROVED),
        )
        totals = {p.scheme: p.total_abs_error for p in profiles}
        assert totals[IMPROVED] == pytest.approx(totals["round"], abs=1e-12)
        assert totals["floor"] == totals["fix"]
        assert totals[IMPROVED] < totals["floor"] < totals["ceil"]

    def test_canonical_errors_match_oracle(self):
        for scheme in ("floor", "ceil", "fix", "round", IMPROVED):
            (profile,) = per_addend_error_profile(
                CANONICAL_NUMERATORS, CANONICAL_DIVISORS, (scheme,)
            )
            want = oracle.per_addend_errors(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, scheme)
            for got_err, want_err in zip(profile.per_addend_abs_errors, want):
                assert got_err == pytest.approx(float(want_err), abs=1e-12)

    def test_profile_total_is_sum(self):
        profiles = per_addend_error_profile(
            CANONICAL_NUMERATORS, CANONICAL_DIVISORS, ("floor", IMPROVED)
        )
        for p in profiles:
            assert p.total_abs_error == sum(p.per_addend_abs_errors)

    def test_single_half_integer_addend(self):
        for scheme in ("floor", "ceil", IMPROVED):
            (profile,) = per_addend_error_profile((3,), (2.0,), (scheme,))
            assert profile.total_abs_error == 0.5

    def test_accepts_rounding_mode_objects(self):
        (profile,) = per_addend_error_profile((3,), (2.0,), (RoundingMode.CEILING,))
        assert profile.scheme == "ceiling"
        assert profile.total_abs_error == 0.5

    def test_unknown_scheme_rejected(self):
        with pytest.raises(ValueError):
            per_addend_error_profile((3,), (2.0,), ("bogus",))


class TestPostSumProfiles:
    def test_canonical_post_sum(self):
        profiles = post_sum_error_profile(
            CANONICAL_NUMERATORS,
            CANONICAL_DIVISORS,
            ("floor", "fix", "round", "ceil"),
        )
        by_name = {p.scheme: p.total_abs_error for p in profiles}
        assert by_name["floor"] == by_name["fix"] == by_name["round"]
        assert by_name["ceil"] > by_name["floor"]

    def test_improved_post_sum_value_reported(self):
        # transformed-sum reading; the plain floor row is the other reading
        assert post_sum_rounded(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, IMPROVED) == 29
        assert post_sum_rounded(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, "floor") == 25
        assert post_sum_rounded(CANONICAL_NUMERATORS, CANONICAL_DIVISORS, "ceil") == 26

    def test_integer_sum_all_zero_error(self):
        profiles = post_sum_error_profile(
            (2, 2), (2.0, 2.0), ("floor", "ceil", "fix", "round", IMPROVED)
        )
        for p in profiles:
            assert p.total_abs_error == 0.0

    def test_single_half_quotient(self):
        profiles = post_sum_error_profile((1,), (2.0,), ("floor", "ceil"))
        assert [p.total_abs_error for p in profiles] == [0.5, 0.5]
