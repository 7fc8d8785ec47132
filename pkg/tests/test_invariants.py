"""Bound intervals: weights, scales, rigorous decimal endpoints."""

import os
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from braidcount.braid import HALF_TWIST, evaluate, normal_form, parse_braid
from braidcount.invariants import (
    DEFAULT_PRECISION_BITS,
    ENTROPY_LOWER_SCALE,
    ENTROPY_PER_EXTREMAL_LENGTH,
    ENTROPY_UPPER_SCALE,
    EXTREMAL_LOWER_SCALE,
    EXTREMAL_UPPER_SCALE,
    BoundInterval,
    LogInteger,
    Scale,
    directed_fraction_decimal,
    entropy_bounds,
    extremal_length_bounds_braid,
    extremal_length_bounds_word,
    lower_weight,
    scaled_log_decimal,
    upper_weight,
    working_precision,
)
from braidcount.words import parse_word, syllable_decompose

degree_lists = st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=6)


class TestLogInteger:
    def test_ordering(self):
        assert LogInteger(1) < LogInteger(2) < LogInteger(10)
        assert LogInteger(1).is_zero
        assert not LogInteger(2).is_zero

    def test_multiplication_by_count(self):
        assert LogInteger(2) * 3 == LogInteger(8)

    def test_addition_multiplies_arguments(self):
        assert LogInteger(6) + LogInteger(4) == LogInteger(24)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            LogInteger(0)


class TestWeights:
    @given(degree_lists)
    def test_weight_products(self, degrees):
        terms = []
        gen = 1
        for d in degrees:
            terms.append((gen, 2 * d))
            gen = 3 - gen
        w = parse_word(" ".join(f"a{g}^{e}" for g, e in terms))
        lo, hi = 1, 1
        for d in syllable_decompose(w).degrees():
            lo *= 3 * d
            hi *= 4 * d
        assert lower_weight(w) == LogInteger(lo)
        assert upper_weight(w) == LogInteger(hi)

    def test_scales(self):
        assert EXTREMAL_LOWER_SCALE == Scale(Fraction(1, 2), -1)
        assert EXTREMAL_UPPER_SCALE == Scale(Fraction(300), 0)
        assert ENTROPY_LOWER_SCALE == Scale(Fraction(1, 4), 0)
        assert ENTROPY_UPPER_SCALE == Scale(Fraction(150), 1)
        assert ENTROPY_PER_EXTREMAL_LENGTH == Scale(Fraction(1, 2), 1)


class TestWordBounds:
    def test_zero_iff_single_syllable_word(self):
        for text in ("", "a1", "a1^5", "a2^-3"):
            assert extremal_length_bounds_word(parse_word(text)).exact_zero

    def test_unit_pair_example(self):
        iv = extremal_length_bounds_word(parse_word("a1 a2"))
        assert not iv.exact_zero
        assert iv.lower_log_arg == LogInteger(6)
        assert iv.upper_log_arg == LogInteger(8)

    def test_two_syllable_example(self):
        iv = extremal_length_bounds_word(parse_word("a1^2 a2^2"))
        assert iv.lower_log_arg == LogInteger(36)
        assert iv.upper_log_arg == LogInteger(64)

    def test_opposite_signs_split(self):
        iv = extremal_length_bounds_word(parse_word("a1 a2^-1"))
        assert iv.lower_log_arg == LogInteger(9)
        assert iv.upper_log_arg == LogInteger(16)

    @given(degree_lists)
    def test_interval_is_ordered(self, degrees):
        terms = " ".join(
            f"a{1 + i % 2}^{2 * d}" for i, d in enumerate(degrees)
        )
        iv = extremal_length_bounds_word(parse_word(terms))
        if iv.exact_zero:
            return
        assert Decimal(iv.lower_decimal()) < Decimal(iv.upper_decimal())


class TestBraidBounds:
    def test_zero_cases(self):
        for text in ("", "D", "D^2", "s1^4", "s2^-2"):
            assert extremal_length_bounds_braid(evaluate(parse_braid(text))).exact_zero

    def test_matches_projected_word(self):
        x = evaluate(parse_braid("s1^2 s2^2"))
        got = extremal_length_bounds_braid(x)
        assert not got.exact_zero
        assert got.lower_log_arg == LogInteger(6)
        assert got.upper_log_arg == LogInteger(8)

    def test_accepts_multiple_input_types(self):
        b = parse_braid("s1^2 s2^2")
        x = evaluate(b)
        form = normal_form(x)
        assert (
            extremal_length_bounds_braid(b)
            == extremal_length_bounds_braid(x)
            == extremal_length_bounds_braid(form)
        )

    def test_invariant_under_half_twist(self):
        x = evaluate(parse_braid("s1^3 s2^-2 s1"))
        assert extremal_length_bounds_braid(x) == extremal_length_bounds_braid(
            x * HALF_TWIST
        )

    def test_single_power_with_nontrivial_tail_is_positive(self):
        # sigma_1 sigma_2^2 projects to a one-term word but has a tail,
        # so the interval comes from the normal-form weights directly
        x = evaluate(parse_braid("s1 s2^2"))
        assert not extremal_length_bounds_braid(x).exact_zero


class TestEntropy:
    def test_requires_syllable_reduced(self):
        with pytest.raises(ValueError):
            entropy_bounds(parse_word("a1 a2 a1^-1"))

    def test_requires_multiple_syllables(self):
        with pytest.raises(ValueError):
            entropy_bounds(parse_word("a1^4"))

    def test_example(self):
        ent = entropy_bounds(parse_word("a1^2 a2^2"))
        assert ent.lower_log_arg == LogInteger(36)
        assert ent.upper_log_arg == LogInteger(64)
        assert ent.lower_scale == ENTROPY_LOWER_SCALE
        assert ent.upper_scale == ENTROPY_UPPER_SCALE

    def test_scaling_against_extremal_length(self):
        # entropy lower endpoint = (pi/2) * extremal lower endpoint
        w = parse_word("a1^2 a2^2")
        ext = extremal_length_bounds_word(w)
        ent = entropy_bounds(w)
        ratio = (
            ENTROPY_PER_EXTREMAL_LENGTH.rational
            * ext.lower_scale.rational
            / ent.lower_scale.rational
        )
        assert ratio == 1
        assert (
            ENTROPY_PER_EXTREMAL_LENGTH.pi_power
            + ext.lower_scale.pi_power
            - ent.lower_scale.pi_power
            == 0
        )


class TestDecimals:
    def test_directed_rounding(self):
        third = Fraction(1, 3)
        lo = directed_fraction_decimal(third, "lower")
        hi = directed_fraction_decimal(third, "upper")
        assert Fraction(lo) < third < Fraction(hi)
        assert directed_fraction_decimal(Fraction(27, 2), "upper") == "13.5"

    @given(st.integers(min_value=2, max_value=10**6))
    def test_enclosure(self, arg):
        log_arg = LogInteger(arg)
        lo = Fraction(scaled_log_decimal(EXTREMAL_LOWER_SCALE, log_arg, "lower"))
        hi = Fraction(scaled_log_decimal(EXTREMAL_LOWER_SCALE, log_arg, "upper"))
        with mpmath.workprec(256):
            truth = mpmath.log(arg) / (2 * mpmath.pi)
            assert lo <= Fraction(mpmath.nstr(truth, 40)) <= hi
        assert (hi - lo) / hi < Fraction(1, 10**9)

    def test_precision_env_var(self, monkeypatch):
        monkeypatch.delenv("BRAIDCOUNT_PRECISION", raising=False)
        assert working_precision() == DEFAULT_PRECISION_BITS
        monkeypatch.setenv("BRAIDCOUNT_PRECISION", "64")
        assert working_precision() == 64
        monkeypatch.setenv("BRAIDCOUNT_PRECISION", "4")
        with pytest.raises(ValueError):
            working_precision()

    def test_low_precision_still_encloses(self, monkeypatch):
        monkeypatch.setenv("BRAIDCOUNT_PRECISION", "16")
        lo = Fraction(scaled_log_decimal(EXTREMAL_UPPER_SCALE, LogInteger(8), "lower"))
        hi = Fraction(scaled_log_decimal(EXTREMAL_UPPER_SCALE, LogInteger(8), "upper"))
        with mpmath.workprec(128):
            truth = Fraction(mpmath.nstr(300 * mpmath.log(8), 40))
        assert lo <= truth <= hi

    def test_interval_json_keys(self):
        iv = extremal_length_bounds_word(parse_word("a1 a2"))
        assert list(iv.to_json()) == [
            "exact_zero",
            "lower_log_arg",
            "upper_log_arg",
            "lower_value",
            "upper_value",
        ]

    def test_zero_interval_renders_zero(self):
        iv = extremal_length_bounds_word(parse_word("a1"))
        assert iv.lower_decimal() == "0"
        assert iv.upper_decimal() == "0"
