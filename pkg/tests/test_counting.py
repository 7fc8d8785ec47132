"""Exact counting functions, analytic bounds, and threshold certification."""

from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from braidcount.counting import (
    BoundNotApplicable,
    bound_tuples_j,
    bound_tuples_total,
    bound_words,
    count_tuples,
    count_tuples_j,
    count_words,
    count_words_bounded,
    max_tuple_length,
    parse_y_expression,
    threshold_from_y,
)
from braidcount.oracle import brute_count_tuples, word_product_histogram


class TestTupleCounts:
    def test_length_one_is_floor(self):
        for x in (0, 1, 2, 3, 4, 8, 9, 100, 12345):
            assert count_tuples_j(1, x) == x // 3

    def test_small_values(self):
        assert count_tuples(2) == 0
        assert count_tuples(3) == 1
        assert count_tuples(9) == 4
        assert count_tuples_j(2, 9) == 1
        # 9*d1*d2 <= 18: (1,1), (1,2), (2,1)
        assert count_tuples_j(2, 18) == 3

    def test_zero_exactly_below_power(self):
        for j in range(1, 9):
            assert count_tuples_j(j, 3**j - 1) == 0
            assert count_tuples_j(j, 3**j) == 1

    def test_max_tuple_length(self):
        assert max_tuple_length(2) == 0
        assert max_tuple_length(3) == 1
        assert max_tuple_length(27) == 3
        assert max_tuple_length(28) == 3

    def test_total_sums_lengths(self):
        for x in (1, 3, 10, 81, 500):
            total = sum(
                count_tuples_j(j, x) for j in range(1, max_tuple_length(x) + 1)
            )
            assert count_tuples(x) == total

    @given(st.integers(min_value=0, max_value=800))
    def test_matches_oracle(self, x):
        assert count_tuples(x) == brute_count_tuples(x)

    @given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=600))
    def test_monotone_in_x(self, j, x):
        assert count_tuples_j(j, x) <= count_tuples_j(j, x + 1)

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            count_tuples_j(0, 10)


class TestTupleBounds:
    def test_not_applicable_below_power(self):
        with pytest.raises(BoundNotApplicable):
            bound_tuples_j(2, 8)

    def test_exact_at_small_arguments(self):
        assert bound_tuples_j(1, 9) == Fraction(3)

    def test_second_length_value(self):
        # (2/9) * 9 * log(2*9/9) = 2 log 2 = 1.386...
        got = bound_tuples_j(2, 9)
        with mpmath.workprec(128):
            truth = Fraction(mpmath.nstr(2 * mpmath.log(2), 40))
        assert truth <= got <= truth + Fraction(1, 10**20)

    def test_total_bound_at_three(self):
        assert bound_tuples_total(3) == 1

    @given(st.integers(min_value=1, max_value=2000))
    def test_exact_below_bounds(self, x):
        if x >= 3:
            assert count_tuples(x) <= bound_tuples_total(x)
        for j in range(1, max_tuple_length(x) + 1):
            assert count_tuples_j(j, x) <= bound_tuples_j(j, x)


class TestWordCounts:
    def test_small_values(self):
        assert count_words(0) == 0
        assert count_words(2) == 0
        assert count_words(3) == 4
        assert count_words(6) == 12
        assert count_words(9) == 24
        assert count_words(27) == 124

    def test_frozen_large_value(self):
        assert count_words(3**10) == 24553292

    def test_matches_oracle(self):
        # one enumeration pass; degree 10 covers every word of weight <= 30
        hist = word_product_histogram(10)
        for x in range(31):
            brute = sum(c for (_, p), c in hist.items() if p <= x)
            assert count_words(x) == brute

    def test_bounded_matches_oracle(self):
        hist = word_product_histogram(8)
        for limit in range(9):
            for x in (5, 9, 27, 100, 3**8):
                brute = sum(
                    c for (l, p), c in hist.items() if l <= limit and p <= x
                )
                assert count_words_bounded(x, limit) == brute

    def test_bounded_agrees_when_slack(self):
        for x in (3, 9, 27, 81):
            assert count_words_bounded(x, 10**6) == count_words(x)

    def test_bounded_monotone_in_degree(self):
        # weight 27 caps the degree at 9, so the limits exhaust the count
        prev = 0
        for limit in range(0, 10):
            n = count_words_bounded(27, limit)
            assert n >= prev
            prev = n
        assert prev == count_words(27)

    def test_bounded_rejects_negative(self):
        with pytest.raises(ValueError):
            count_words_bounded(9, -1)

    def test_worker_partitions_agree(self):
        x = 3**8
        base = count_words(x)
        for workers in (2, 3, 8):
            assert count_words(x, workers=workers) == base

    @given(st.integers(min_value=0, max_value=1500))
    def test_cube_inequality(self, x):
        assert 2 * count_words(x) <= x**3


class TestWordBounds:
    def test_chain_at_three(self):
        chain = bound_words(3)
        assert chain.cube_half == Fraction(27, 2)
        assert chain.chain_index == 1
        assert chain.chain_value == 8

    def test_chain_at_nine(self):
        chain = bound_words(9)
        assert chain.cube_half == Fraction(729, 2)
        assert chain.chain_value == 2 * 4**chain.chain_index * count_tuples(9)

    @given(st.integers(min_value=3, max_value=2000))
    def test_count_below_chain(self, x):
        chain = bound_words(x)
        n = count_words(x)
        assert n <= chain.chain_value
        assert n <= chain.cube_half


class TestThresholds:
    def test_spot_values(self):
        assert threshold_from_y("log(3)") == 3
        assert threshold_from_y(0) == 1
        assert threshold_from_y(2) == 7
        assert threshold_from_y("pi") == 23

    def test_anchor_value_is_exact_power(self):
        assert threshold_from_y("600*log(8)") == 8**600

    def test_accepts_many_input_types(self):
        assert threshold_from_y(sympy.log(3)) == 3
        assert threshold_from_y(Fraction(1, 2)) == 1
        assert threshold_from_y(0.5) == 1
        assert threshold_from_y(1) == 2

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            threshold_from_y(-1)

    def test_parser_rejects_symbols(self):
        for text in ("x + 1", "oops(2)", "import os"):
            with pytest.raises(ValueError):
                parse_y_expression(text)

    def test_parser_accepts_constants(self):
        expr = parse_y_expression("600*pi*log(8)")
        assert expr == 600 * sympy.pi * sympy.log(8)

    @given(st.fractions(min_value=0, max_value=30))
    def test_floor_certificate(self, y):
        # independent numeric check: X <= e^y < X + 1
        x = threshold_from_y(y)
        with mpmath.workprec(200):
            val = mpmath.exp(mpmath.mpf(y.numerator) / y.denominator)
            assert x <= val < x + 1
