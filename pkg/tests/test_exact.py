"""Rational helpers and the binomial vanishing convention."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from relhyp import binom, format_rational, parse_rational, rational_to_json


class TestBinom:
    def test_standard_value(self):
        assert binom(4, 2) == 6

    def test_vanishes_when_upper_below_lower(self):
        assert binom(1, 3) == 0

    def test_vanishes_for_negative_upper(self):
        assert binom(-2, 1) == 0

    def test_negative_lower_rejected(self):
        with pytest.raises(ValueError):
            binom(4, -1)

    @given(st.integers(-20, 40), st.integers(0, 40))
    def test_pascal_identity_under_convention(self, n, m):
        # C(n, m) = C(n-1, m-1) + C(n-1, m) survives the vanishing
        # convention for every n >= 0; m = 0 is the only special row.
        if m == 0:
            assert binom(n, 0) == (1 if n >= 0 else 0)
        elif n >= 0:
            assert binom(n, m) == binom(n - 1, m - 1) + binom(n - 1, m)
        else:
            assert binom(n, m) == 0

    @given(st.integers(0, 60), st.integers(0, 60))
    def test_symmetry(self, n, m):
        if 0 <= m <= n:
            assert binom(n, m) == binom(n, n - m)


class TestParseRational:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            (3, Fraction(3)),
            (-7, Fraction(-7)),
            ("2/3", Fraction(2, 3)),
            ("-5/10", Fraction(-1, 2)),
            (" 4 ", Fraction(4)),
            (Fraction(9, 4), Fraction(9, 4)),
        ],
    )
    def test_accepts(self, raw, expected):
        assert parse_rational(raw) == expected

    @pytest.mark.parametrize("raw", ["abc", "1/0", "", None, 1.5, True, [1]])
    def test_rejects(self, raw):
        with pytest.raises(ValueError):
            parse_rational(raw)

    @given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
    def test_roundtrip_through_string(self, num, den):
        q = Fraction(num, den)
        assert parse_rational(format_rational(q)) == q


class TestSerialization:
    def test_exact_pair(self):
        assert rational_to_json(Fraction(-3, 6)) == {"num": -1, "den": 2}

    def test_integer_pair(self):
        assert rational_to_json(Fraction(5)) == {"num": 5, "den": 1}

    @given(st.integers(-10**9, 10**9), st.integers(1, 10**6))
    def test_no_floats_and_positive_denominator(self, num, den):
        payload = rational_to_json(Fraction(num, den))
        assert isinstance(payload["num"], int)
        assert isinstance(payload["den"], int)
        assert payload["den"] >= 1
        assert Fraction(payload["num"], payload["den"]) == Fraction(num, den)

    def test_format(self):
        assert format_rational(Fraction(7)) == "7"
        assert format_rational(Fraction(-2, 3)) == "-2/3"
