"""Symbolic intersection oracle: reduction rules, ring laws, degree map."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relhyp import (
    ChowPolynomial,
    degree,
    divisor,
    h_class,
    multiply,
    power,
    sigma_class,
    unit,
)
from conftest import bundles, mk_bundle


@pytest.fixture
def b35():
    """Rank 3, degree 5."""
    return mk_bundle([(1, 3), (2, 2)])


class TestReduction:
    def test_h_times_sigma_survives(self, b35):
        p = multiply(h_class(b35), sigma_class(b35), b35)
        assert p.coeffs == {(1, 1): Fraction(1)}

    def test_h_cubed_fires_relation(self, b35):
        p = power(h_class(b35), 3, b35)
        assert p.coeffs == {(2, 1): Fraction(5)}

    def test_sigma_squared_zero(self, b35):
        assert multiply(sigma_class(b35), sigma_class(b35), b35).is_zero()

    def test_h_to_r_times_sigma_zero(self, b35):
        p = multiply(power(h_class(b35), 3, b35), sigma_class(b35), b35)
        assert p.is_zero()

    def test_h_above_top_dimension_zero(self, b35):
        assert power(h_class(b35), 4, b35).is_zero()

    def test_zero_coefficients_dropped(self, b35):
        p = ChowPolynomial(b35, {(1, 0): Fraction(0), (0, 1): Fraction(2)})
        assert p.coeffs == {(0, 1): Fraction(2)}


class TestDegree:
    def test_normalization(self, b35):
        top = multiply(power(h_class(b35), 2, b35), sigma_class(b35), b35)
        assert degree(top, b35) == 1

    def test_divisor_against_h_square(self, b35):
        # H^2 * (2H - S) = 2*5 - 1 = 9
        p = multiply(power(h_class(b35), 2, b35), divisor(2, -1, b35), b35)
        assert degree(p, b35) == 9

    def test_adjoint_power_times_class(self):
        # ((k-r)H - (y-d)S)^2 * (kH - yS) with r=3, k=5, d=7, y=2
        b = mk_bundle([(1, 4), (2, 3)])
        kf = divisor(2, 5, b)
        x = divisor(5, -2, b)
        assert degree(multiply(power(kf, 2, b), x, b), b) == 232

    def test_top_self_intersection(self):
        b = mk_bundle([(1, 3), (2, 1)])  # r=3, d=4
        p = power(divisor(1, -2, b), 3, b)
        assert degree(p, b) == -2  # a^3*d + 3*a^2*b = 4 - 6

    def test_positive_boundary_vanishes(self):
        b = mk_bundle([(1, 4), (2, 2)])  # r=3, d=6, mu=2
        p = power(divisor(1, -2, b), 3, b)
        assert degree(p, b) == 0

    def test_not_top_degree_rejected(self, b35):
        with pytest.raises(ValueError, match="not a top-degree class"):
            degree(h_class(b35), b35)

    def test_zero_polynomial_has_degree_zero(self, b35):
        assert degree(multiply(sigma_class(b35), sigma_class(b35), b35), b35) == 0


class TestRingLaws:
    def test_mismatched_context_rejected(self, b35):
        other = mk_bundle([(1, 1), (1, 0)])
        with pytest.raises(ValueError, match="mismatched bundle"):
            multiply(h_class(b35), h_class(other), b35)

    def test_unit_is_neutral(self, b35):
        p = divisor(3, -4, b35)
        assert multiply(p, unit(b35), b35) == p

    def test_negative_power_rejected(self, b35):
        with pytest.raises(ValueError):
            power(h_class(b35), -1, b35)

    small = st.integers(-5, 5)

    @settings(max_examples=60, deadline=None)
    @given(bundles(), small, small, small, small, small, small)
    def test_commutative_associative_distributive(self, b, a1, b1, a2, b2, a3, b3):
        p = divisor(a1, b1, b)
        q = divisor(a2, b2, b)
        s = divisor(a3, b3, b)
        assert multiply(p, q, b) == multiply(q, p, b)
        assert multiply(multiply(p, q, b), s, b) == multiply(p, multiply(q, s, b), b)
        assert multiply(p, q + s, b) == multiply(p, q, b) + multiply(p, s, b)

    @settings(max_examples=40, deadline=None)
    @given(bundles(), small, small, st.integers(0, 4))
    def test_power_matches_repeated_multiplication(self, b, a1, b1, e):
        p = divisor(a1, b1, b)
        expected = unit(b)
        for _ in range(e):
            expected = multiply(expected, p, b)
        assert power(p, e, b) == expected

    @settings(max_examples=60, deadline=None)
    @given(bundles(), small, small)
    def test_top_power_closed_form(self, b, a, bb):
        # deg((aH + bS)^r) = a^r * d + r * a^(r-1) * b
        r, d = b.rank, b.degree
        p = power(divisor(a, bb, b), r, b)
        assert degree(p, b) == a**r * d + r * a ** (r - 1) * bb
