"""Closed-form hypersurface invariants, combinatorics, positivity deciders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relhyp import (
    HypersurfaceSpec,
    alpha,
    beta,
    beta_factorization_check,
    canonical_invariants,
    f_positive,
    fibre_invariants,
    pushforward_rank_degree,
    relative_canonical_class,
    slope_inequality_report,
)
from relhyp.hypersurface import product_inequality_margin
from relhyp.report import oracle_crosscheck
from conftest import mk_bundle


def spec_for(r_pieces, k, y, genus=0):
    return HypersurfaceSpec(k, y, mk_bundle(r_pieces, genus=genus))


class TestSpecValidation:
    def test_bad_k(self):
        b = mk_bundle([(1, 2), (2, 0)])
        with pytest.raises(ValueError):
            HypersurfaceSpec(0, 1, b)
        with pytest.raises(ValueError):
            HypersurfaceSpec(2, Fraction(1, 2), b)

    def test_rank2_rejected(self):
        spec = HypersurfaceSpec(3, 1, mk_bundle([(1, 3), (1, 1)]))
        with pytest.raises(ValueError, match="rank >= 3"):
            fibre_invariants(spec)


class TestFibreInvariants:
    def test_plane_quintic_fibre(self):
        fib = fibre_invariants(spec_for([(1, 4), (2, 3)], k=5, y=2))
        assert fib.canonical_power == 10  # k*(k-r)^(r-2) = 5*2
        assert fib.geometric_genus == 6  # C(4, 2)
        assert fib.section_degree == 5

    def test_low_degree_fibre(self):
        fib = fibre_invariants(spec_for([(1, 2), (2, 0)], k=2, y=0))
        assert fib.canonical_power == -2
        assert fib.geometric_genus == 0


class TestRelativeCanonical:
    def test_ambient_class(self):
        rc = relative_canonical_class(spec_for([(1, 4), (2, 3)], k=5, y=2))
        assert (rc.ambient_class.a, rc.ambient_class.b) == (2, 5)
        assert rc.relatively_very_ample

    def test_anticanonical_degree(self):
        rc = relative_canonical_class(spec_for([(1, 1), (2, -1)], k=3, y=0))
        assert (rc.ambient_class.a, rc.ambient_class.b) == (0, 0)
        assert not rc.relatively_very_ample

    def test_k_equal_r_not_very_ample(self):
        rc = relative_canonical_class(spec_for([(1, 1), (3, 0)], k=4, y=1))
        assert (rc.ambient_class.a, rc.ambient_class.b) == (0, 0)
        assert not rc.relatively_very_ample


class TestCanonicalInvariants:
    def test_values(self):
        kf, deg = canonical_invariants(spec_for([(1, 4), (2, 3)], k=5, y=2))
        assert (kf, deg) == (232, 58)

    def test_boundary_vanishing(self):
        kf, deg = canonical_invariants(spec_for([(1, 2), (2, 1)], k=4, y=4))
        assert (kf, deg) == (0, 0)  # kd - ry = 0

    def test_negative_regime(self):
        kf, deg = canonical_invariants(spec_for([(1, 2), (2, 1)], k=4, y=5))
        assert (kf, deg) == (-9, -3)

    def test_k_le_r_rejected(self):
        with pytest.raises(ValueError, match="not very ample"):
            canonical_invariants(spec_for([(1, 2), (2, 0)], k=3, y=0))

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(1, 6),
        st.integers(-6, 6),
        st.integers(-6, 6),
    )
    def test_agrees_with_oracle(self, k_off, d_off, y):
        b = mk_bundle([(1, d_off + 3), (2, 2 * d_off)])
        k = b.rank + k_off
        kf, _ = canonical_invariants(HypersurfaceSpec(k, y, b))
        assert kf == oracle_crosscheck(b, k, y)


class TestPushforward:
    def test_truncated_power(self):
        rank, deg = pushforward_rank_degree(spec_for([(1, 3), (2, 2)], k=2, y=1), h=3)
        assert (rank, deg) == (7, 42)

    def test_below_relative_degree_full_symmetric_power(self):
        rank, deg = pushforward_rank_degree(spec_for([(1, 3), (2, 2)], k=4, y=9), h=1)
        assert (rank, deg) == (3, 5)  # the bundle itself

    def test_k1_quotient(self):
        rank, deg = pushforward_rank_degree(spec_for([(1, 3), (2, 2)], k=1, y=2), h=1)
        assert (rank, deg) == (2, 3)  # rank r-1 quotient of degree d - y

    def test_h_zero_rejected(self):
        with pytest.raises(ValueError):
            pushforward_rank_degree(spec_for([(1, 3), (2, 2)], k=2, y=1), h=0)


class TestAlphaBeta:
    def test_values(self):
        assert alpha(5, 1, 4) == 0
        assert alpha(2, 2, 3) == 6
        assert alpha(1, 3, 3) == 3

    def test_domain(self):
        with pytest.raises(ValueError):
            alpha(0, 1, 3)
        with pytest.raises(ValueError):
            alpha(1, 1, 1)
        with pytest.raises(ValueError):
            beta(1, 2, 3)
        with pytest.raises(ValueError):
            beta_factorization_check(3, 1, 3)

    @pytest.mark.parametrize("h, k, r", [(4, 2, 3), (2, 2, 3), (6, 5, 4)])
    def test_factorization(self, h, k, r):
        assert beta_factorization_check(h, k, r)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 30), st.integers(1, 30), st.integers(2, 8))
    def test_sign_dichotomy(self, h, k, r):
        a = alpha(h, k, r)
        if k == 1:
            assert a == 0
        else:
            assert a > 0

    @settings(max_examples=100, deadline=None)
    @given(st.integers(2, 30), st.integers(2, 30), st.integers(2, 8))
    def test_product_inequality_and_factorization(self, h, k, r):
        if h < k:
            return
        assert product_inequality_margin(h, k, r) >= 0
        assert beta_factorization_check(h, k, r)


class TestFPositivity:
    def test_positive_case(self):
        fp = f_positive(spec_for([(1, 4), (2, 2)], k=2, y=3), h=1)
        assert fp.f_positive and not fp.equality
        assert fp.margin == Fraction(alpha(1, 2, 3) * (6 * 2 - 3 * 3), 3)

    def test_negative_case(self):
        fp = f_positive(spec_for([(1, 4), (2, 2)], k=2, y=5), h=2)
        assert not fp.f_positive
        assert fp.margin < 0

    def test_k1_always_boundary(self):
        fp = f_positive(spec_for([(1, 4), (2, 2)], k=1, y=100), h=3)
        assert fp.f_positive and fp.equality and fp.margin == 0
        assert fp.warnings  # the k = 1 caveat is surfaced

    @settings(max_examples=120, deadline=None)
    @given(
        st.integers(2, 6),
        st.integers(-6, 6),
        st.integers(-6, 6),
        st.integers(1, 5),
    )
    def test_verdict_is_sign_of_kd_minus_ry(self, k, dd, y, h):
        b = mk_bundle([(1, dd + 2), (2, 2 * dd)])
        fp = f_positive(HypersurfaceSpec(k, y, b), h)
        assert fp.f_positive == (b.rank * y <= k * b.degree)
        assert fp.equality == (fp.margin == 0)


class TestSlopeInequality:
    def test_strict_case(self):
        rep = slope_inequality_report(spec_for([(1, 4), (2, 3)], k=5, y=2))
        assert rep.ratio_lt_mu and rep.invariants_positive and rep.slope_inequality_strict
        assert (rep.kf_power, rep.deg_pushforward) == (232, 58)

    def test_boundary_case(self):
        rep = slope_inequality_report(spec_for([(1, 2), (2, 1)], k=4, y=4))
        assert rep.slope_inequality and not rep.slope_inequality_strict
        assert rep.ratio_le_mu and not rep.ratio_lt_mu

    def test_semistable_bundle_case(self):
        rep = slope_inequality_report(spec_for([(3, 6)], k=5, y=3))
        assert rep.slope_inequality_strict

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 5), st.integers(-6, 6), st.integers(-6, 6))
    def test_three_way_equivalence_never_violated(self, k_off, dd, y):
        b = mk_bundle([(1, dd + 2), (2, 2 * dd)])
        rep = slope_inequality_report(HypersurfaceSpec(b.rank + k_off, y, b))
        assert rep.ratio_le_mu == rep.invariants_nonnegative == rep.slope_inequality
        assert rep.ratio_lt_mu == rep.invariants_positive == rep.slope_inequality_strict
