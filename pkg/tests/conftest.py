"""Shared fixtures and hypothesis strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from relhyp import CurveData, validate


def mk_bundle(pieces, genus=0):
    return validate(pieces, CurveData(genus=genus))


@pytest.fixture
def rank2_unstable():
    """Ruled surface data: slopes 3 > 1, d = 4, mu = 2."""
    return mk_bundle([(1, 3), (1, 1)])


@pytest.fixture
def rank3_bundle():
    """Rank 3, pieces (1,2),(2,0): slopes 2 > 0, d = 2, mu = 2/3."""
    return mk_bundle([(1, 2), (2, 0)])


@pytest.fixture
def rank3_triple():
    """Rank 3 with three pieces, slopes 10 > 5 > 0, d = 15, mu = 5."""
    return mk_bundle([(1, 10), (1, 5), (1, 0)])


@pytest.fixture
def semistable_rank3():
    """Single piece (3,6): semistable, mu = 2."""
    return mk_bundle([(3, 6)], genus=2)


@st.composite
def bundles(draw, min_length=1, max_length=4, max_piece_rank=3):
    """Random valid bundle data with strictly decreasing slopes.

    Integer base slopes are drawn strictly decreasing; each piece degree is
    rank * base_slope + excess with 0 <= excess < rank, which keeps the
    slopes inside disjoint unit intervals and therefore strictly ordered.
    """
    length = draw(st.integers(min_length, max_length))
    base = draw(
        st.lists(
            st.integers(-8, 8), min_size=length, max_size=length, unique=True
        )
    )
    base.sort(reverse=True)
    pieces = []
    for s in base:
        rank = draw(st.integers(1, max_piece_rank))
        excess = draw(st.integers(0, rank - 1))
        pieces.append((rank, rank * s + excess))
    if sum(r for r, _ in pieces) < 2:
        pieces = [(2, 2 * base[0])]
    return mk_bundle(pieces)


@st.composite
def rationals(draw, max_num=60, max_den=8):
    num = draw(st.integers(-max_num, max_num))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)
