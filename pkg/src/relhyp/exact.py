"""Exact rational arithmetic helpers.

Every numeric quantity in the engine is an exact rational; floats never
appear anywhere.  ``fractions.Fraction`` already provides canonical-form
rationals over arbitrary-precision integers, so it is used directly as the
rational type.  This module adds the vanishing convention for binomial
coefficients that all the pushforward formulas rely on, plus rational
(de)serialization for the report layer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def binom(n: int, m: int) -> int:
    """Binomial coefficient C(n, m), equal to 0 whenever n < m.

    The vanishing convention applies also to negative n: C(-2, 1) = 0.
    The polynomial extension of the binomial to negative arguments is
    deliberately never used.

    Raises:
        ValueError: if m < 0.
    """
    if m < 0:
        raise ValueError(f"binom: lower index must be non-negative, got {m}")
    if n < m:
        return 0
    return math.comb(n, m)


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational from an int, a Fraction, or a "p/q" string."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def rational_to_json(q: Fraction) -> dict:
    """Serialize a rational as an exact {"num", "den"} pair, never a float."""
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def format_rational(q: Fraction) -> str:
    """Render a rational as "p" or "p/q" for text reports."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
