"""Data model for the base curve, the bundle E and its filtration data.

The filtration is *input*: the engine takes the ranks and degrees of the
graded pieces as given and derives every slope from them.  Instances are
immutable after validation and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class ValidationError(ValueError):
    """Raised when input data violates a structural invariant."""


@dataclass(frozen=True)
class CurveData:
    """The base curve; only its genus enters the numerics."""

    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValidationError(f"genus must be a non-negative integer, got {self.genus!r}")


@dataclass(frozen=True)
class HNPiece:
    """One graded piece of the filtration: its rank and degree."""

    rank: int
    degree: int

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValidationError(f"piece rank must be a positive integer, got {self.rank!r}")
        if not isinstance(self.degree, int):
            raise ValidationError(f"piece degree must be an integer, got {self.degree!r}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


PieceLike = Union[HNPiece, Sequence[int]]


@dataclass(frozen=True)
class BundleData:
    """Validated bundle: graded pieces with strictly decreasing slopes.

    Derived quantities (total rank/degree, slopes, partial ranks) are
    computed on demand; everything is an exact rational.
    """

    curve: CurveData
    pieces: tuple[HNPiece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValidationError("at least one piece is required")
        for prev, cur in zip(self.pieces, self.pieces[1:]):
            if prev.slope <= cur.slope:
                raise ValidationError(
                    "slopes not strictly decreasing: "
                    f"slope({prev.degree}/{prev.rank}) <= slope({cur.degree}/{cur.rank})"
                )
        if self.rank < 2:
            raise ValidationError(f"total rank must be >= 2, got {self.rank}")

    # -- derived data -------------------------------------------------

    @property
    def rank(self) -> int:
        return sum(p.rank for p in self.pieces)

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self.pieces)

    @property
    def length(self) -> int:
        return len(self.pieces)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(p.slope for p in self.pieces)

    @property
    def mu(self) -> Fraction:
        """Overall slope degree/rank."""
        return Fraction(self.degree, self.rank)

    @property
    def mu_max(self) -> Fraction:
        """Slope of the first (maximal-slope) piece."""
        return self.pieces[0].slope

    @property
    def mu_min(self) -> Fraction:
        """Slope of the last (minimal-slope) piece."""
        return self.pieces[-1].slope

    @property
    def semistable(self) -> bool:
        return self.length == 1

    def slope_of(self, i: int) -> Fraction:
        """Slope of the i-th piece, 1-based."""
        if not 1 <= i <= self.length:
            raise ValidationError(f"piece index {i} out of range 1..{self.length}")
        return self.pieces[i - 1].slope

    def partial_rank(self, j: int) -> int:
        """Rank of the j-th subsheaf of the filtration, 1-based."""
        if not 1 <= j <= self.length:
            raise ValidationError(f"piece index {j} out of range 1..{self.length}")
        return sum(p.rank for p in self.pieces[:j])


def validate(pieces: Iterable[PieceLike], curve: CurveData) -> BundleData:
    """Build a validated BundleData from (rank, degree) pairs.

    Raises ValidationError for an empty list, non-positive ranks, or
    non-decreasing slopes (the offending adjacent pair is named).
    """
    normalized = []
    for p in pieces:
        if isinstance(p, HNPiece):
            normalized.append(p)
        else:
            rank, degree = p
            normalized.append(HNPiece(rank, degree))
    return BundleData(curve=curve, pieces=tuple(normalized))


def weighted_slope_identity_check(bundle: BundleData) -> bool:
    """Self-test: mu * r equals the rank-weighted sum of the piece slopes."""
    total = sum((p.rank * p.slope for p in bundle.pieces), Fraction(0))
    return bundle.mu * bundle.rank == total
