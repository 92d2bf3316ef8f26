"""Stability and singularity verdicts for relative hypersurfaces.

All criteria here are one-directional implications, so verdicts are
three-valued: True (affirmed), False (refuted) or None (no conclusion).
The engine never manufactures a converse: when a hypothesis fails the
verdict is "no conclusion", not "stable".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bundle import BundleData
from .hypersurface import HypersurfaceSpec
from .sigma import rank2_zariski
from .cones import DivisorClass

NO_CONCLUSION_NOTE = (
    "no conclusion: the instability criteria require an unstable bundle "
    "and ratio y/k > mu"
)
HORIZONTAL_LOCUS_NOTE = (
    "the multiplicity bound concerns members of the m-scaled system at "
    "points of a horizontal subvariety dominating the base"
)
SMALL_DEGREE_NOTE = (
    "k < r: the threshold bound r/k exceeds 1 and is vacuous for reduced pairs"
)
NOT_PSEFF_NOTE = (
    "t > mu_max: the class is not pseudoeffective, so the linear systems "
    "are empty and the singularity statements are vacuous"
)


@dataclass(frozen=True)
class StabilityReport:
    """Verdict sheet for one relative hypersurface class."""

    bundle_unstable: bool
    ratio_above_mu: bool
    fibre_chow_unstable_all_h: Optional[bool]
    fibres_all_singular: Optional[bool]
    fibre_lct_strict_bound: Optional[Fraction]  # r/k when concluded
    total_space_lct_strict_bound: Optional[Fraction]  # r/k when concluded
    multiplicity_bound_slope: Optional[Fraction]  # k/r when concluded
    notes: tuple[str, ...] = field(default_factory=tuple)

    def multiplicity_lower_bound(self, m: int) -> Fraction:
        """Lower bound k*m/r on point multiplicities of m-scaled members."""
        if self.multiplicity_bound_slope is None:
            raise ValueError("multiplicity bound not active for this class")
        if m < 1:
            raise ValueError(f"scale m must be a positive integer, got {m}")
        return self.multiplicity_bound_slope * m


def stability_report(spec: HypersurfaceSpec) -> StabilityReport:
    """Fill every instability/singularity field implied by the class data."""
    bundle = spec.bundle
    if bundle.rank < 3:
        raise ValueError(f"stability report requires bundle rank >= 3, got {bundle.rank}")
    unstable = not bundle.semistable
    above = spec.ratio > bundle.mu

    if not (unstable and above):
        return StabilityReport(
            bundle_unstable=unstable,
            ratio_above_mu=above,
            fibre_chow_unstable_all_h=None,
            fibres_all_singular=None,
            fibre_lct_strict_bound=None,
            total_space_lct_strict_bound=None,
            multiplicity_bound_slope=None,
            notes=(NO_CONCLUSION_NOTE,),
        )

    r, k = bundle.rank, spec.k
    notes = [HORIZONTAL_LOCUS_NOTE]
    if k < r:
        notes.append(SMALL_DEGREE_NOTE)
    if spec.ratio > bundle.mu_max:
        notes.append(NOT_PSEFF_NOTE)
    return StabilityReport(
        bundle_unstable=True,
        ratio_above_mu=True,
        fibre_chow_unstable_all_h=True,
        fibres_all_singular=True,
        fibre_lct_strict_bound=Fraction(r, k),
        total_space_lct_strict_bound=Fraction(r, k),
        multiplicity_bound_slope=Fraction(k, r),
        notes=tuple(notes),
    )


LEE_STABLE = "chow-stable"
LEE_SEMISTABLE = "chow-semistable"
LEE_SILENT = "criterion silent"


def lee_criterion(n: int, s: int, k: int, lct_value: Fraction) -> str:
    """Semistability of a degree-k, s-dimensional subvariety of P^n from the
    threshold of its associated hypersurface in the Grassmannian.

    One-directional: returns stable/semistable when the threshold clears
    (n+1)/k (strictly / with equality), and "criterion silent" otherwise.
    Never returns "unstable".
    """
    if k < 1:
        raise ValueError(f"degree k must be positive, got {k}")
    if not n > s >= 0:
        raise ValueError(f"requires n > s >= 0, got n={n}, s={s}")
    lct_value = Fraction(lct_value)
    if not 0 < lct_value <= 1:
        raise ValueError(f"lct value must lie in (0, 1], got {lct_value}")
    threshold = Fraction(n + 1, k)
    if lct_value > threshold:
        return LEE_STABLE
    if lct_value == threshold:
        return LEE_SEMISTABLE
    return LEE_SILENT


def zero_cycle_chow_semistable(multiplicities: Sequence[int]) -> tuple[bool, bool]:
    """(semistable, stable) for a zero-cycle on the line with the given
    point multiplicities: semistable iff max <= total/2, stable iff strict."""
    if not multiplicities:
        raise ValueError("multiplicity list must be nonempty")
    if any((not isinstance(m, int)) or m < 1 for m in multiplicities):
        raise ValueError("multiplicities must be positive integers")
    total = sum(multiplicities)
    top = max(multiplicities)
    return 2 * top <= total, 2 * top < total


def rank2_instability_crosscheck(bundle: BundleData, k: int, y: int) -> bool:
    """Rank-2 cross-check: the fixed-point multiplicity exceeds half the
    fibre degree exactly when the ratio exceeds mu.

    Returns True when the cycle-geometry test and the slope test agree.
    """
    if bundle.rank != 2 or bundle.length != 2:
        raise ValueError("crosscheck requires a rank-2 bundle with two pieces")
    if k < 1:
        raise ValueError(f"relative degree k must be positive, got {k}")
    t = Fraction(y, k)
    if t < bundle.slope_of(2):
        raise ValueError(f"crosscheck requires t >= mu_2, got t={t}")
    dec = rank2_zariski(DivisorClass.from_ky(Fraction(k), Fraction(y)), bundle)
    geometry = dec.negative_coefficient > Fraction(k, 2)
    slope = t > bundle.mu
    return geometry == slope
