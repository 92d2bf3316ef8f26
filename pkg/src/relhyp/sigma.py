"""Negative-part decomposition of big non-nef classes and its consequences.

For a class k*H - y*S with mu_min < t < mu_max (t = y/k) the negative part
is supported on the nested loci P(E/E_i) with multiplicities

    alpha_i = (y - k*mu_{i+1}) / (mu_max - mu_{i+1}),   i = 1..length-1,

of which the positive ones are retained.  The dominant cycle index j is
the smallest i with alpha_i > 0; it brackets t between consecutive
slopes.  The multiplicity of the dominant cycle gives upper bounds on the
log canonical threshold; the rank-2 case is certified directly through
the surface intersection form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import BundleData, ValidationError
from .cones import DivisorClass, classify


@dataclass(frozen=True)
class FixedCycle:
    """One negative-part cycle: index, multiplicity, codimension and locus."""

    index: int
    alpha: Fraction
    codim: int
    locus: str
    integral: bool


@dataclass(frozen=True)
class SigmaDecomposition:
    """Positive part plus the ordered list of negative cycles.

    j is None exactly when the input class is nef (empty cycle list); then
    the positive part is the whole class.
    """

    t: Fraction
    j: Optional[int]
    cycles: tuple[FixedCycle, ...]
    positive_part: DivisorClass


def decompose(cls: DivisorClass, bundle: BundleData) -> SigmaDecomposition:
    """Decompose a class with a > 0 over a non-semistable bundle.

    Raises ValidationError for a semistable bundle ("cone collapse") and
    ValueError when the class is not big (t >= mu_max).  A nef input
    yields an empty cycle list.
    """
    if cls.a <= 0:
        raise ValueError("decomposition requires a class with a > 0")
    if bundle.semistable:
        raise ValidationError("no decomposition: cone collapse (semistable bundle)")
    k, y = cls.a, -cls.b
    t = cls.ratio
    if t <= bundle.mu_min:
        return SigmaDecomposition(t=t, j=None, cycles=(), positive_part=cls)
    if t >= bundle.mu_max:
        raise ValueError(f"not big: t = {t} >= mu_max = {bundle.mu_max}")

    mu1 = bundle.mu_max
    cycles = []
    for i in range(1, bundle.length):
        mu_next = bundle.slope_of(i + 1)
        alpha_i = (y - k * mu_next) / (mu1 - mu_next)
        if alpha_i > 0:
            cycles.append(
                FixedCycle(
                    index=i,
                    alpha=alpha_i,
                    codim=bundle.partial_rank(i),
                    locus=f"P(E/E_{i})",
                    integral=alpha_i.denominator == 1,
                )
            )
    j = cycles[0].index
    alpha_j = cycles[0].alpha
    # subtracting alpha_j copies of the pseff boundary ray H - mu1*S lands
    # the positive part on the ratio mu_{j+1} ray
    positive = DivisorClass(cls.a - alpha_j, cls.b + alpha_j * mu1)
    return SigmaDecomposition(t=t, j=j, cycles=tuple(cycles), positive_part=positive)


@dataclass(frozen=True)
class Rank2Zariski:
    """Certified surface decomposition: X = positive + coefficient * N."""

    negative_coefficient: Fraction
    negative_class: DivisorClass  # the section class H - mu_1*S
    positive_part: DivisorClass
    positive_nef: bool
    p_dot_n: Fraction
    n_self_intersection: Fraction


def _pair_rank2(x: DivisorClass, z: DivisorClass, d: int) -> Fraction:
    # surface intersection form: H^2 = d, H.S = 1, S^2 = 0
    return x.a * z.a * d + x.a * z.b + z.a * x.b


def rank2_zariski(cls: DivisorClass, bundle: BundleData) -> Rank2Zariski:
    """Zariski decomposition on the ruled surface (rank 2, unstable)."""
    if bundle.rank != 2:
        raise ValueError(f"rank-2 decomposition requires rank 2, got {bundle.rank}")
    if bundle.semistable:
        raise ValidationError("no decomposition: cone collapse (semistable bundle)")
    if cls.a <= 0:
        raise ValueError("decomposition requires a class with a > 0")
    mu1, mu2 = bundle.slopes
    d = bundle.degree
    k, y = cls.a, -cls.b
    t = cls.ratio
    if t < mu2:
        coeff = Fraction(0)  # trivial decomposition: the class is already nef
    else:
        coeff = (y - k * mu2) / (mu1 - mu2)
    n_class = DivisorClass(Fraction(1), -mu1)
    positive = DivisorClass(cls.a - coeff, cls.b + coeff * mu1)
    return Rank2Zariski(
        negative_coefficient=coeff,
        negative_class=n_class,
        positive_part=positive,
        positive_nef=classify(positive, bundle).nef,
        p_dot_n=_pair_rank2(positive, n_class, d),
        n_self_intersection=_pair_rank2(n_class, n_class, d),
    )


@dataclass(frozen=True)
class AsymptoticEquality:
    """Length-2 filtration with a divisorial negative part: exact threshold."""

    value: Fraction  # equals the fixed-cycle bound
    below_fibre_bound: bool  # value < r/(m*k)
    ratio_above_mu: bool  # t > mu
    flip_consistent: bool  # the two predicates agree


@dataclass(frozen=True)
class StrictnessNote:
    """Length-2 filtration, first piece of rank > 1: the bound is strict."""

    threshold: Fraction  # (mu_1 + (r-1)*mu_2)/r
    bound_le_fibre: bool  # fixed-cycle bound <= r/(m*k)
    threshold_below_mu: bool  # threshold < mu, so t >= mu forces strictness


@dataclass(frozen=True)
class LctBounds:
    """Upper bounds on the log canonical threshold of the scaled class."""

    m: int
    t: Fraction
    applicable: bool
    fixed_cycle_bound_raw: Optional[Fraction]
    fixed_cycle_bound: Optional[Fraction]  # clamped at 1
    fibre_bound: Fraction  # r/(m*k)
    fibre_bound_applies: bool  # t > mu over a non-semistable bundle
    asymptotic: Optional[AsymptoticEquality] = None
    strictness: Optional[StrictnessNote] = None
    notes: tuple[str, ...] = field(default_factory=tuple)


NEF_NOTE = (
    "no bound: class is nef, so the scaled systems may become base-point "
    "free asymptotically (no fixed cycle to bound the threshold)"
)


def lct_bounds(cls: DivisorClass, bundle: BundleData, m: int) -> LctBounds:
    """Bound report for the class scaled by m.

    The fixed-cycle bound is (mu_1 - mu_{j+1}) / (m*(y - k*mu_{j+1})); it
    scales as 1/m.  The fibre bound r/(m*k) applies exactly when t > mu.
    """
    if m < 1:
        raise ValueError(f"scale m must be a positive integer, got {m}")
    dec = decompose(cls, bundle)  # validates a > 0 and non-semistable
    r = bundle.rank
    k, y = cls.a, -cls.b
    t = dec.t
    fibre_bound = Fraction(r) / (m * k)
    fibre_applies = t > bundle.mu

    if dec.j is None:
        return LctBounds(
            m=m,
            t=t,
            applicable=False,
            fixed_cycle_bound_raw=None,
            fixed_cycle_bound=None,
            fibre_bound=fibre_bound,
            fibre_bound_applies=fibre_applies,
            notes=(NEF_NOTE,),
        )

    mu1 = bundle.mu_max
    mu_next = bundle.slope_of(dec.j + 1)
    raw = (mu1 - mu_next) / (m * (y - k * mu_next))
    clamped = min(raw, Fraction(1))

    asymptotic = None
    strictness = None
    notes: list[str] = []
    if bundle.length == 2:
        mu2 = bundle.slope_of(2)
        if bundle.pieces[0].rank == 1:
            asymptotic = AsymptoticEquality(
                value=raw,
                below_fibre_bound=raw < fibre_bound,
                ratio_above_mu=t > bundle.mu,
                flip_consistent=(raw < fibre_bound) == (t > bundle.mu),
            )
        else:
            threshold = (mu1 + (r - 1) * mu2) / r
            strictness = StrictnessNote(
                threshold=threshold,
                bound_le_fibre=raw <= fibre_bound,
                threshold_below_mu=threshold < bundle.mu,
            )
            notes.append(
                "first filtration piece has rank > 1: whenever t >= mu the "
                "fixed-cycle bound is strictly below the fibre bound"
            )
    return LctBounds(
        m=m,
        t=t,
        applicable=True,
        fixed_cycle_bound_raw=raw,
        fixed_cycle_bound=clamped,
        fibre_bound=fibre_bound,
        fibre_bound_applies=fibre_applies,
        asymptotic=asymptotic,
        strictness=strictness,
        notes=tuple(notes),
    )


VERDICT_IRREDUCIBLE = "general member irreducible"
VERDICT_SILENT = "criterion silent"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    verdict: str
    reason: str
    fixed_codim: Optional[int]


def irreducibility_verdict(cls: DivisorClass, bundle: BundleData) -> IrreducibilityVerdict:
    """Irreducibility of the general member from the fixed-locus codimension.

    Positive verdicts: rank of the second subsheaf >= 3 with t < slope_2,
    or = 2 with t < slope_3 (silent when slope_3 does not exist).
    """
    if bundle.length < 2:
        raise ValidationError("irreducibility criterion requires a non-semistable bundle")
    if cls.a <= 0:
        raise ValueError("criterion requires a class with a > 0")
    t = cls.ratio

    fixed_codim: Optional[int] = None
    if bundle.mu_min < t < bundle.mu_max:
        dec = decompose(cls, bundle)
        fixed_codim = dec.cycles[0].codim

    rank_e2 = bundle.partial_rank(2)
    if rank_e2 >= 3 and t < bundle.slope_of(2):
        return IrreducibilityVerdict(
            VERDICT_IRREDUCIBLE,
            f"second subsheaf has rank {rank_e2} >= 3 and t < slope_2",
            fixed_codim,
        )
    if rank_e2 == 2 and bundle.length >= 3 and t < bundle.slope_of(3):
        return IrreducibilityVerdict(
            VERDICT_IRREDUCIBLE,
            "second subsheaf has rank 2 and t < slope_3",
            fixed_codim,
        )
    if rank_e2 == 2 and bundle.length < 3:
        return IrreducibilityVerdict(
            VERDICT_SILENT, "second subsheaf has rank 2 but no third slope exists", fixed_codim
        )
    return IrreducibilityVerdict(VERDICT_SILENT, "codimension conditions not met", fixed_codim)
