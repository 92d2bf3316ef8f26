"""Closed-form invariants of a relative hypersurface X in |k*H - y*S|.

Covers the relative canonical class and its top power, the pushforward
rank/degree bookkeeping, the alpha/beta combinatorics, and the
positivity/slope-inequality deciders.  Every decider is an exact sign
test; the direct intersection-theoretic evaluation and the closed form
are computed independently and must agree.

The verdicts are genus-independent: the base genus never enters any of
the formulas below (it only shifts the twisting line bundle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bundle import BundleData
from .cones import DivisorClass
from .exact import binom


class InvariantViolation(RuntimeError):
    """Two supposedly equivalent evaluations disagreed (test hook)."""


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A relative hypersurface: relative degree k, base twist degree y."""

    k: int
    y: int
    bundle: BundleData

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"relative degree k must be a positive integer, got {self.k!r}")
        if not isinstance(self.y, int):
            raise ValueError(f"twist degree y must be an integer, got {self.y!r}")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.y, self.k)

    @property
    def divisor_class(self) -> DivisorClass:
        return DivisorClass.from_ky(Fraction(self.k), Fraction(self.y))


def _require_rank3(bundle: BundleData) -> None:
    if bundle.rank < 3:
        raise ValueError(f"operation requires bundle rank >= 3, got {bundle.rank}")


@dataclass(frozen=True)
class FibreInvariants:
    """Invariants of the general fibre: a degree-k hypersurface in P^(r-1)."""

    canonical_power: Fraction  # K_F^(r-2), equal to k*(k-r)^(r-2)
    geometric_genus: int  # h^0 of the fibre canonical sheaf
    section_degree: int  # H_F^(r-2) = k


def fibre_invariants(spec: HypersurfaceSpec) -> FibreInvariants:
    _require_rank3(spec.bundle)
    r = spec.bundle.rank
    k = spec.k
    return FibreInvariants(
        canonical_power=Fraction(k * (k - r) ** (r - 2)),
        geometric_genus=binom(k - 1, r - 1),
        section_degree=k,
    )


@dataclass(frozen=True)
class RelativeCanonical:
    """Ambient class restricting to the relative canonical, plus ampleness."""

    ambient_class: DivisorClass
    relatively_very_ample: bool


def relative_canonical_class(spec: HypersurfaceSpec) -> RelativeCanonical:
    """Adjunction: the ambient class (k-r)*H - (y-d)*S restricts to K_f."""
    _require_rank3(spec.bundle)
    r = spec.bundle.rank
    d = spec.bundle.degree
    return RelativeCanonical(
        ambient_class=DivisorClass(Fraction(spec.k - r), Fraction(d - spec.y)),
        relatively_very_ample=spec.k > r,
    )


def canonical_invariants(spec: HypersurfaceSpec) -> tuple[Fraction, Fraction]:
    """(K_f^(r-1), deg of the pushed-forward relative canonical), for k > r.

    The two closed forms are proportional:
        K_f^(r-1) * C(k-1, r-1) = r*(k-1)*(k-r)^(r-2) * deg;
    this identity is asserted on every call.
    """
    _require_rank3(spec.bundle)
    r = spec.bundle.rank
    k, y, d = spec.k, spec.y, spec.bundle.degree
    if k <= r:
        raise ValueError(f"relative canonical not very ample: k={k} <= r={r}")
    kf_power = Fraction((k - r) ** (r - 2) * (k - 1) * (k * d - r * y))
    deg_push = Fraction(binom(k - 1, r - 1) * (k * d - r * y), r)
    if kf_power * binom(k - 1, r - 1) != r * (k - 1) * (k - r) ** (r - 2) * deg_push:
        raise InvariantViolation("canonical invariants are not proportional")
    return kf_power, deg_push


def pushforward_rank_degree(spec: HypersurfaceSpec, h: int) -> tuple[int, Fraction]:
    """Rank and degree of the pushforward of the h-th power sheaf on X.

    rank = C(h+r-1, r-1) - C(h-k+r-1, r-1)
    deg  = (C(h+r-1, r) - C(h-k+r-1, r)) * d - C(h-k+r-1, r-1) * y

    For h < k the subtracted terms vanish by the binomial convention, and
    the pushforward is the full h-th symmetric power of E.
    """
    _require_rank3(spec.bundle)
    if h < 1:
        raise ValueError(f"power h must be >= 1, got {h}")
    r = spec.bundle.rank
    k, y, d = spec.k, spec.y, spec.bundle.degree
    rank = binom(h + r - 1, r - 1) - binom(h - k + r - 1, r - 1)
    deg = (binom(h + r - 1, r) - binom(h - k + r - 1, r)) * d - binom(h - k + r - 1, r - 1) * y
    return rank, Fraction(deg)


def alpha(h: int, k: int, r: int) -> int:
    """The sign-deciding combinatorial factor of the positivity test.

    alpha(h, k) = h*C(h+r-1, r-1) - h*C(h-k+r-1, r-1) - C(h-k+r-1, r-1)*k*(r-1)

    alpha(h, 1) = 0 for every h and r; alpha(h, k) > 0 for k >= 2.
    """
    if h < 1 or k < 1:
        raise ValueError(f"alpha requires h, k >= 1, got h={h}, k={k}")
    if r < 2:
        raise ValueError(f"alpha requires r >= 2, got r={r}")
    shifted = binom(h - k + r - 1, r - 1)
    return h * binom(h + r - 1, r - 1) - h * shifted - shifted * k * (r - 1)


def beta(h: int, k: int, r: int) -> int:
    """Product form of alpha after clearing factorials, defined for h >= k >= 2.

    beta(h, k) = prod_{i=1..k}(h+r-i) - [prod_{j=1..k-1}(h-j)] * (h + (r-1)*k)
    """
    if not h >= k >= 2:
        raise ValueError(f"beta requires h >= k >= 2, got h={h}, k={k}")
    rising = math.prod(h + r - i for i in range(1, k + 1))
    falling = math.prod(h - j for j in range(1, k))
    return rising - falling * (h + (r - 1) * k)


def beta_factorization_check(h: int, k: int, r: int) -> bool:
    """Exact identity alpha*(r-1)!*(h-1)! == (h-k+r-1)! * beta, for h >= k >= 2."""
    if not h >= k >= 2:
        raise ValueError(f"factorization only defined for h >= k >= 2, got h={h}, k={k}")
    lhs = alpha(h, k, r) * math.factorial(r - 1) * math.factorial(h - 1)
    rhs = math.factorial(h - k + r - 1) * beta(h, k, r)
    return lhs == rhs


def product_inequality_margin(h: int, k: int, r: int) -> int:
    """LHS - RHS of the rising/falling product inequality, for h >= k >= 2.

    prod_{i=1..k}(h+r-i) >= prod_{j=1..k}(h-j+1) + k*(r-1)*prod_{l=1..k-1}(h-l)
    """
    if not (h >= k >= 2 and r >= 2):
        raise ValueError(f"requires h >= k >= 2 and r >= 2, got h={h}, k={k}, r={r}")
    lhs = math.prod(h + r - i for i in range(1, k + 1))
    rhs = math.prod(h - j + 1 for j in range(1, k + 1))
    rhs += k * (r - 1) * math.prod(h - l for l in range(1, k))
    return lhs - rhs


K1_WARNING = (
    "relative degree k=1: the margin is identically zero for every h and "
    "every twist, so the verdict is 'positive with equality' and carries "
    "no information about y"
)


@dataclass(frozen=True)
class FPositivity:
    """Positivity verdict for one power h, with its exact margin."""

    f_positive: bool
    margin: Fraction
    equality: bool
    warnings: tuple[str, ...] = ()


def f_positive(spec: HypersurfaceSpec, h: int) -> FPositivity:
    """Decide positivity of the h-th power sheaf on X.

    Evaluates both the direct cleared inequality
        h^(r-1)*(k*d - y)*rank >= (r-1)*h^(r-2)*k*deg
    and the closed form  alpha(h,k)*(d*k - r*y)/r >= 0,
    asserts the two agree, and returns the closed-form margin.
    """
    rank, deg = pushforward_rank_degree(spec, h)  # also validates r, h
    if rank <= 0:
        raise ValueError("pushforward rank must be positive")
    r = spec.bundle.rank
    k, y, d = spec.k, spec.y, spec.bundle.degree

    direct_lhs = h ** (r - 1) * (k * d - y) * rank
    direct_rhs = (r - 1) * h ** (r - 2) * k * deg
    direct_verdict = direct_lhs >= direct_rhs

    margin = Fraction(alpha(h, k, r) * (d * k - r * y), r)
    closed_verdict = margin >= 0

    # the cleared direct margin equals the closed-form margin exactly
    if Fraction(direct_lhs - direct_rhs, h ** (r - 2)) != margin or direct_verdict != closed_verdict:
        raise InvariantViolation(
            f"direct and closed-form positivity evaluations disagree at h={h}, "
            f"k={k}, y={y}, d={d}, r={r}"
        )

    warnings = (K1_WARNING,) if k == 1 else ()
    return FPositivity(closed_verdict, margin, margin == 0, warnings)


@dataclass(frozen=True)
class SlopeInequalityReport:
    """Three-way verdict for the relative canonical, with strict variants."""

    ratio_le_mu: bool
    ratio_lt_mu: bool
    invariants_nonnegative: bool
    invariants_positive: bool
    slope_inequality: bool
    slope_inequality_strict: bool
    kf_power: Fraction
    deg_pushforward: Fraction


def slope_inequality_report(spec: HypersurfaceSpec) -> SlopeInequalityReport:
    """Evaluate the three equivalent conditions for k > r and assert agreement."""
    kf_power, deg_push = canonical_invariants(spec)  # validates k > r, r >= 3
    r = spec.bundle.rank
    fib = fibre_invariants(spec)

    ratio_le = spec.ratio <= spec.bundle.mu
    ratio_lt = spec.ratio < spec.bundle.mu
    inv_nonneg = kf_power >= 0 and deg_push >= 0
    inv_pos = kf_power > 0 and deg_push > 0

    rhs = Fraction((r - 1) * fib.canonical_power, fib.geometric_genus) * deg_push
    slope_holds = kf_power >= rhs
    slope_strict = kf_power > rhs

    if not (ratio_le == inv_nonneg == slope_holds and ratio_lt == inv_pos == slope_strict):
        raise InvariantViolation(
            f"three-way equivalence failed for k={spec.k}, y={spec.y}, "
            f"d={spec.bundle.degree}, r={r}"
        )
    return SlopeInequalityReport(
        ratio_le_mu=ratio_le,
        ratio_lt_mu=ratio_lt,
        invariants_nonnegative=inv_nonneg,
        invariants_positive=inv_pos,
        slope_inequality=slope_holds,
        slope_inequality_strict=slope_strict,
        kf_power=kf_power,
        deg_pushforward=deg_push,
    )
