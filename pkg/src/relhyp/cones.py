"""Cone membership and region classification for divisor classes on P(E).

A class a*H + b*S with a > 0 is classified through the single ratio
t = -b/a against the slope ladder of the bundle:

* nef                 iff t <= mu_min
* pseudoeffective     iff t <= mu_max   (big: strict)
* positive cone       iff t <= mu      (equivalently deg(cls^r) >= 0)
* movable             iff t <= mu_max when the first piece has rank > 1,
                      else t <= mu_2

Boundaries are closed; "big" is the strict interior of the effective cone.
Classes with a <= 0 are classified totally rather than rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bundle import BundleData
from .exact import format_rational

REGION_NEF = "nef"
REGION_OUTSIDE_PSEFF = "outside_pseff"
REGION_VERTICAL_RAY = "vertical_ray"
REGION_OUTSIDE = "outside"


@dataclass(frozen=True)
class DivisorClass:
    """Numerical divisor class a*H + b*S with exact rational coefficients."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def from_ky(cls, k: Fraction, y: Fraction) -> "DivisorClass":
        """The class k*H - y*S of a relative-degree-k system twisted by degree y."""
        return cls(Fraction(k), -Fraction(y))

    @property
    def ratio(self) -> Fraction:
        """t = -b/a; only defined for a != 0."""
        if self.a == 0:
            raise ValueError("ratio undefined for a = 0")
        return -self.b / self.a

    def scale(self, m: Fraction) -> "DivisorClass":
        m = Fraction(m)
        return DivisorClass(self.a * m, self.b * m)

    def __str__(self) -> str:
        return f"({format_rational(self.a)})H + ({format_rational(self.b)})S"


@dataclass(frozen=True)
class ConeVerdict:
    """Membership verdicts for one class.

    Membership is purely numerical: it says nothing about whether a given
    line bundle in the class carries an effective divisor.
    """

    nef: bool
    pseudoeffective: bool
    big: bool
    positive_cone: bool
    movable: bool
    region: str
    slab_index: Optional[int] = None


def classify(cls: DivisorClass, bundle: BundleData) -> ConeVerdict:
    """Classify a divisor class against every cone; total function."""
    if cls.a < 0:
        return ConeVerdict(False, False, False, False, False, REGION_OUTSIDE)
    if cls.a == 0:
        member = cls.b >= 0
        region = REGION_VERTICAL_RAY if member else REGION_OUTSIDE
        return ConeVerdict(member, member, False, member, member, region)

    t = cls.ratio
    slopes = bundle.slopes
    nef = t <= bundle.mu_min
    pseff = t <= bundle.mu_max
    big = t < bundle.mu_max
    positive = t <= bundle.mu
    if bundle.pieces[0].rank > 1:
        movable = pseff
    else:
        movable = t <= slopes[1]

    slab: Optional[int] = None
    if nef:
        region = REGION_NEF
    elif not pseff:
        region = REGION_OUTSIDE_PSEFF
    else:
        # half-open slabs (mu_{i+1}, mu_i], i = 1..length-1
        for i in range(1, bundle.length):
            if slopes[i] < t <= slopes[i - 1]:
                slab = i
                break
        region = f"slab:{slab}"
    return ConeVerdict(nef, pseff, big, positive, movable, region, slab)


def anticanonical_class(bundle: BundleData) -> DivisorClass:
    """The anticanonical class r*H - (d + 2*genus - 2)*S."""
    return DivisorClass(
        Fraction(bundle.rank),
        Fraction(-(bundle.degree + 2 * bundle.curve.genus - 2)),
    )


ROLE_FIBRE = "fibre ray"
ROLE_TAUTOLOGICAL = "tautological ray"
ROLE_PSEFF = "pseff boundary"
ROLE_POSITIVE = "positive boundary"
ROLE_NEF = "nef boundary"


@dataclass(frozen=True)
class ConeRay:
    """A labeled boundary ray of the cone fan, for reports and the diagram."""

    name: str
    slope: Optional[Fraction]  # None for the fibre ray
    roles: tuple[str, ...]


def _ray_name(slope: Fraction) -> str:
    if slope == 0:
        return "H"
    if slope > 0:
        return f"H-{format_rational(slope)}S"
    return f"H+{format_rational(-slope)}S"


def cone_fan_data(bundle: BundleData) -> list[ConeRay]:
    """Ordered labeled rays: fibre ray, slope rays (decreasing), tautological ray.

    Coincident slopes merge their labels into a single ray; in particular
    the tautological ray is merged when some boundary slope is 0.
    """
    roles: dict[Fraction, list[str]] = {}

    def add(slope: Fraction, role: str) -> None:
        roles.setdefault(slope, []).append(role)

    slopes = bundle.slopes
    add(slopes[0], f"{ROLE_PSEFF} (slope_1)")
    for i in range(1, bundle.length - 1):
        add(slopes[i], f"filtration slope_{i + 1}")
    if bundle.length > 1:
        add(slopes[-1], f"{ROLE_NEF} (slope_{bundle.length})")
    else:
        add(slopes[0], ROLE_NEF)
    add(bundle.mu, ROLE_POSITIVE)

    add(Fraction(0), ROLE_TAUTOLOGICAL)

    rays = [ConeRay("S", None, (ROLE_FIBRE,))]
    for slope in sorted(roles, reverse=True):
        rays.append(ConeRay(_ray_name(slope), slope, tuple(roles[slope])))
    return rays
