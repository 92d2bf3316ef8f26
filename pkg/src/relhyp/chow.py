"""Symbolic intersection-number oracle for divisor classes on P(E).

The numerical ring is generated by the tautological class H and the fibre
class S, with the relations S^2 = 0 and H^r = d * H^(r-1) * S (the base is
a curve, so no higher Chern class ever enters).  Products are expanded
term by term and reduced eagerly; the degree map sends H^(r-1)*S to 1.

This oracle is deliberately generic: it knows nothing about the closed
forms it is used to cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .bundle import BundleData

Monomial = tuple[int, int]  # (H exponent, S exponent)


def _reduce_monomial(i: int, j: int, r: int, d: int) -> tuple[Monomial, Fraction] | None:
    """Normal form of H^i * S^j, or None if the monomial dies."""
    if j >= 2:
        return None
    if i < r:
        return (i, j), Fraction(1)
    # H^r = d * H^(r-1) * S, and H^r * S = d * H^(r-1) * S^2 = 0.
    if j == 1 or i > r:
        return None
    return (r - 1, 1), Fraction(d)


@dataclass(frozen=True)
class ChowPolynomial:
    """Reduced polynomial in H and S attached to a bundle context."""

    bundle: BundleData
    coeffs: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        r = self.bundle.rank
        cleaned: dict[Monomial, Fraction] = {}
        for (i, j), c in self.coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            reduced = _reduce_monomial(i, j, r, self.bundle.degree)
            if reduced is None:
                continue
            (ri, rj), factor = reduced
            cleaned[(ri, rj)] = cleaned.get((ri, rj), Fraction(0)) + c * factor
        object.__setattr__(self, "coeffs", {m: c for m, c in cleaned.items() if c != 0})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowPolynomial):
            return NotImplemented
        return self.bundle == other.bundle and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.bundle, frozenset(self.coeffs.items())))

    def __add__(self, other: "ChowPolynomial") -> "ChowPolynomial":
        _check_context(self, other, self.bundle)
        merged = dict(self.coeffs)
        for m, c in other.coeffs.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return ChowPolynomial(self.bundle, merged)

    def __mul__(self, other: "ChowPolynomial") -> "ChowPolynomial":
        return multiply(self, other, self.bundle)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "ChowPolynomial(0)"
        parts = [f"{c}*H^{i}*S^{j}" for (i, j), c in sorted(self.coeffs.items())]
        return "ChowPolynomial(" + " + ".join(parts) + ")"


def _check_context(p: ChowPolynomial, q: ChowPolynomial, bundle: BundleData) -> None:
    if p.bundle != bundle or q.bundle != bundle:
        raise ValueError("mismatched bundle context in ring operation")


def unit(bundle: BundleData) -> ChowPolynomial:
    return ChowPolynomial(bundle, {(0, 0): Fraction(1)})


def h_class(bundle: BundleData) -> ChowPolynomial:
    return ChowPolynomial(bundle, {(1, 0): Fraction(1)})


def sigma_class(bundle: BundleData) -> ChowPolynomial:
    return ChowPolynomial(bundle, {(0, 1): Fraction(1)})


def divisor(a: Fraction, b: Fraction, bundle: BundleData) -> ChowPolynomial:
    """The class a*H + b*S."""
    return ChowPolynomial(bundle, {(1, 0): Fraction(a), (0, 1): Fraction(b)})


def multiply(p: ChowPolynomial, q: ChowPolynomial, bundle: BundleData) -> ChowPolynomial:
    """Reduced bilinear product of two reduced polynomials."""
    _check_context(p, q, bundle)
    out: dict[Monomial, Fraction] = {}
    for (i1, j1), c1 in p.coeffs.items():
        for (i2, j2), c2 in q.coeffs.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return ChowPolynomial(bundle, out)


def power(p: ChowPolynomial, e: int, bundle: BundleData) -> ChowPolynomial:
    """Repeated multiplication; the zeroth power is the ring unit."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = unit(bundle)
    for _ in range(e):
        result = multiply(result, p, bundle)
    return result


def degree(p: ChowPolynomial, bundle: BundleData) -> Fraction:
    """Top intersection number: the coefficient of H^(r-1)*S.

    Raises ValueError if p carries a monomial of total degree != r (after
    reduction the only surviving degree-r monomial is H^(r-1)*S).
    """
    _check_context(p, p, bundle)
    r = bundle.rank
    top = (r - 1, 1)
    for (i, j), c in p.coeffs.items():
        if (i, j) != top and c != 0:
            raise ValueError(
                f"not a top-degree class: monomial H^{i}*S^{j} has degree {i + j}, expected {r}"
            )
    return p.coeffs.get(top, Fraction(0))
