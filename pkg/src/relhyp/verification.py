"""Exhaustive verification of the combinatorial inequalities.

Sweeps the (h, k, r) grid and checks, in exact integer arithmetic:

* alpha(h, 1) == 0 for every h, r;
* alpha(h, k) > 0 for every k >= 2;
* the rising/falling product inequality for h >= k >= 2;
* the factorial factorization tying alpha to its product form.

A counterexample is a report payload, never an exception.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .hypersurface import alpha, beta_factorization_check, product_inequality_margin


@dataclass(frozen=True)
class Counterexample:
    h: int
    k: int
    r: int
    check: str
    value: int


@dataclass(frozen=True)
class LemmaCheckResult:
    h_max: int
    k_max: int
    r_max: int
    triples_checked: int
    checks_run: int
    counterexamples: tuple[Counterexample, ...] = field(default_factory=tuple)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def lemma_check(h_max: int, k_max: int, r_max: int) -> LemmaCheckResult:
    """Run every check on the grid 1 <= h <= h_max, 1 <= k <= k_max, 2 <= r <= r_max."""
    if h_max < 2 or k_max < 2 or r_max < 2:
        raise ValueError("grid bounds must all be >= 2")
    start = time.perf_counter()
    triples = 0
    checks = 0
    bad: list[Counterexample] = []
    for r in range(2, r_max + 1):
        for k in range(1, k_max + 1):
            for h in range(1, h_max + 1):
                triples += 1
                a = alpha(h, k, r)
                checks += 1
                if k == 1:
                    if a != 0:
                        bad.append(Counterexample(h, k, r, "alpha_k1_zero", a))
                else:
                    if a <= 0:
                        bad.append(Counterexample(h, k, r, "alpha_positive", a))
                if h >= k >= 2:
                    margin = product_inequality_margin(h, k, r)
                    checks += 1
                    if margin < 0:
                        bad.append(Counterexample(h, k, r, "product_inequality", margin))
                    checks += 1
                    if not beta_factorization_check(h, k, r):
                        bad.append(Counterexample(h, k, r, "beta_factorization", 0))
    elapsed = time.perf_counter() - start
    return LemmaCheckResult(
        h_max=h_max,
        k_max=k_max,
        r_max=r_max,
        triples_checked=triples,
        checks_run=checks,
        counterexamples=tuple(bad),
        elapsed_seconds=elapsed,
    )
