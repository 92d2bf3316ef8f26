"""Report assembly: one JSON-shaped document per scenario.

Every rational is serialized exactly as {"num", "den"}; the text renderer
is derived from the same document, so both formats are deterministic and
byte-identical across runs.  Per-class mathematical errors (for example a
semistable bundle handed to the decomposition query) become "error"
payloads in the result, never crashes; only scenario-level validation
fails the run.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from . import chow
from .bundle import BundleData, ValidationError, weighted_slope_identity_check
from .cones import DivisorClass, anticanonical_class, classify, cone_fan_data
from .exact import format_rational, rational_to_json
from .hypersurface import (
    HypersurfaceSpec,
    canonical_invariants,
    f_positive,
    fibre_invariants,
    relative_canonical_class,
    slope_inequality_report,
)
from .scenario import ClassSpec, Scenario
from .sigma import decompose, irreducibility_verdict, lct_bounds, rank2_zariski
from .stability import rank2_instability_crosscheck, stability_report
from .verification import LemmaCheckResult

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["scenario_echo", "bundle_derived", "results"],
    "properties": {
        "scenario_echo": {"type": "object"},
        "bundle_derived": {
            "type": "object",
            "required": ["r", "d", "slopes", "mu"],
            "properties": {
                "r": {"type": "integer"},
                "d": {"type": "integer"},
                "slopes": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
                "mu": {"$ref": "#/$defs/rational"},
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["class", "verdicts", "cited_refs"],
                "properties": {
                    "class": {"type": "object"},
                    "verdicts": {"type": "object"},
                    "cited_refs": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
    "$defs": {
        "rational": {
            "type": "object",
            "required": ["num", "den"],
            "additionalProperties": False,
            "properties": {
                "num": {"type": "integer"},
                "den": {"type": "integer", "minimum": 1},
            },
        }
    },
}

DEFAULT_POSITIVITY_POWERS = (1, 2, 3)


def _rat(q: Fraction) -> dict:
    return rational_to_json(q)


def _opt_rat(q: Optional[Fraction]) -> Optional[dict]:
    return None if q is None else rational_to_json(q)


def _class_json(cls: DivisorClass) -> dict:
    return {"a": _rat(cls.a), "b": _rat(cls.b)}


def bundle_derived(bundle: BundleData) -> dict:
    return {
        "r": bundle.rank,
        "d": bundle.degree,
        "genus": bundle.curve.genus,
        "length": bundle.length,
        "semistable": bundle.semistable,
        "slopes": [_rat(s) for s in bundle.slopes],
        "partial_ranks": [bundle.partial_rank(j) for j in range(1, bundle.length + 1)],
        "mu": _rat(bundle.mu),
        "weighted_slope_identity": weighted_slope_identity_check(bundle),
        "anticanonical_class": _class_json(anticanonical_class(bundle)),
        "cone_rays": [
            {"name": ray.name, "slope": _opt_rat(ray.slope), "roles": list(ray.roles)}
            for ray in cone_fan_data(bundle)
        ],
    }


def _cones_verdict(cls: DivisorClass, bundle: BundleData) -> tuple[dict, list[str]]:
    v = classify(cls, bundle)
    payload = {
        "nef": v.nef,
        "pseudoeffective": v.pseudoeffective,
        "big": v.big,
        "positive_cone": v.positive_cone,
        "movable": v.movable,
        "region": v.region,
        "slab_index": v.slab_index,
        "note": "membership is numerical; effectivity of a particular line "
        "bundle in the class is not claimed",
    }
    refs = ["nef-characterization", "pseff-characterization", "positive-cone", "movable-cone"]
    return payload, refs


def _hypersurface_verdict(spec: ClassSpec, bundle: BundleData) -> tuple[dict, list[str]]:
    refs = ["positivity-sign-test"]
    if not spec.is_integral:
        return {"error": "hypersurface invariants require integer k and y"}, refs
    if bundle.rank < 3:
        return {"error": "hypersurface invariants require bundle rank >= 3"}, refs
    hs = HypersurfaceSpec(int(spec.k), int(spec.y), bundle)

    rc = relative_canonical_class(hs)
    payload: dict[str, Any] = {
        "relative_canonical": {
            "ambient_class": _class_json(rc.ambient_class),
            "relatively_very_ample": rc.relatively_very_ample,
        },
        "genus_independent": True,
    }
    fib = fibre_invariants(hs)
    payload["fibre_invariants"] = {
        "canonical_power": _rat(fib.canonical_power),
        "geometric_genus": fib.geometric_genus,
        "section_degree": fib.section_degree,
    }
    if hs.k > bundle.rank:
        kf_power, deg_push = canonical_invariants(hs)
        slope = slope_inequality_report(hs)
        payload["canonical_invariants"] = {
            "kf_power": _rat(kf_power),
            "deg_pushforward": _rat(deg_push),
        }
        payload["slope_inequality"] = {
            "ratio_le_mu": slope.ratio_le_mu,
            "ratio_lt_mu": slope.ratio_lt_mu,
            "invariants_nonnegative": slope.invariants_nonnegative,
            "invariants_positive": slope.invariants_positive,
            "holds": slope.slope_inequality,
            "holds_strictly": slope.slope_inequality_strict,
        }
        refs.append("slope-inequality-equivalence")
    else:
        payload["slope_inequality"] = {
            "note": "k <= r: the relative canonical is not relatively very ample"
        }
    rows = []
    for h in DEFAULT_POSITIVITY_POWERS:
        fp = f_positive(hs, h)
        rows.append(
            {
                "h": h,
                "f_positive": fp.f_positive,
                "margin": _rat(fp.margin),
                "equality": fp.equality,
                "warnings": list(fp.warnings),
            }
        )
    payload["f_positivity"] = rows
    return payload, refs


def _sigma_verdict(spec: ClassSpec, bundle: BundleData) -> tuple[dict, list[str]]:
    refs = ["fixed-locus-cycle", "lct-upper-bound"]
    cls = DivisorClass.from_ky(spec.k, spec.y)
    payload: dict[str, Any] = {}
    try:
        dec = decompose(cls, bundle)
    except (ValidationError, ValueError) as exc:
        payload["decomposition"] = {"error": str(exc)}
        dec = None
    if dec is not None:
        payload["decomposition"] = {
            "t": _rat(dec.t),
            "j": dec.j,
            "cycles": [
                {
                    "index": c.index,
                    "alpha": _rat(c.alpha),
                    "codim": c.codim,
                    "locus": c.locus,
                    "integral": c.integral,
                }
                for c in dec.cycles
            ],
            "positive_part": _class_json(dec.positive_part),
        }
        bounds = lct_bounds(cls, bundle, spec.m)
        payload["lct_bounds"] = {
            "m": bounds.m,
            "applicable": bounds.applicable,
            "fixed_cycle_bound_raw": _opt_rat(bounds.fixed_cycle_bound_raw),
            "fixed_cycle_bound": _opt_rat(bounds.fixed_cycle_bound),
            "fibre_bound": _rat(bounds.fibre_bound),
            "fibre_bound_applies": bounds.fibre_bound_applies,
            "asymptotic": None
            if bounds.asymptotic is None
            else {
                "value": _rat(bounds.asymptotic.value),
                "below_fibre_bound": bounds.asymptotic.below_fibre_bound,
                "ratio_above_mu": bounds.asymptotic.ratio_above_mu,
                "flip_consistent": bounds.asymptotic.flip_consistent,
            },
            "strictness": None
            if bounds.strictness is None
            else {
                "threshold": _rat(bounds.strictness.threshold),
                "bound_le_fibre": bounds.strictness.bound_le_fibre,
                "threshold_below_mu": bounds.strictness.threshold_below_mu,
            },
            "notes": list(bounds.notes),
        }
    if not bundle.semistable and cls.a > 0:
        irr = irreducibility_verdict(cls, bundle)
        payload["irreducibility"] = {
            "verdict": irr.verdict,
            "reason": irr.reason,
            "fixed_codim": irr.fixed_codim,
        }
        refs.append("irreducibility-codimension")
    if bundle.rank == 2 and not bundle.semistable and cls.a > 0:
        z = rank2_zariski(cls, bundle)
        payload["rank2_zariski"] = {
            "negative_coefficient": _rat(z.negative_coefficient),
            "negative_class": _class_json(z.negative_class),
            "positive_part": _class_json(z.positive_part),
            "positive_nef": z.positive_nef,
            "p_dot_n": _rat(z.p_dot_n),
            "n_self_intersection": _rat(z.n_self_intersection),
        }
        refs.append("rank2-zariski-certificate")
    return payload, refs


def _stability_verdict(spec: ClassSpec, bundle: BundleData) -> tuple[dict, list[str]]:
    refs = ["fibre-chow-instability", "lct-strict-bound", "multiplicity-lower-bound"]
    if not spec.is_integral:
        return {"error": "stability verdicts require integer k and y"}, refs
    k, y = int(spec.k), int(spec.y)
    if bundle.rank == 2:
        payload: dict[str, Any] = {}
        if bundle.length == 2 and Fraction(y, k) >= bundle.slope_of(2):
            payload["rank2_crosscheck"] = rank2_instability_crosscheck(bundle, k, y)
            refs.append("rank2-multiplicity-threshold")
        else:
            payload["note"] = "rank-2 crosscheck needs an unstable bundle and t >= mu_2"
        return payload, refs
    rep = stability_report(HypersurfaceSpec(k, y, bundle))
    payload = {
        "bundle_unstable": rep.bundle_unstable,
        "ratio_above_mu": rep.ratio_above_mu,
        "fibre_chow_unstable_all_h": rep.fibre_chow_unstable_all_h,
        "fibres_all_singular": rep.fibres_all_singular,
        "fibre_lct_strict_bound": _opt_rat(rep.fibre_lct_strict_bound),
        "total_space_lct_strict_bound": _opt_rat(rep.total_space_lct_strict_bound),
        "multiplicity_bound_slope": _opt_rat(rep.multiplicity_bound_slope),
        "multiplicity_lower_bound_at_m": _opt_rat(
            None if rep.multiplicity_bound_slope is None else rep.multiplicity_lower_bound(spec.m)
        ),
        "notes": list(rep.notes),
    }
    return payload, refs


_QUERY_HANDLERS = {
    "cones": lambda spec, bundle: _cones_verdict(DivisorClass.from_ky(spec.k, spec.y), bundle),
    "hypersurface": _hypersurface_verdict,
    "sigma": _sigma_verdict,
    "stability": _stability_verdict,
}


def _sweep_rows(scenario: Scenario) -> list[dict]:
    assert scenario.sweep is not None
    bundle = scenario.bundle
    if bundle.rank < 3:
        raise ValidationError("sweep requires bundle rank >= 3")
    s = scenario.sweep
    r, d = bundle.rank, bundle.degree
    rows = []
    for k in range(s.k_range[0], s.k_range[1] + 1):
        for y in range(s.y_range[0], s.y_range[1] + 1):
            hs = HypersurfaceSpec(k, y, bundle)
            all_pos = all(
                f_positive(hs, h).f_positive for h in range(s.h_range[0], s.h_range[1] + 1)
            )
            above = Fraction(y, k) > bundle.mu
            sign = k * d - r * y
            rows.append(
                {
                    "k": k,
                    "y": y,
                    "t": _rat(Fraction(y, k)),
                    "kd_minus_ry": sign,
                    "f_positive_all_h": all_pos,
                    "fibre_chow_unstable": (not bundle.semistable) and above,
                }
            )
    return rows


def run_scenario(scenario: Scenario) -> dict:
    """Produce the full report document for a validated scenario."""
    report: dict[str, Any] = {
        "scenario_echo": scenario.raw,
        "bundle_derived": bundle_derived(scenario.bundle),
        "results": [],
    }
    queries = list(scenario.queries)
    if "all" in queries:
        queries = ["cones", "hypersurface", "sigma", "stability"]
    for spec in scenario.classes:
        verdicts: dict[str, Any] = {}
        refs: list[str] = []
        for query in queries:
            try:
                payload, qrefs = _QUERY_HANDLERS[query](spec, scenario.bundle)
            except (ValidationError, ValueError) as exc:
                payload, qrefs = {"error": str(exc)}, []
            verdicts[query] = payload
            refs.extend(qrefs)
        report["results"].append(
            {
                "class": {
                    "k": _rat(spec.k),
                    "y": _rat(spec.y),
                    "m": spec.m,
                    "a": _rat(spec.k),
                    "b": _rat(-spec.y),
                    "t": _rat(spec.y / spec.k),
                },
                "verdicts": verdicts,
                "cited_refs": sorted(set(refs)),
            }
        )
    if scenario.sweep is not None:
        report["sweep"] = _sweep_rows(scenario)
    return report


def oracle_crosscheck(bundle: BundleData, k: int, y: int) -> Fraction:
    """Chow-oracle evaluation of the top power of the relative canonical
    against the hypersurface class; exposed for reports and tests."""
    r = bundle.rank
    d = bundle.degree
    kf = chow.divisor(Fraction(k - r), Fraction(d - y), bundle)
    x = chow.divisor(Fraction(k), Fraction(-y), bundle)
    return chow.degree(chow.multiply(chow.power(kf, r - 1, bundle), x, bundle), bundle)


# -- rendering --------------------------------------------------------


def _is_rational_dict(obj: Any) -> bool:
    return isinstance(obj, dict) and set(obj) == {"num", "den"}


def _render_value(obj: Any) -> str:
    if _is_rational_dict(obj):
        return format_rational(Fraction(obj["num"], obj["den"]))
    if obj is None:
        return "-"
    if isinstance(obj, bool):
        return "yes" if obj else "no"
    return str(obj)


def _render_lines(obj: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(obj, dict) and not _is_rational_dict(obj):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and not _is_rational_dict(value) and value:
                out.append(f"{pad}{key}:")
                _render_lines(value, indent + 1, out)
            else:
                if isinstance(value, (dict, list)) and not _is_rational_dict(value):
                    out.append(f"{pad}{key}: (none)")
                else:
                    out.append(f"{pad}{key}: {_render_value(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not _is_rational_dict(item):
                out.append(f"{pad}-")
                _render_lines(item, indent + 1, out)
            else:
                out.append(f"{pad}- {_render_value(item)}")
    else:
        out.append(f"{pad}{_render_value(obj)}")


def render_text(report: dict) -> str:
    """Deterministic plain-text rendering of a report document."""
    out: list[str] = ["== bundle =="]
    _render_lines(report["bundle_derived"], 0, out)
    for result in report["results"]:
        cls = result["class"]
        header = (
            f"== class k={_render_value(cls['k'])} y={_render_value(cls['y'])} "
            f"m={cls['m']} =="
        )
        out.append("")
        out.append(header)
        _render_lines(result["verdicts"], 0, out)
        out.append("cited: " + ", ".join(result["cited_refs"]))
    if "sweep" in report:
        out.append("")
        out.append("== sweep ==")
        out.append("k\ty\tt\tkd_minus_ry\tf_positive_all_h\tfibre_chow_unstable")
        for row in report["sweep"]:
            out.append(
                "\t".join(
                    [
                        str(row["k"]),
                        str(row["y"]),
                        _render_value(row["t"]),
                        str(row["kd_minus_ry"]),
                        _render_value(row["f_positive_all_h"]),
                        _render_value(row["fibre_chow_unstable"]),
                    ]
                )
            )
    return "\n".join(out) + "\n"


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def lemma_check_report(result: LemmaCheckResult) -> dict:
    return {
        "grid": {"h_max": result.h_max, "k_max": result.k_max, "r_max": result.r_max},
        "triples_checked": result.triples_checked,
        "checks_run": result.checks_run,
        "counterexamples": [
            {"h": c.h, "k": c.k, "r": c.r, "check": c.check, "value": c.value}
            for c in result.counterexamples
        ],
        "ok": result.ok,
        "elapsed_seconds": round(result.elapsed_seconds, 3),
    }


def render_lemma_check_text(result: LemmaCheckResult) -> str:
    rep = lemma_check_report(result)
    out = [
        "== combinatorial verification ==",
        f"grid: h <= {result.h_max}, k <= {result.k_max}, 2 <= r <= {result.r_max}",
        f"triples checked: {result.triples_checked}",
        f"checks run: {result.checks_run}",
        f"counterexamples: {len(result.counterexamples)}",
        f"elapsed: {rep['elapsed_seconds']} s",
    ]
    for c in result.counterexamples:
        out.append(f"  FAIL {c.check} at h={c.h} k={c.k} r={c.r}: {c.value}")
    out.append("result: " + ("OK" if result.ok else "COUNTEREXAMPLES FOUND"))
    return "\n".join(out) + "\n"
