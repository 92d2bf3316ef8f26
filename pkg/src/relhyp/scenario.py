"""Scenario file parsing and validation.

Scenarios are JSON documents; rationals may be written as integers or as
"p/q" strings so that exactness survives the I/O boundary.  Schema
violations are reported with the offending field path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import jsonschema

from .bundle import BundleData, CurveData, ValidationError, validate
from .exact import parse_rational

QUERIES = ("cones", "hypersurface", "sigma", "stability", "all")

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
    ]
}

_RANGE = {
    "type": "array",
    "items": {"type": "integer"},
    "minItems": 2,
    "maxItems": 2,
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["curve", "bundle", "queries"],
    "additionalProperties": False,
    "properties": {
        "curve": {
            "type": "object",
            "required": ["genus"],
            "additionalProperties": False,
            "properties": {"genus": {"type": "integer", "minimum": 0}},
        },
        "bundle": {
            "type": "object",
            "required": ["pieces"],
            "additionalProperties": False,
            "properties": {
                "pieces": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "required": ["rank", "degree"],
                        "additionalProperties": False,
                        "properties": {
                            "rank": {"type": "integer", "minimum": 1},
                            "degree": {"type": "integer"},
                        },
                    },
                }
            },
        },
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["k", "y"],
                "additionalProperties": False,
                "properties": {
                    "k": _RATIONAL,
                    "y": _RATIONAL,
                    "m": {"type": "integer", "minimum": 1},
                },
            },
        },
        "queries": {
            "type": "array",
            "minItems": 1,
            "items": {"enum": list(QUERIES)},
        },
        "sweep": {
            "type": "object",
            "required": ["k_range", "y_range", "h_range"],
            "additionalProperties": False,
            "properties": {
                "k_range": _RANGE,
                "y_range": _RANGE,
                "h_range": _RANGE,
            },
        },
    },
}


@dataclass(frozen=True)
class ClassSpec:
    k: Fraction
    y: Fraction
    m: int = 1

    @property
    def is_integral(self) -> bool:
        return self.k.denominator == 1 and self.y.denominator == 1


@dataclass(frozen=True)
class SweepSpec:
    k_range: tuple[int, int]
    y_range: tuple[int, int]
    h_range: tuple[int, int]


@dataclass(frozen=True)
class Scenario:
    bundle: BundleData
    classes: tuple[ClassSpec, ...]
    queries: tuple[str, ...]
    sweep: Optional[SweepSpec] = None
    raw: dict = field(default_factory=dict)


def parse_scenario(data: dict) -> Scenario:
    """Validate a parsed JSON document and build the scenario."""
    try:
        jsonschema.validate(data, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ValidationError(f"scenario field {path}: {exc.message}") from exc

    curve = CurveData(genus=data["curve"]["genus"])
    bundle = validate(
        [(p["rank"], p["degree"]) for p in data["bundle"]["pieces"]], curve
    )

    classes = []
    for entry in data.get("classes", []):
        k = parse_rational(entry["k"])
        if k <= 0:
            raise ValidationError(f"class k must be positive, got {k}")
        classes.append(ClassSpec(k=k, y=parse_rational(entry["y"]), m=entry.get("m", 1)))

    sweep = None
    if "sweep" in data:
        s = data["sweep"]
        ranges = {}
        for name in ("k_range", "y_range", "h_range"):
            lo, hi = s[name]
            if hi < lo:
                raise ValidationError(f"sweep {name} is empty: [{lo}, {hi}]")
            ranges[name] = (lo, hi)
        if ranges["k_range"][0] < 1:
            raise ValidationError("sweep k_range must start at 1 or above")
        if ranges["h_range"][0] < 1:
            raise ValidationError("sweep h_range must start at 1 or above")
        sweep = SweepSpec(**ranges)

    return Scenario(
        bundle=bundle,
        classes=tuple(classes),
        queries=tuple(data["queries"]),
        sweep=sweep,
        raw=data,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"scenario parse error at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ValidationError("scenario document must be a JSON object")
    return parse_scenario(data)
