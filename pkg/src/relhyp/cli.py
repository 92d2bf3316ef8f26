"""Command-line interface.

Subcommands take a JSON scenario file and emit a text or JSON report to
stdout or to --out.  Exit codes: 0 success, 1 validation/verification
failure, 2 I/O error.
"""

from __future__ import annotations

import random
import sys
from dataclasses import replace
from pathlib import Path

import click

from .bundle import ValidationError
from .diagram import emit_cone_diagram
from .report import (
    lemma_check_report,
    render_json,
    render_lemma_check_text,
    render_text,
    run_scenario,
)
from .scenario import Scenario, load_scenario
from .verification import lemma_check

EXIT_VALIDATION = 1
EXIT_IO = 2

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report output format.",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the report to a file instead of stdout.",
)


def _emit(content: str, out: Path | None) -> None:
    if out is None:
        click.echo(content, nl=False)
        return
    try:
        out.write_text(content, encoding="utf-8")
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)


def _load(path: str) -> Scenario:
    try:
        return load_scenario(path)
    except FileNotFoundError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


def _run(path: str, queries: tuple[str, ...] | None, fmt: str, out: Path | None) -> None:
    scenario = _load(path)
    if queries is not None:
        scenario = replace(scenario, queries=queries, sweep=None)
    try:
        report = run_scenario(scenario)
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    content = render_json(report) if fmt == "json" else render_text(report)
    _emit(content, out)


@click.group()
@click.option(
    "--seed",
    type=int,
    default=0,
    show_default=True,
    help="Seed for any randomized sampling; runs are deterministic per seed.",
)
def main(seed: int) -> None:
    """Exact-arithmetic verdicts for divisor classes on projective bundles."""
    random.seed(seed)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@format_option
@out_option
def cones(scenario: str, fmt: str, out: Path | None) -> None:
    """Cone membership and region classification for each class."""
    _run(scenario, ("cones",), fmt, out)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@format_option
@out_option
def hyp(scenario: str, fmt: str, out: Path | None) -> None:
    """Hypersurface invariants, slope inequality and positivity verdicts."""
    _run(scenario, ("hypersurface",), fmt, out)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@format_option
@out_option
def sigma(scenario: str, fmt: str, out: Path | None) -> None:
    """Fixed-locus decomposition, threshold bounds and irreducibility."""
    _run(scenario, ("sigma",), fmt, out)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@format_option
@out_option
def stability(scenario: str, fmt: str, out: Path | None) -> None:
    """Instability and singularity verdicts for each class."""
    _run(scenario, ("stability",), fmt, out)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@format_option
@out_option
def sweep(scenario: str, fmt: str, out: Path | None) -> None:
    """Grid sweep over the scenario's k/y/h ranges (delimited text output)."""
    s = _load(scenario)
    if s.sweep is None:
        click.echo("validation error: scenario has no sweep section", err=True)
        sys.exit(EXIT_VALIDATION)
    scenario_obj = replace(s, queries=(), classes=())
    try:
        report = run_scenario(scenario_obj)
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    content = render_json(report) if fmt == "json" else render_text(report)
    _emit(content, out)


@main.command("lemma-check")
@click.option(
    "--grid",
    nargs=3,
    type=int,
    default=(20, 20, 5),
    show_default=True,
    metavar="H_MAX K_MAX R_MAX",
    help="Upper bounds of the exhaustive verification grid.",
)
@format_option
@out_option
def lemma_check_cmd(grid: tuple[int, int, int], fmt: str, out: Path | None) -> None:
    """Exhaustively verify the combinatorial inequalities on a grid."""
    h_max, k_max, r_max = grid
    try:
        result = lemma_check(h_max, k_max, r_max)
    except ValueError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    if fmt == "json":
        import json

        content = json.dumps(lemma_check_report(result), indent=2, sort_keys=True) + "\n"
    else:
        content = render_lemma_check_text(result)
    _emit(content, out)
    if not result.ok:
        sys.exit(EXIT_VALIDATION)


@main.command()
@click.argument("scenario", type=click.Path(exists=False))
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("cone_fan.svg"),
    show_default=True,
    help="Output SVG path.",
)
def diagram(scenario: str, out: Path) -> None:
    """Render the cone-fan figure for the scenario's bundle."""
    s = _load(scenario)
    try:
        emit_cone_diagram(s.bundle, out)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
