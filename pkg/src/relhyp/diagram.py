"""Cone-fan diagram: the labeled boundary rays rendered to a vector file.

The picture lives in the plane with the fibre class along the x axis and
the tautological class along the y axis; the ray of slope t has direction
(-t, 1).  Slabs between consecutive rays are shaded.  Output layout is
deterministic (fixed hash salt, no timestamp metadata).
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bundle import BundleData  # noqa: E402
from .cones import ConeRay, cone_fan_data  # noqa: E402
from .exact import format_rational  # noqa: E402

_SLAB_COLORS = ["#c8e6c9", "#fff9c4", "#ffe0b2", "#ffcdd2", "#e1bee7", "#d0e4f7"]


def _direction(ray: ConeRay) -> tuple[float, float]:
    if ray.slope is None:
        return (1.0, 0.0)
    t = float(ray.slope)
    norm = math.hypot(t, 1.0)
    return (-t / norm, 1.0 / norm)


def emit_cone_diagram(bundle: BundleData, path: str | Path) -> Path:
    """Write the cone-fan figure as a standalone SVG and return its path."""
    path = Path(path)
    rays = cone_fan_data(bundle)

    plt.rcParams["svg.hashsalt"] = "cone-fan"
    fig, ax = plt.subplots(figsize=(6.0, 6.0))

    scale = 1.15
    # shade the sectors swept from the fibre ray through the slope rays,
    # counterclockwise order (increasing slope)
    ordered = [rays[0]] + sorted(
        (r for r in rays[1:]), key=lambda r: r.slope  # type: ignore[arg-type]
    )
    for idx in range(len(ordered) - 1):
        d0 = _direction(ordered[idx])
        d1 = _direction(ordered[idx + 1])
        ax.fill(
            [0.0, d0[0] * scale, d1[0] * scale],
            [0.0, d0[1] * scale, d1[1] * scale],
            color=_SLAB_COLORS[idx % len(_SLAB_COLORS)],
            alpha=0.6,
            linewidth=0.0,
            zorder=1,
        )

    legend_lines = []
    for ray in rays:
        dx, dy = _direction(ray)
        ax.plot([0.0, dx], [0.0, dy], color="#222222", linewidth=1.4, zorder=2)
        label = ray.name
        if ray.slope is not None:
            label += f"  (t = {format_rational(ray.slope)})"
        ax.annotate(
            label,
            xy=(dx * 1.04, dy * 1.04),
            fontsize=8,
            ha="left" if dx >= 0 else "right",
            va="bottom",
        )
        roles = ", ".join(ray.roles)
        legend_lines.append(f"{ray.name}: {roles}")

    if bundle.semistable:
        legend_lines.append("semistable bundle: all cone boundaries coincide")

    ax.text(
        0.02,
        0.02,
        "\n".join(legend_lines),
        transform=ax.transAxes,
        fontsize=7,
        va="bottom",
        family="monospace",
        bbox={"facecolor": "white", "alpha": 0.85, "edgecolor": "#888888"},
    )

    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-0.15, 1.3)
    ax.set_aspect("equal")
    ax.axhline(0.0, color="#aaaaaa", linewidth=0.6, zorder=0)
    ax.axvline(0.0, color="#aaaaaa", linewidth=0.6, zorder=0)
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_title("Divisor cone fan")

    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    return path
