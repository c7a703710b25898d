"""Figure layouts for entropic-uncertainty scan data.

Two layouts, both 2x2:

* figures 1-2 (1-D error-probability sweeps): panels for S(X|B), S(Z|B),
  the total U, and the bound, each showing the single-use curve next to the
  superposed-process curve;
* figures 3-5 (bias-simplex maps): one panel per CSV, a density plot of
  delta_u over (alpha_x, alpha_y) with the non-physical region
  alpha_x + alpha_y > 1 left blank and the delta_u = 0 contour dashed.

Rendering is read-side only: every plotted number comes straight out of the
CSV columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import load_scan_csv

#: delta_u values above this are not drawn as a negative region
NEGATIVE_EPS = -1e-9

SWEEP_FIGURES = (1, 2)
SIMPLEX_FIGURES = (3, 4, 5)
OUTPUT_SUFFIXES = (".png", ".pdf")


@dataclass(frozen=True)
class FigureSpec:
    """One render request: which layout, which CSVs, where to write."""

    figure_id: int
    data: tuple[str, ...]
    out: str

    def __post_init__(self):
        if self.figure_id not in SWEEP_FIGURES + SIMPLEX_FIGURES:
            raise ValueError(f"figure_id must be 1..5, got {self.figure_id}")
        if not self.data:
            raise ValueError("at least one data CSV is required")
        if self.figure_id in SIMPLEX_FIGURES and len(self.data) > 4:
            raise ValueError("simplex figures take at most 4 CSVs (2x2 panels)")
        suffix = Path(self.out).suffix.lower()
        if suffix not in OUTPUT_SUFFIXES:
            raise ValueError(
                f"output must end in one of {OUTPUT_SUFFIXES}, got {suffix!r}"
            )


@dataclass(frozen=True)
class PanelSummary:
    """What one rendered panel actually shows, for downstream checks."""

    source: str
    p: float
    has_negative_region: bool
    grid_step: float = float("nan")
    contour_segments: tuple[np.ndarray, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class RenderResult:
    figure_id: int
    out: str
    panels: tuple[PanelSummary, ...]


def _sweep_panels(fig, tables, sources) -> tuple[PanelSummary, ...]:
    quantities = (
        ("s_x_su", "s_x_proc", "S(X|B)"),
        ("s_z_su", "s_z_proc", "S(Z|B)"),
        ("u_su", "u_proc", "total uncertainty U"),
        ("b_su", "b_proc", "bound"),
    )
    axes = fig.subplots(2, 2).ravel()
    for ax, (col_su, col_proc, title) in zip(axes, quantities):
        for table, source in zip(tables, sources):
            label = Path(source).stem
            ax.plot(table["p"], table[col_su], ls="--", label=f"{label} direct")
            ax.plot(table["p"], table[col_proc], label=f"{label} superposed")
        ax.set_title(title)
        ax.set_xlabel("p")
        ax.grid(alpha=0.3)
    axes[0].legend(fontsize="small")
    return tuple(
        PanelSummary(
            source=source,
            p=float(table["p"][-1]),
            has_negative_region=bool((table["delta_u"] < NEGATIVE_EPS).any()),
        )
        for table, source in zip(tables, sources)
    )


def _pivot_simplex(table) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Arrange scattered (alpha_x, alpha_y, delta_u) onto its regular grid."""
    ax_vals = np.unique(np.round(table["alpha_x"], 12))
    step = float(np.min(np.diff(ax_vals))) if len(ax_vals) > 1 else 1.0
    n = int(round(1.0 / step))
    coords = np.linspace(0.0, 1.0, n + 1)
    grid = np.full((n + 1, n + 1), np.nan)
    i = np.rint(table["alpha_x"] / step).astype(int)
    j = np.rint(table["alpha_y"] / step).astype(int)
    grid[j, i] = table["delta_u"]
    return coords, coords, grid, step


def _simplex_panels(fig, tables, sources) -> tuple[PanelSummary, ...]:
    axes = fig.subplots(2, 2).ravel()
    panels = []
    for ax, table, source in zip(axes, tables, sources):
        xs, ys, grid, step = _pivot_simplex(table)
        masked = np.ma.masked_invalid(grid)
        span = max(float(np.nanmax(np.abs(grid))), 1e-12)
        mesh = ax.pcolormesh(
            xs, ys, masked, cmap="RdBu", vmin=-span, vmax=span, shading="nearest"
        )
        fig.colorbar(mesh, ax=ax, label="delta_u")
        negative = bool((table["delta_u"] < NEGATIVE_EPS).any())
        segments: tuple[np.ndarray, ...] = ()
        if negative and (table["delta_u"] > -NEGATIVE_EPS).any():
            contour = ax.contour(
                xs, ys, masked, levels=[0.0], colors="k", linestyles="dashed",
                linewidths=1.5,
            )
            segments = tuple(np.asarray(s) for s in contour.allsegs[0])
        p = float(table["p"][0])
        ax.set_title(f"p = {p:g}")
        ax.set_xlabel("alpha_x")
        ax.set_ylabel("alpha_y")
        ax.set_aspect("equal")
        panels.append(
            PanelSummary(
                source=source,
                p=p,
                has_negative_region=negative,
                grid_step=step,
                contour_segments=segments,
            )
        )
    for ax in axes[len(tables):]:
        ax.set_axis_off()
    return tuple(panels)


def render_figure(spec: FigureSpec) -> RenderResult:
    """Render one figure to ``spec.out`` and summarize what was drawn."""
    tables = [load_scan_csv(path) for path in spec.data]
    fig = plt.figure(figsize=(10, 8), constrained_layout=True)
    try:
        if spec.figure_id in SWEEP_FIGURES:
            panels = _sweep_panels(fig, tables, spec.data)
        else:
            panels = _simplex_panels(fig, tables, spec.data)
        fig.savefig(spec.out)
    finally:
        plt.close(fig)
    return RenderResult(figure_id=spec.figure_id, out=spec.out, panels=panels)
