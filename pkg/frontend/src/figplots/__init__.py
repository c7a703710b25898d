"""Read-side figure rendering for entropic-uncertainty scan CSVs."""

from .io import SCAN_COLUMNS, load_scan_csv
from .render import (
    FigureSpec,
    PanelSummary,
    RenderResult,
    render_figure,
)

__all__ = [
    "SCAN_COLUMNS",
    "load_scan_csv",
    "FigureSpec",
    "PanelSummary",
    "RenderResult",
    "render_figure",
]
__version__ = "0.1.0"
