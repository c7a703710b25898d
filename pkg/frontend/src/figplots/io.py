"""CSV loading for scan data.

This package is strictly read-side: it parses the columns the scan tool
emitted and displays them. Nothing here recomputes a physical quantity.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

#: columns every scan CSV carries
SCAN_COLUMNS = (
    "p",
    "alpha_x",
    "alpha_y",
    "alpha_z",
    "s_x_su",
    "s_z_su",
    "u_su",
    "b_su",
    "s_x_proc",
    "s_z_proc",
    "u_proc",
    "b_proc",
    "delta_u",
)


def load_scan_csv(path: str | Path) -> dict[str, np.ndarray]:
    """Read one scan CSV into a column -> float-array mapping.

    Raises ValueError on missing columns or a header-only file.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in SCAN_COLUMNS if c not in header]
        if missing:
            raise ValueError(f"{path}: missing required columns {missing}")
        rows = list(reader)
    if not rows:
        raise ValueError(f"{path}: no data rows (header-only CSV)")
    return {
        col: np.array([float(row[col]) for row in rows]) for col in SCAN_COLUMNS
    }
