"""Parameter sweeps over Pauli channels and CSV emission.

Two kinds of scan regenerate the data behind the figure layouts:

* 1-D sweeps over the error probability p at a fixed bias vector, and
* 2-D scans over the bias simplex (ax + ay + az = 1, all >= 0) at fixed p,

each comparing the self-switch or time-flip against direct single use. All
grids are deterministic, so a scan is byte-for-byte reproducible. Analytic
closed forms produce the values; a configurable random subsample is
cross-checked against the brute-force density-matrix oracle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import analytic
from .analytic import BellDiagonalCoeffs
from .channels import PauliChannel, pauli_to_kraus
from .matcore import bell_state
from .superprocess import apply_superchannel, apply_to_memory, build_switch, build_timeflip
from .uncertainty import UncertaintyReport, evaluate_maeur

PROCESSES = ("single_use", "switch", "timeflip")
COMPARISONS = ("switch", "timeflip")

#: CSV column order; fixed so downstream plotting needs no configuration.
CSV_COLUMNS = (
    "p", "alpha_x", "alpha_y", "alpha_z",
    "s_x_su", "s_z_su", "u_su", "b_su",
    "s_x_proc", "s_z_proc", "u_proc", "b_proc",
    "delta_u",
)


@dataclass(frozen=True)
class SweepSpec:
    """Specification of a sweep.

    For 1-D sweeps, ``alpha`` is fixed and ``p_grid`` gives (pmin, pmax,
    steps). For 2-D simplex scans, ``fixed_p`` is set and ``simplex_step``
    is the denominator N of the grid spacing 1/N.
    """

    process: str = "compare_switch"
    alpha: tuple[float, float, float] = (0.5, 0.5, 0.0)
    p_grid: tuple[float, float, int] = (0.0, 1.0, 500)
    simplex_step: int = 200
    fixed_p: float = 0.5
    oracle_check: bool = True
    oracle_fraction: float = 0.01
    oracle_seed: int = 0
    tol: float = 1e-9

    def __post_init__(self):
        valid = PROCESSES + ("compare_switch", "compare_timeflip")
        if self.process not in valid:
            raise ValueError(f"process must be one of {valid}, got {self.process!r}")
        pmin, pmax, steps = self.p_grid
        if not (0.0 <= pmin <= pmax <= 1.0):
            raise ValueError(f"p range {pmin!r}..{pmax!r} outside [0, 1]")
        if steps < 1 or self.simplex_step < 1:
            raise ValueError("grid step counts must be positive")


@dataclass(frozen=True)
class ScanRow:
    """One grid point: channel parameters plus both uncertainty reports."""

    p: float
    alpha_x: float
    alpha_y: float
    alpha_z: float
    s_x_su: float
    s_z_su: float
    u_su: float
    b_su: float
    s_x_proc: float
    s_z_proc: float
    u_proc: float
    b_proc: float
    delta_u: float


_COEFFS = {
    "single_use": analytic.coeffs_single_use,
    "switch": analytic.coeffs_switch,
    "timeflip": analytic.coeffs_timeflip,
}


def _process_of(spec_process: str) -> str:
    return {"compare_switch": "switch", "compare_timeflip": "timeflip"}.get(
        spec_process, spec_process
    )


def _rows(p, ax, ay, az, process: str) -> list[ScanRow]:
    """Vectorized closed-form evaluation of a whole grid at once."""
    p, ax, ay, az = np.broadcast_arrays(
        np.atleast_1d(np.asarray(p, float)), np.asarray(ax, float),
        np.asarray(ay, float), np.asarray(az, float),
    )
    cols = {}
    for tag, proc in (("su", "single_use"), ("proc", process)):
        cx, cy, cz = analytic.coefficients(proc, p, ax, ay, az)
        cols[f"s_x_{tag}"] = analytic.h(cx)
        cols[f"s_z_{tag}"] = analytic.h(cz)
        cols[f"u_{tag}"] = cols[f"s_x_{tag}"] + cols[f"s_z_{tag}"]
        cols[f"b_{tag}"] = analytic.bound_entropy(cx, cy, cz)
    delta = cols["u_proc"] - cols["u_su"]
    return [
        ScanRow(
            p[i], ax[i], ay[i], az[i],
            cols["s_x_su"][i], cols["s_z_su"][i], cols["u_su"][i], cols["b_su"][i],
            cols["s_x_proc"][i], cols["s_z_proc"][i], cols["u_proc"][i], cols["b_proc"][i],
            delta[i],
        )
        for i in range(p.size)
    ]


def oracle_report(ch: PauliChannel, process: str) -> UncertaintyReport:
    """Brute-force uncertainty report via explicit Kraus evolution."""
    k = pauli_to_kraus(ch)
    rho0 = bell_state()
    if process == "single_use":
        rho = apply_to_memory(k, rho0)
    elif process == "switch":
        rho = apply_superchannel(build_switch(k, k), rho0)
    elif process == "timeflip":
        rho = apply_superchannel(build_timeflip(k), rho0)
    else:
        raise ValueError(f"unknown process {process!r}")
    return evaluate_maeur(rho)


def _spot_check(rows: list[ScanRow], process: str, spec: SweepSpec) -> None:
    if not spec.oracle_check or not rows:
        return
    rng = np.random.default_rng(spec.oracle_seed)
    n = max(1, int(len(rows) * spec.oracle_fraction))
    for idx in rng.choice(len(rows), size=min(n, len(rows)), replace=False):
        row = rows[idx]
        ch = PauliChannel(row.p, (row.alpha_x, row.alpha_y, row.alpha_z))
        for proc, u, b in (("single_use", row.u_su, row.b_su), (process, row.u_proc, row.b_proc)):
            ref = oracle_report(ch, proc)
            if abs(ref.total_u - u) > spec.tol or abs(ref.bound_b - b) > spec.tol:
                raise AssertionError(
                    f"oracle mismatch at p={row.p}, alpha=({row.alpha_x}, "
                    f"{row.alpha_y}, {row.alpha_z}), process={proc}"
                )


def sweep_1d(spec: SweepSpec) -> list[ScanRow]:
    """Sweep the error probability p at fixed bias vector."""
    pmin, pmax, steps = spec.p_grid
    process = _process_of(spec.process)
    ax, ay, az = PauliChannel(0.0, spec.alpha).alpha  # validates alpha
    rows = _rows(np.linspace(pmin, pmax, steps + 1), ax, ay, az, process)
    _spot_check(rows, process, spec)
    return rows


def simplex_grid(denominator: int):
    """Deterministic grid over the bias simplex, ordered lexicographically
    by (i, j) with alpha = (i/N, j/N, 1 - i/N - j/N)."""
    n = denominator
    for i in range(n + 1):
        for j in range(n + 1 - i):
            yield (i / n, j / n, (n - i - j) / n)


def scan_simplex(spec: SweepSpec) -> list[ScanRow]:
    """Scan the bias simplex at fixed p for a switch/time-flip comparison."""
    process = _process_of(spec.process)
    grid = np.array(list(simplex_grid(spec.simplex_step)))
    rows = _rows(spec.fixed_p, grid[:, 0], grid[:, 1], grid[:, 2], process)
    _spot_check(rows, process, spec)
    return rows


class NoCrossover(ValueError):
    """Raised when the compared difference does not change sign on (0, 1]."""


def find_crossover(
    alpha: tuple[float, float, float],
    comparison: str,
    quantity: str = "total",
    xtol: float = 1e-6,
) -> float:
    """Bisection root of the process-minus-single-use difference over p.

    ``quantity`` is "x_uncertainty" (the sx measurement term only) or
    "total". Raises :class:`NoCrossover` if the difference never changes
    sign on the scan grid.
    """
    coeff_fn = _COEFFS[_process_of(comparison)]
    if quantity == "x_uncertainty":
        def diff(p):
            ch = PauliChannel(p, alpha)
            return float(analytic.h(coeff_fn(ch).c_x) - analytic.h(analytic.coeffs_single_use(ch).c_x))
    elif quantity == "total":
        def diff(p):
            ch = PauliChannel(p, alpha)
            cp, cs = coeff_fn(ch), analytic.coeffs_single_use(ch)
            return float(
                analytic.total_uncertainty(cp.c_x, cp.c_z)
                - analytic.total_uncertainty(cs.c_x, cs.c_z)
            )
    else:
        raise ValueError(f"quantity must be 'x_uncertainty' or 'total', got {quantity!r}")

    # Bracket the first sign change on a coarse grid, then bisect. The
    # difference vanishes at p=0, so start strictly inside the interval.
    grid = np.linspace(1e-6, 1.0, 1001)
    vals = [diff(p) for p in grid]
    lo = hi = flo = None
    for a, b, fa, fb in zip(grid, grid[1:], vals, vals[1:]):
        if fb == 0.0 and fa != 0.0:
            return float(b)
        if fa * fb < 0.0:
            lo, hi, flo = a, b, fa
            break
    if lo is None:
        raise NoCrossover(f"no sign change of {quantity} difference for alpha={alpha}")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fm = diff(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def emit_csv(rows: list[ScanRow], path) -> None:
    """Write rows in the fixed column order with 12 significant digits."""
    with open(path, "w", newline="") as fh:
        _write_csv(rows, fh)


def csv_text(rows: list[ScanRow]) -> str:
    buf = io.StringIO()
    _write_csv(rows, buf)
    return buf.getvalue()


def _write_csv(rows, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(_fmt(getattr(row, col)) for col in CSV_COLUMNS)


def read_csv(path) -> list[ScanRow]:
    """Parse a sweep CSV back into rows (round-trips emit_csv output)."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(CSV_COLUMNS) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"CSV is missing columns: {sorted(missing)}")
        return [ScanRow(**{col: float(rec[col]) for col in CSV_COLUMNS}) for rec in reader]


def random_pauli_channel(rng: np.random.Generator) -> PauliChannel:
    """Uniform p and flat-Dirichlet bias vector."""
    alpha = rng.dirichlet((1.0, 1.0, 1.0))
    return PauliChannel(float(rng.uniform(0.0, 1.0)), tuple(alpha))


def verify_oracle_equivalence(samples: int, seed: int, tol: float = 1e-9) -> list[str]:
    """Compare closed forms against the brute-force path on random channels.

    Returns a list of mismatch descriptions (empty means success).
    """
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(samples):
        ch = random_pauli_channel(rng)
        for process in PROCESSES:
            closed = analytic.uncertainty_closed_form(_COEFFS[process](ch))
            ref = oracle_report(ch, process)
            if abs(closed.total_u - ref.total_u) > tol or abs(closed.bound_b - ref.bound_b) > tol:
                failures.append(
                    f"{process}: p={ch.p:.12g} alpha={ch.alpha} "
                    f"dU={closed.total_u - ref.total_u:.3e} dB={closed.bound_b - ref.bound_b:.3e}"
                )
    return failures
