"""Closed-form uncertainties for single-use, self-switched and time-flipped
Pauli channels acting on the memory qubit of a Bell state.

A Bell state sent through any of the three processes stays Bell-diagonal,

    rho = (I@I + c_x sx@sx - c_y sy@sy + c_z sz@sz) / 4,

so everything reduces to the three correlation coefficients. Single use
damps the Bell coefficients by the channel's Bloch shrink factors
(lx, ly, lz); the self-switch produces the quadratic coefficients
(kx, ky, kz) with kz = lz^2; the time-flip yields (tx, ty, tz) with
tx = 1 - 2 az p, ty = 1 - 2p and tz = lz.

All functions here are closed-form only. Their oracle counterparts live in
the channels/superprocess/uncertainty modules and the test suite verifies
the two paths against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .channels import PauliChannel, shrink_factors
from .matcore import PAULIS, binary_entropy, kron
from .uncertainty import UncertaintyReport

#: Strictness for advantage classification: the advantage conditions are
#: strict inequalities, so ties on the delta_u = 0 contour are not advantaged.
ADVANTAGE_EPS = 1e-9


class BellDiagonalCoeffs(NamedTuple):
    """Correlation coefficients (c_x, c_y, c_z) of a Bell-diagonal state."""

    c_x: float
    c_y: float
    c_z: float


def h(t):
    """Binary entropy of (1 + t)/2; even and strictly decreasing in |t|.

    Accepts scalars or arrays.
    """
    return binary_entropy((1.0 + np.asarray(t, dtype=float)) / 2.0)


def bell_diagonal_state(c: BellDiagonalCoeffs) -> np.ndarray:
    """The 4x4 state (I@I + c_x sx@sx - c_y sy@sy + c_z sz@sz) / 4."""
    _, sx, sy, sz = PAULIS
    ident = kron(PAULIS[0], PAULIS[0])
    return (ident + c.c_x * kron(sx, sx) - c.c_y * kron(sy, sy) + c.c_z * kron(sz, sz)) / 4


def extract_bell_coeffs(rho, tol: float = 1e-12) -> BellDiagonalCoeffs:
    """Read the correlation coefficients off a Bell-diagonal 4x4 state.

    Raises if ``rho`` has structure outside the Bell-diagonal pattern beyond
    ``tol`` (entrywise).
    """
    rho = np.asarray(rho, dtype=complex)
    _, sx, sy, sz = PAULIS
    c = BellDiagonalCoeffs(
        float(np.trace(rho @ kron(sx, sx)).real),
        -float(np.trace(rho @ kron(sy, sy)).real),
        float(np.trace(rho @ kron(sz, sz)).real),
    )
    if np.abs(rho - bell_diagonal_state(c)).max() > tol:
        raise ValueError("state is not Bell-diagonal within tolerance")
    return c


def state_eigenvalues(c_x, c_y, c_z) -> np.ndarray:
    """Eigenvalues of the Bell-diagonal state with coefficients (c_x, c_y, c_z).

    Vectorized over the inputs; the four eigenvalues land on the last axis.
    """
    c_x, c_y, c_z = np.broadcast_arrays(
        np.asarray(c_x, float), np.asarray(c_y, float), np.asarray(c_z, float)
    )
    return 0.25 * np.stack(
        [
            1 + c_z + (c_x + c_y),
            1 + c_z - (c_x + c_y),
            1 - c_z + (c_x - c_y),
            1 - c_z - (c_x - c_y),
        ],
        axis=-1,
    )


def total_uncertainty(c_x, c_z):
    """U = h(c_x) + h(c_z): total uncertainty of the sx/sz measurements."""
    return h(c_x) + h(c_z)


def bound_entropy(c_x, c_y, c_z, tol: float = 1e-12):
    """Shannon entropy of the four Bell-diagonal eigenvalues, in bits."""
    ev = state_eigenvalues(c_x, c_y, c_z)
    if np.any(ev < -tol):
        raise ValueError(f"coefficients give a negative eigenvalue: min = {ev.min():.3e}")
    ev = np.clip(ev, 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(ev > 0, ev * np.log2(np.where(ev > 0, ev, 1.0)), 0.0)
    out = -terms.sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def uncertainty_closed_form(c: BellDiagonalCoeffs) -> UncertaintyReport:
    """Closed-form uncertainty report for a Bell-diagonal state."""
    s_x = float(h(c.c_x))
    s_z = float(h(c.c_z))
    return UncertaintyReport(s_x, s_z, s_x + s_z, float(bound_entropy(*c)))


def coefficients(process: str, p, alpha_x, alpha_y, alpha_z):
    """Bell coefficients (c_x, c_y, c_z) for a process, vectorized.

    ``process`` is "single_use", "switch" or "timeflip". Inputs broadcast;
    no channel validity checks are performed here, so callers scanning
    grids should build their parameters from valid (p, alpha) values.
    """
    p = np.asarray(p, dtype=float)
    ax = np.asarray(alpha_x, dtype=float)
    ay = np.asarray(alpha_y, dtype=float)
    az = np.asarray(alpha_z, dtype=float)
    if process == "single_use":
        return (1 - 2 * (1 - ax) * p, 1 - 2 * (1 - ay) * p, 1 - 2 * (1 - az) * p)
    if process == "switch":
        kx = (1 - 2 * p * (ay + az)) ** 2 + 4 * p**2 * (ax * ay + ax * az - ay * az)
        ky = (1 - 2 * p * (ax + az)) ** 2 + 4 * p**2 * (ax * ay - ax * az + ay * az)
        kz = (1 - 2 * p * (ax + ay)) ** 2
        return (kx, ky, kz)
    if process == "timeflip":
        return (1 - 2 * az * p, 1 - 2 * p, 1 - 2 * (1 - az) * p)
    raise ValueError(f"unknown process {process!r}")


def coeffs_single_use(ch: PauliChannel) -> BellDiagonalCoeffs:
    """Bell coefficients after the channel acts once on the memory qubit."""
    return BellDiagonalCoeffs(*(float(c) for c in coefficients("single_use", ch.p, *ch.alpha)))


def coeffs_switch(ch: PauliChannel) -> BellDiagonalCoeffs:
    """Bell coefficients after self-switching two copies of the channel."""
    return BellDiagonalCoeffs(*(float(c) for c in coefficients("switch", ch.p, *ch.alpha)))


def coeffs_timeflip(ch: PauliChannel) -> BellDiagonalCoeffs:
    """Bell coefficients after the time-flip of the channel."""
    return BellDiagonalCoeffs(*(float(c) for c in coefficients("timeflip", ch.p, *ch.alpha)))


def saturation_predicate(ch: PauliChannel) -> bool:
    """True iff the single-use bound is saturated: ly = lx * lz.

    Holds for all p exactly for the bit-flip and phase-flip channels.
    """
    lx, ly, lz = shrink_factors(ch)
    return abs(ly - lx * lz) <= 1e-12


@dataclass(frozen=True)
class AdvantageVerdict:
    """Comparison of a process against direct single use.

    ``delta_u`` is U_process - U_single_use; negative beyond ADVANTAGE_EPS
    means the process reduces the total uncertainty. The necessary-condition
    field evaluates the algebraic threshold; for the switch it is only
    derived under lx, kx >= 0, and ``condition_applicable`` is False outside
    that sign regime (delta_u remains the ground truth there).
    """

    delta_u: float
    advantaged: bool
    necessary_condition_met: bool
    condition_applicable: bool = True


def switch_advantage(ch: PauliChannel) -> AdvantageVerdict:
    """Does self-switching the channel beat its direct use?

    The algebraic necessary condition is the threshold

        p > (ay + az) / (2 (ay + az - ay*az)),

    valid when lx and kx are both non-negative; its right-hand side is never
    below 1/2 (so no advantage can exist for p <= 1/2).
    """
    delta = float(
        total_uncertainty(coeffs_switch(ch).c_x, coeffs_switch(ch).c_z)
        - total_uncertainty(coeffs_single_use(ch).c_x, coeffs_single_use(ch).c_z)
    )
    lx = shrink_factors(ch).lx
    kx = coeffs_switch(ch).c_x
    _, ay, az = ch.alpha
    denom = 2 * (ay + az - ay * az)
    applicable = lx >= 0 and kx >= 0 and denom > 0
    met = applicable and ch.p > (ay + az) / denom
    return AdvantageVerdict(delta, delta < -ADVANTAGE_EPS, bool(met), bool(applicable))


def timeflip_advantage(ch: PauliChannel) -> AdvantageVerdict:
    """Does time-flipping the channel beat its direct use?

    The sz uncertainties coincide (tz = lz), so the comparison reduces to
    the sx terms and 0 < ay*p < 1 - 2*az*p is necessary and sufficient,
    equivalently |tx| > |lx|.
    """
    delta = float(
        total_uncertainty(coeffs_timeflip(ch).c_x, coeffs_timeflip(ch).c_z)
        - total_uncertainty(coeffs_single_use(ch).c_x, coeffs_single_use(ch).c_z)
    )
    ax, ay, az = ch.alpha
    p = ch.p
    met = 0 < ay * p < 1 - 2 * az * p
    return AdvantageVerdict(delta, delta < -ADVANTAGE_EPS, bool(met))
