"""Memory-assisted entropic uncertainty evaluation by brute force.

For a two-qubit state rho_AB, measurements of sx and sz on qubit A with
qubit B as quantum memory obey

    S(X|B) + S(Z|B) >= -log2 c + S(A|B),

with complementarity c = 1/2 for the sx/sz pair. For states with a
maximally mixed memory marginal (every Bell-diagonal state), the right-hand
side reduces to S(rho_AB). This module evaluates both sides directly from
the density matrix; no closed forms enter here, so it serves as the
independent oracle for the analytic module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matcore import (
    DEFAULT_TOL,
    I2,
    SIGMA_X,
    SIGMA_Z,
    kron,
    partial_trace_A,
    von_neumann_entropy,
)


def _eigenprojectors(sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return (I2 + sigma) / 2, (I2 - sigma) / 2


@dataclass(frozen=True)
class MeasurementPair:
    """The fixed sx/sz observable pair with complementarity c = 1/2.

    The complementarity can be overridden for testing the bound arithmetic,
    but the projectors always belong to sx and sz.
    """

    complementarity: float = 0.5
    projectors_x: tuple[np.ndarray, np.ndarray] = field(default_factory=lambda: _eigenprojectors(SIGMA_X))
    projectors_z: tuple[np.ndarray, np.ndarray] = field(default_factory=lambda: _eigenprojectors(SIGMA_Z))

    def __post_init__(self):
        if not 0.0 < self.complementarity <= 1.0:
            raise ValueError(f"complementarity must be in (0, 1], got {self.complementarity!r}")


@dataclass(frozen=True)
class UncertaintyReport:
    """Both sides of the memory-assisted uncertainty relation, in bits."""

    s_x_given_b: float
    s_z_given_b: float
    total_u: float
    bound_b: float

    @property
    def slack(self) -> float:
        return self.total_u - self.bound_b


def maassen_uffink_bound(pair: MeasurementPair) -> float:
    """State-independent part of the bound, -log2 c (equal to 1 for sx/sz)."""
    return float(-np.log2(pair.complementarity))


def post_measurement_state(rho, obs: str, pair: MeasurementPair | None = None) -> np.ndarray:
    """Non-selective measurement of ``obs`` ("x" or "z") on qubit A.

    Returns sum_k (P_k (x) I) rho (P_k (x) I); the marginal on B is
    unchanged.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho.shape}")
    pair = pair or MeasurementPair()
    if obs == "x":
        projs = pair.projectors_x
    elif obs == "z":
        projs = pair.projectors_z
    else:
        raise ValueError(f"observable must be 'x' or 'z', got {obs!r}")
    out = np.zeros((4, 4), dtype=complex)
    for proj in projs:
        big = kron(proj, I2)
        out += big @ rho @ big
    return out


def conditional_entropy(rho_joint, tol: float = DEFAULT_TOL) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B), in bits. May be negative."""
    return von_neumann_entropy(rho_joint, tol=tol) - von_neumann_entropy(
        partial_trace_A(rho_joint), tol=tol
    )


def evaluate_maeur(
    rho,
    pair: MeasurementPair | None = None,
    tol: float = DEFAULT_TOL,
    require_mixed_memory: bool = True,
) -> UncertaintyReport:
    """Evaluate both sides of the uncertainty relation for a 4x4 state.

    With ``require_mixed_memory`` (the default) the memory marginal must be
    I/2 within 1e-9; the bound then simplifies to S(rho_AB). Passing
    ``require_mixed_memory=False`` uses the general bound
    -log2 c + S(A|B) instead.
    """
    rho = np.asarray(rho, dtype=complex)
    pair = pair or MeasurementPair()
    rho_b = partial_trace_A(rho)
    s_x = conditional_entropy(post_measurement_state(rho, "x", pair), tol=tol)
    s_z = conditional_entropy(post_measurement_state(rho, "z", pair), tol=tol)
    if require_mixed_memory:
        if np.linalg.norm(rho_b - I2 / 2) > 1e-9:
            raise ValueError(
                "memory marginal is not maximally mixed; the simplified bound "
                "S(rho_AB) does not apply (pass require_mixed_memory=False)"
            )
        bound = von_neumann_entropy(rho, tol=tol)
    else:
        bound = maassen_uffink_bound(pair) + conditional_entropy(rho, tol=tol)
    return UncertaintyReport(s_x, s_z, s_x + s_z, bound)
