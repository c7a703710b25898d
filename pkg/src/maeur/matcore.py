"""Dense complex-matrix utilities for 2x2 and 4x4 operators.

Everything in this toolkit lives on one or two qubits, so matrices are plain
numpy arrays of shape (2, 2) or (4, 4). This module collects the handful of
spectral and tensor operations the rest of the package is built on, together
with the Pauli matrices and the Bell state used as the canonical input.

All entropies are in bits (log base 2), with the convention 0*log(0) = 0.
"""

from __future__ import annotations

import numpy as np

#: Default absolute tolerance: Frobenius for matrix comparisons, absolute for
#: scalars. 4x4 double-precision eigenproblems are accurate to ~1e-14, so
#: this leaves a wide margin.
DEFAULT_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Pauli basis in the fixed order (identity, x, y, z).
PAULIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in PAULIS:
    _m.setflags(write=False)


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices.

    The first factor is the control/measured qubit A, the second the memory
    qubit B, throughout the package.
    """
    return np.kron(_as_square(a), _as_square(b))


def hermitian_eigenvalues(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    Raises ValueError if ``m`` deviates from Hermiticity by more than ``tol``
    in Frobenius norm.
    """
    m = _as_square(m)
    dev = np.linalg.norm(m - m.conj().T)
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: ||m - m^dag||_F = {dev:.3e} > {tol:.3e}")
    evals = np.linalg.eigvalsh(m)
    return np.sort(evals)[::-1]


def partial_trace_A(m) -> np.ndarray:
    """Trace out the first qubit of a 4x4 operator, returning the 2x2 remainder."""
    m = _as_square(m)
    if m.shape != (4, 4):
        raise ValueError(f"partial_trace_A expects a 4x4 matrix, got shape {m.shape}")
    return m.reshape(2, 2, 2, 2).trace(axis1=0, axis2=2)


def partial_trace_B(m) -> np.ndarray:
    """Trace out the second qubit of a 4x4 operator."""
    m = _as_square(m)
    if m.shape != (4, 4):
        raise ValueError(f"partial_trace_B expects a 4x4 matrix, got shape {m.shape}")
    return m.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3)


def shannon_entropy(probs, tol: float = DEFAULT_TOL) -> float:
    """Shannon entropy (bits) of a probability vector.

    Entries in [-tol, 0) are treated as round-off and clamped to zero; more
    negative entries raise. The vector must sum to 1 within ``tol``.
    """
    p = np.asarray(probs, dtype=float)
    if np.any(p < -tol):
        raise ValueError(f"negative probability beyond tolerance: min = {p.min():.3e}")
    if abs(p.sum() - 1.0) > max(tol, 1e-9):
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    p = np.clip(p, 0.0, None)
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def von_neumann_entropy(m, tol: float = DEFAULT_TOL) -> float:
    """Von Neumann entropy (bits) of a density matrix.

    ``m`` must be Hermitian, positive semidefinite within ``tol`` and have
    unit trace within ``tol``. Eigenvalues in [-tol, 0) clamp to zero.
    """
    evals = hermitian_eigenvalues(m, tol=tol)
    return shannon_entropy(evals, tol=tol)


def binary_entropy(x) -> float:
    """Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), in bits.

    Accepts scalars or arrays. Values within 1e-12 outside [0, 1] are clamped;
    anything further out raises.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1.0 + 1e-12):
        raise ValueError("binary_entropy argument outside [0, 1]")
    x = np.clip(x, 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -np.where(x > 0, x * np.log2(np.where(x > 0, x, 1.0)), 0.0) \
            - np.where(x < 1, (1 - x) * np.log2(np.where(x < 1, 1 - x, 1.0)), 0.0)
    if h.ndim == 0:
        return float(h)
    return h


def bell_state() -> np.ndarray:
    """Density matrix of the Bell state (|00> + |11>)/sqrt(2).

    In the Fano-Bloch form this is
    (I@I + sx@sx - sy@sy + sz@sz) / 4.
    """
    psi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return np.outer(psi, psi.conj())


def is_density_matrix(m, tol: float = DEFAULT_TOL) -> bool:
    """True if ``m`` is Hermitian, PSD and unit-trace within ``tol``."""
    m = _as_square(m)
    if np.linalg.norm(m - m.conj().T) > tol:
        return False
    if abs(np.trace(m).real - 1.0) > max(tol, 1e-9):
        return False
    return bool(np.linalg.eigvalsh(m).min() >= -tol)
