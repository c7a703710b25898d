"""Qubit quantum channels in Kraus form, with Pauli channels first-class.

A Pauli channel mixes the identity with bit-flip (sx), bit-phase-flip (sy)
and phase-flip (sz) errors. We parametrize it by an overall error probability
p and a bias vector alpha = (ax, ay, az) with non-negative components summing
to one, so the mixing weights are q = (1-p, ax*p, ay*p, az*p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .matcore import DEFAULT_TOL, I2, PAULIS


@dataclass(frozen=True)
class PauliChannel:
    """Pauli channel parametrized by error probability p and bias alpha.

    alpha components must be non-negative; sums within 1e-9 of one are
    accepted and the last component is adjusted to restore the exact sum,
    anything further off is rejected (silent renormalization would mask
    caller bugs).
    """

    p: float
    alpha: tuple[float, float, float]

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"error probability p = {self.p!r} outside [0, 1]")
        ax, ay, az = (float(a) for a in self.alpha)
        if min(ax, ay, az) < -1e-12:
            raise ValueError(f"bias vector has negative component: {self.alpha!r}")
        ax, ay, az = max(ax, 0.0), max(ay, 0.0), max(az, 0.0)
        s = ax + ay + az
        if abs(s - 1.0) > 1e-9:
            raise ValueError(f"bias vector sums to {s!r}, must be 1")
        # restore the exact sum via the last component; clamp the one-ulp
        # case where ax + ay already exceeds 1
        object.__setattr__(self, "alpha", (ax, ay, max(1.0 - ax - ay, 0.0)))

    @classmethod
    def from_q(cls, q) -> "PauliChannel":
        """Build from raw mixing weights q = (q0, qx, qy, qz).

        Rejects inputs with |sum(q) - 1| > 1e-12 rather than renormalizing.
        """
        q = tuple(float(v) for v in q)
        if len(q) != 4:
            raise ValueError("q must have four components (q0, qx, qy, qz)")
        if min(q) < -1e-12:
            raise ValueError(f"q has negative component: {q!r}")
        if abs(sum(q) - 1.0) > 1e-12:
            raise ValueError(f"q sums to {sum(q)!r}, must be 1")
        p = q[1] + q[2] + q[3]
        if p <= 0.0:
            return cls(0.0, (1.0, 0.0, 0.0))
        return cls(p, (q[1] / p, q[2] / p, q[3] / p))

    @property
    def q(self) -> tuple[float, float, float, float]:
        """Mixing weights (q0, qx, qy, qz) = (1-p, ax p, ay p, az p)."""
        ax, ay, az = self.alpha
        return (1.0 - self.p, ax * self.p, ay * self.p, az * self.p)


class ShrinkFactors(NamedTuple):
    """Bloch-vector damping factors (lx, ly, lz) of a Pauli channel."""

    lx: float
    ly: float
    lz: float


@dataclass(frozen=True)
class KrausChannel:
    """Qubit channel given by an explicit list of 2x2 Kraus operators."""

    kraus_ops: tuple[np.ndarray, ...]
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus_ops)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for k in ops:
            if k.shape != (2, 2):
                raise ValueError(f"Kraus operators must be 2x2, got shape {k.shape}")
        acc = sum(k.conj().T @ k for k in ops)
        if np.linalg.norm(acc - I2) > self.tol:
            raise ValueError("Kraus operators are not trace-preserving: sum K^dag K != I")
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def unital(self) -> bool:
        """True if sum K K^dag = I within tolerance (channel preserves I/2)."""
        acc = sum(k @ k.conj().T for k in self.kraus_ops)
        return bool(np.linalg.norm(acc - I2) <= self.tol)


def pauli_to_kraus(ch: PauliChannel) -> KrausChannel:
    """Kraus operators sqrt(q_i) sigma_i in the fixed order (0, x, y, z)."""
    return KrausChannel(tuple(np.sqrt(qi) * s for qi, s in zip(ch.q, PAULIS)))


def shrink_factors(ch: PauliChannel) -> ShrinkFactors:
    """Bloch damping factors l_mu = 1 - 2 (1 - a_mu) p."""
    ax, ay, az = ch.alpha
    p = ch.p
    return ShrinkFactors(1 - 2 * (1 - ax) * p, 1 - 2 * (1 - ay) * p, 1 - 2 * (1 - az) * p)


def check_fujiwara_algoet(f: ShrinkFactors, tol: float = 1e-12) -> bool:
    """Complete-positivity test |1 +/- lz| >= |lx +/- ly| for both signs.

    ``tol`` absorbs round-off at the boundary, where valid channels can sit
    exactly on the equality.
    """
    lx, ly, lz = f
    return abs(1 + lz) >= abs(lx + ly) - tol and abs(1 - lz) >= abs(lx - ly) - tol


def apply_channel(ch: KrausChannel, rho) -> np.ndarray:
    """Apply the channel: sum K rho K^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"apply_channel expects a 2x2 operator, got shape {rho.shape}")
    out = np.zeros((2, 2), dtype=complex)
    for k in ch.kraus_ops:
        out += k @ rho @ k.conj().T
    return out


def transpose_channel(ch: KrausChannel) -> KrausChannel:
    """Input-output inverted channel with Kraus operators K_i^T.

    Transposition is taken in the computational (sz eigen-) basis. Only
    unital (bidirectional) channels admit a valid inverted counterpart;
    non-unital input is rejected.
    """
    if not ch.unital:
        raise ValueError("only unital (bidirectional) channels can be transposed")
    return KrausChannel(tuple(k.T for k in ch.kraus_ops))
