"""Quantum switch and quantum time-flip superchannels on a two-qubit system.

Both processes act on a control qubit A and a target qubit B. The switch
places two channels in a coherent superposition of the two application
orders; the time-flip places one unital channel in a superposition of its
forward and input-output-inverted (transposed) versions. The control basis
is fixed to the sz eigenbasis {|0>, |1>}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .channels import KrausChannel, transpose_channel
from .matcore import DEFAULT_TOL, partial_trace_A

_P0 = np.array([[1, 0], [0, 0]], dtype=complex)  # |0><0| on the control
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)  # |1><1| on the control


class BlockDecomposition(NamedTuple):
    """Conditional 2x2 blocks X_ab = <a| rho |b>_A of a two-qubit operator."""

    X00: np.ndarray
    X01: np.ndarray
    X10: np.ndarray
    X11: np.ndarray


def blocks_of(rho) -> BlockDecomposition:
    """Decompose a 4x4 operator into its control-basis blocks."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    return BlockDecomposition(rho[:2, :2], rho[:2, 2:], rho[2:, :2], rho[2:, 2:])


def assemble_blocks(b: BlockDecomposition) -> np.ndarray:
    """Inverse of :func:`blocks_of`."""
    return np.block([[b.X00, b.X01], [b.X10, b.X11]])


@dataclass(frozen=True)
class Superchannel:
    """Bipartite channel given by explicit 4x4 Kraus operators.

    ``kind`` is "switch" or "timeflip". The per-branch 2x2 Kraus lists are
    retained so the block-superoperator formulas can be evaluated as an
    independent cross-check of the full 4x4 action.
    """

    kraus_ops: tuple[np.ndarray, ...]
    kind: str
    branch_ops: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        acc = sum(k.conj().T @ k for k in self.kraus_ops)
        if np.linalg.norm(acc - np.eye(4)) > DEFAULT_TOL:
            raise ValueError("superchannel Kraus operators are not trace-preserving")


def build_switch(ch1: KrausChannel, ch2: KrausChannel) -> Superchannel:
    """Coherent superposition of the two orders of applying ch1 and ch2.

    Kraus operators, in lexicographic (i, j) order over the operators of ch2
    and ch1:

        S_ij = |0><0| (x) M2_i M1_j + |1><1| (x) M1_j M2_i
    """
    ops = []
    for m2 in ch2.kraus_ops:
        for m1 in ch1.kraus_ops:
            ops.append(np.kron(_P0, m2 @ m1) + np.kron(_P1, m1 @ m2))
    return Superchannel(tuple(ops), "switch", (ch1.kraus_ops, ch2.kraus_ops))


def build_timeflip(ch: KrausChannel) -> Superchannel:
    """Coherent superposition of a unital channel and its transpose.

        F_i = |0><0| (x) M_i + |1><1| (x) M_i^T

    Non-unital channels have no valid input-output-inverted counterpart and
    are rejected.
    """
    transpose_channel(ch)  # rejects non-unital input
    ops = tuple(np.kron(_P0, m) + np.kron(_P1, m.T) for m in ch.kraus_ops)
    return Superchannel(ops, "timeflip", (ch.kraus_ops,))


def apply_superchannel(s: Superchannel, rho) -> np.ndarray:
    """Apply the superchannel to a 4x4 state: sum K rho K^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho.shape}")
    out = np.zeros((4, 4), dtype=complex)
    for k in s.kraus_ops:
        out += k @ rho @ k.conj().T
    return out


def apply_to_memory(ch: KrausChannel, rho) -> np.ndarray:
    """Apply a qubit channel to the memory qubit B of a 4x4 state: (I (x) ch)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho.shape}")
    out = np.zeros((4, 4), dtype=complex)
    for k in ch.kraus_ops:
        ext = np.kron(np.eye(2), k)
        out += ext @ rho @ ext.conj().T
    return out


def _sandwich(ops_left, ops_right, x) -> np.ndarray:
    out = np.zeros((2, 2), dtype=complex)
    for a, b in zip(ops_left, ops_right):
        out += a @ x @ b
    return out


def block_superoperators(s: Superchannel, blocks: BlockDecomposition) -> BlockDecomposition:
    """Apply the four conditional block superoperators of ``s``.

    For the switch (with channel Kraus lists {M1_j}, {M2_i}):

        S00(X) = sum_ij M2_i M1_j X M1_j^dag M2_i^dag
        S11(X) = sum_ij M1_j M2_i X M2_i^dag M1_j^dag
        S01(X) = sum_ij M2_i M1_j X M2_i^dag M1_j^dag
        S10(X) = sum_ij M1_j M2_i X M1_j^dag M2_i^dag

    For the time-flip (with Kraus list {M_i}):

        F00(X) = sum_i M_i X M_i^dag        (forward channel)
        F11(X) = sum_i M_i^T X M_i^*        (inverted channel)
        F01(X) = sum_i M_i X M_i^*
        F10(X) = sum_i M_i^T X M_i^dag
    """
    if s.kind == "switch":
        m1, m2 = s.branch_ops
        fwd = [b @ a for b in m2 for a in m1]  # M2_i M1_j
        bwd = [a @ b for b in m2 for a in m1]  # M1_j M2_i
        return BlockDecomposition(
            _sandwich(fwd, [m.conj().T for m in fwd], blocks.X00),
            _sandwich(fwd, [m.conj().T for m in bwd], blocks.X01),
            _sandwich(bwd, [m.conj().T for m in fwd], blocks.X10),
            _sandwich(bwd, [m.conj().T for m in bwd], blocks.X11),
        )
    if s.kind == "timeflip":
        (m,) = s.branch_ops
        return BlockDecomposition(
            _sandwich(m, [k.conj().T for k in m], blocks.X00),
            _sandwich(m, [k.conj() for k in m], blocks.X01),
            _sandwich([k.T for k in m], [k.conj().T for k in m], blocks.X10),
            _sandwich([k.T for k in m], [k.conj() for k in m], blocks.X11),
        )
    raise ValueError(f"unknown superchannel kind {s.kind!r}")


@dataclass(frozen=True)
class ControlReadout:
    """One measurement outcome on the control qubit.

    ``conditional_state`` is the normalized post-measurement state of the
    target B, except when ``probability`` falls below tolerance: then the
    unnormalized block is returned with ``zero_probability`` set, never NaN.
    """

    mode: str
    outcome: str | None
    probability: float
    conditional_state: np.ndarray
    zero_probability: bool = False


_X_PROJ = {
    "+": np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex),
    "-": np.array([[0.5, -0.5], [-0.5, 0.5]], dtype=complex),
}


def readout_control(rho_out, mode: str, tol: float = 1e-12) -> list[ControlReadout]:
    """Measure or discard the control qubit of a 4x4 state.

    mode "z_basis": outcomes "0"/"1" with probabilities Tr[X00], Tr[X11].
    mode "x_basis": outcomes "+"/"-" via the projector sandwich
    (P+- (x) I) rho (P+- (x) I); this coherently combines all four blocks.
    mode "traced_out": single entry X00 + X11 with probability 1.
    """
    rho_out = np.asarray(rho_out, dtype=complex)
    if rho_out.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho_out.shape}")
    b = blocks_of(rho_out)

    def entry(outcome, block):
        prob = float(np.trace(block).real)
        if prob < tol:
            return ControlReadout(mode, outcome, max(prob, 0.0), block, zero_probability=True)
        return ControlReadout(mode, outcome, prob, block / prob)

    if mode == "z_basis":
        return [entry("0", b.X00), entry("1", b.X11)]
    if mode == "x_basis":
        out = []
        for label, proj in _X_PROJ.items():
            big = np.kron(proj, np.eye(2))
            out.append(entry(label, partial_trace_A(big @ rho_out @ big)))
        return out
    if mode == "traced_out":
        return [ControlReadout(mode, None, 1.0, b.X00 + b.X11)]
    raise ValueError(f"unknown readout mode {mode!r}")
