"""Unit tests for the quantum switch and time-flip superchannels."""

import numpy as np
import pytest

from maeur.channels import KrausChannel, PauliChannel, apply_channel, pauli_to_kraus
from maeur.matcore import I2, PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z, bell_state, kron, partial_trace_A
from maeur.superprocess import (
    apply_superchannel,
    apply_to_memory,
    assemble_blocks,
    block_superoperators,
    blocks_of,
    build_switch,
    build_timeflip,
    readout_control,
)

from conftest import random_channel, random_density, random_unitary

IDENTITY = KrausChannel((I2,))


def remix(ch: KrausChannel, rng) -> KrausChannel:
    """Same channel, different Kraus representation (unitary re-mixing)."""
    n = len(ch.kraus_ops)
    v = random_unitary(rng, n)
    return KrausChannel(tuple(
        sum(v[a, i] * ch.kraus_ops[i] for i in range(n)) for a in range(n)
    ))


class TestBuildSwitch:
    def test_identity_channels(self, rng):
        s = build_switch(IDENTITY, IDENTITY)
        rho = random_density(rng, 4)
        np.testing.assert_allclose(apply_superchannel(s, rho), rho, atol=1e-14)

    def test_commuting_phase_flips(self, rng):
        # pure phase flips commute, so both branch products equal sz sz = I
        ch = pauli_to_kraus(PauliChannel(1.0, (0.0, 0.0, 1.0)))
        s = build_switch(ch, ch)
        rho = random_density(rng, 4)
        expected = apply_to_memory(KrausChannel((SIGMA_Z,)), apply_to_memory(KrausChannel((SIGMA_Z,)), rho))
        np.testing.assert_allclose(apply_superchannel(s, rho), expected, atol=1e-12)

    def test_self_switch_inverts_xy_noise_at_full_error(self):
        ch = pauli_to_kraus(PauliChannel(1.0, (0.5, 0.5, 0.0)))
        out = apply_superchannel(build_switch(ch, ch), bell_state())
        np.testing.assert_allclose(out, bell_state(), atol=1e-12)

    def test_cptp(self, rng):
        s = build_switch(pauli_to_kraus(random_channel(rng)), pauli_to_kraus(random_channel(rng)))
        acc = sum(k.conj().T @ k for k in s.kraus_ops)
        np.testing.assert_allclose(acc, np.eye(4), atol=1e-10)


class TestBuildTimeflip:
    def test_identity_channel(self, rng):
        f = build_timeflip(IDENTITY)
        rho = random_density(rng, 4)
        np.testing.assert_allclose(apply_superchannel(f, rho), rho, atol=1e-14)

    def test_pauli_block_structure(self):
        # sigma_i^T = eta_i sigma_i with eta = (1, 1, -1, 1)
        ch = pauli_to_kraus(PauliChannel(0.4, (0.2, 0.3, 0.5)))
        f = build_timeflip(ch)
        eta = (1, 1, -1, 1)
        p0 = np.diag([1, 0]).astype(complex)
        p1 = np.diag([0, 1]).astype(complex)
        for op, q, e, sigma in zip(f.kraus_ops, ch.kraus_ops, eta, PAULIS):
            np.testing.assert_allclose(op, np.kron(p0, q) + np.kron(p1, e * q), atol=1e-14)

    def test_cptp_for_generic_unital_channel(self, rng):
        u1, u2 = random_unitary(rng, 2), random_unitary(rng, 2)
        ch = KrausChannel((u1 / np.sqrt(2), u2 / np.sqrt(2)))
        f = build_timeflip(ch)
        assert len(f.kraus_ops) == 2
        for op in f.kraus_ops:
            np.testing.assert_allclose(op[:2, 2:], 0, atol=1e-15)  # block-diagonal
        np.testing.assert_allclose(sum(k.conj().T @ k for k in f.kraus_ops), np.eye(4), atol=1e-10)

    def test_rejects_non_unital(self):
        gamma = 0.5
        damping = KrausChannel((
            np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex),
            np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex),
        ))
        with pytest.raises(ValueError, match="unital"):
            build_timeflip(damping)


class TestApplySuperchannel:
    def test_bell_diagonal_output_switch(self):
        ch = PauliChannel(0.35, (0.5, 0.2, 0.3))
        k = pauli_to_kraus(ch)
        out = apply_superchannel(build_switch(k, k), bell_state())
        # exactly Bell-diagonal: no elements outside the pattern
        cx = np.trace(out @ kron(SIGMA_X, SIGMA_X)).real
        cy = np.trace(out @ kron(SIGMA_Y, SIGMA_Y)).real
        cz = np.trace(out @ kron(SIGMA_Z, SIGMA_Z)).real
        rebuilt = (np.eye(4) + cx * kron(SIGMA_X, SIGMA_X) + cy * kron(SIGMA_Y, SIGMA_Y)
                   + cz * kron(SIGMA_Z, SIGMA_Z)) / 4
        assert np.abs(out - rebuilt).max() < 1e-12

    def test_bell_diagonal_output_timeflip(self):
        ch = PauliChannel(0.65, (0.1, 0.6, 0.3))
        out = apply_superchannel(build_timeflip(pauli_to_kraus(ch)), bell_state())
        ax, ay, az = ch.alpha
        p = ch.p
        # expected raw correlations: (tau_x, -tau_y, tau_z)
        assert np.trace(out @ kron(SIGMA_X, SIGMA_X)).real == pytest.approx(1 - 2 * az * p, abs=1e-12)
        assert np.trace(out @ kron(SIGMA_Y, SIGMA_Y)).real == pytest.approx(-(1 - 2 * p), abs=1e-12)
        assert np.trace(out @ kron(SIGMA_Z, SIGMA_Z)).real == pytest.approx(1 - 2 * (1 - az) * p, abs=1e-12)

    def test_trace_preserved(self, rng):
        s = build_switch(pauli_to_kraus(random_channel(rng)), pauli_to_kraus(random_channel(rng)))
        rho = random_density(rng, 4)
        assert np.trace(apply_superchannel(s, rho)).real == pytest.approx(1.0, abs=1e-12)

    def test_switch_memory_marginal_maximally_mixed(self, rng):
        for _ in range(5):
            k = pauli_to_kraus(random_channel(rng))
            out = apply_superchannel(build_switch(k, k), bell_state())
            np.testing.assert_allclose(partial_trace_A(out), I2 / 2, atol=1e-12)


class TestBlockSuperoperators:
    @pytest.mark.parametrize("kind", ["switch", "timeflip"])
    def test_reassembly_matches_full_action(self, rng, kind):
        k = pauli_to_kraus(random_channel(rng))
        s = build_switch(k, pauli_to_kraus(random_channel(rng))) if kind == "switch" else build_timeflip(k)
        for _ in range(5):
            rho = random_density(rng, 4)
            direct = apply_superchannel(s, rho)
            via_blocks = assemble_blocks(block_superoperators(s, blocks_of(rho)))
            np.testing.assert_allclose(via_blocks, direct, atol=1e-12)

    def test_switch_diagonal_block_is_composition(self, rng):
        ch1, ch2 = pauli_to_kraus(random_channel(rng)), pauli_to_kraus(random_channel(rng))
        s = build_switch(ch1, ch2)
        rho_b = random_density(rng, 2)
        blocks = blocks_of(kron(np.diag([1.0, 0.0]), rho_b))
        out = block_superoperators(s, blocks)
        np.testing.assert_allclose(out.X00, apply_channel(ch2, apply_channel(ch1, rho_b)), atol=1e-12)

    def test_timeflip_diagonal_blocks_forward_and_transposed(self, rng):
        k = pauli_to_kraus(random_channel(rng))
        f = build_timeflip(k)
        x = random_density(rng, 2)
        out = block_superoperators(f, blocks_of(kron(I2 / 2, x)))
        fwd = apply_channel(k, x / 2)
        np.testing.assert_allclose(out.X00, fwd, atol=1e-12)
        np.testing.assert_allclose(out.X11, fwd, atol=1e-12)  # Pauli channels: Phi^T = Phi


class TestReadoutControl:
    def test_bell_z_basis(self):
        readouts = readout_control(bell_state(), "z_basis")
        for r, expected in zip(readouts, (np.diag([1.0, 0]), np.diag([0, 1.0]))):
            assert r.probability == pytest.approx(0.5, abs=1e-12)
            np.testing.assert_allclose(r.conditional_state, expected, atol=1e-12)

    def test_traced_out_matches_partial_trace(self, rng):
        rho = random_density(rng, 4)
        (r,) = readout_control(rho, "traced_out")
        assert r.probability == 1.0
        np.testing.assert_allclose(r.conditional_state, partial_trace_A(rho), atol=1e-12)

    def test_x_basis_matches_block_formula(self, rng):
        k = pauli_to_kraus(random_channel(rng))
        s = build_switch(k, k)
        rho_out = apply_superchannel(s, bell_state())
        readouts = {r.outcome: r for r in readout_control(rho_out, "x_basis")}
        # cross-check: 0.5 * [S00 + S11 +/- (S01 + S10)] on the input blocks
        out_blocks = block_superoperators(s, blocks_of(bell_state()))
        for sign, outcome in ((1, "+"), (-1, "-")):
            raw = 0.5 * (out_blocks.X00 + out_blocks.X11 + sign * (out_blocks.X01 + out_blocks.X10))
            p = np.trace(raw).real
            assert readouts[outcome].probability == pytest.approx(p, abs=1e-12)
            if p > 1e-12:
                np.testing.assert_allclose(readouts[outcome].conditional_state, raw / p, atol=1e-10)

    def test_probabilities_sum_to_one(self, rng):
        rho = random_density(rng, 4)
        for mode in ("z_basis", "x_basis", "traced_out"):
            total = sum(r.probability for r in readout_control(rho, mode))
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_zero_probability_flagged(self):
        rho = kron(np.diag([1.0, 0.0]), I2 / 2)  # control definitely |0>
        readouts = readout_control(rho, "z_basis")
        assert not readouts[0].zero_probability
        assert readouts[1].zero_probability
        assert readouts[1].probability == 0.0
        assert np.all(np.isfinite(readouts[1].conditional_state))

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            readout_control(bell_state(), "y_basis")


class TestRepresentationIndependence:
    def test_switch(self, rng):
        for _ in range(5):
            ch = pauli_to_kraus(random_channel(rng))
            s_ref = build_switch(ch, ch)
            s_mix = build_switch(remix(ch, rng), remix(ch, rng))
            for _ in range(3):
                rho = random_density(rng, 4)
                np.testing.assert_allclose(
                    apply_superchannel(s_mix, rho), apply_superchannel(s_ref, rho), atol=1e-9
                )

    def test_timeflip(self, rng):
        for _ in range(5):
            ch = pauli_to_kraus(random_channel(rng))
            f_ref = build_timeflip(ch)
            f_mix = build_timeflip(remix(ch, rng))
            for _ in range(3):
                rho = random_density(rng, 4)
                np.testing.assert_allclose(
                    apply_superchannel(f_mix, rho), apply_superchannel(f_ref, rho), atol=1e-9
                )
