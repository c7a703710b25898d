"""Closed forms versus the brute-force oracle, plus the advantage predicates."""

import numpy as np
import pytest

from maeur.analytic import (
    BellDiagonalCoeffs,
    bell_diagonal_state,
    coeffs_single_use,
    coeffs_switch,
    coeffs_timeflip,
    extract_bell_coeffs,
    h,
    saturation_predicate,
    state_eigenvalues,
    switch_advantage,
    timeflip_advantage,
    uncertainty_closed_form,
)
from maeur.channels import PauliChannel, pauli_to_kraus, shrink_factors
from maeur.matcore import bell_state
from maeur.superprocess import apply_superchannel, apply_to_memory, build_switch, build_timeflip
from maeur.uncertainty import evaluate_maeur

from conftest import random_channel

DEPOL_03 = PauliChannel(0.3, (1 / 3, 1 / 3, 1 / 3))


def oracle_state(ch: PauliChannel, process: str) -> np.ndarray:
    k = pauli_to_kraus(ch)
    if process == "single_use":
        return apply_to_memory(k, bell_state())
    if process == "switch":
        return apply_superchannel(build_switch(k, k), bell_state())
    return apply_superchannel(build_timeflip(k), bell_state())


class TestCoefficients:
    def test_single_use(self):
        assert coeffs_single_use(PauliChannel(0.0, (0.5, 0.5, 0.0))) == pytest.approx((1, 1, 1))
        assert coeffs_single_use(DEPOL_03) == pytest.approx((0.6, 0.6, 0.6))
        assert coeffs_single_use(PauliChannel(1.0, (0.0, 0.0, 1.0))) == pytest.approx((-1, -1, 1))

    def test_switch_trivial_points(self):
        assert coeffs_switch(PauliChannel(0.0, (0.5, 0.5, 0.0))) == pytest.approx((1, 1, 1))
        assert coeffs_switch(PauliChannel(1.0, (0.5, 0.5, 0.0))) == pytest.approx((1, 1, 1))

    def test_switch_matches_oracle(self):
        ch = PauliChannel(0.75, (0.5, 0.1, 0.4))
        measured = extract_bell_coeffs(oracle_state(ch, "switch"))
        assert coeffs_switch(ch) == pytest.approx(tuple(measured), abs=1e-10)

    def test_timeflip(self):
        assert coeffs_timeflip(PauliChannel(0.0, (0.5, 0.5, 0.0))) == pytest.approx((1, 1, 1))
        assert coeffs_timeflip(PauliChannel(0.5, (0.2, 0.3, 0.5))).c_y == pytest.approx(0.0)
        c = coeffs_timeflip(PauliChannel(0.75, (1 / 3, 2 / 3, 0.0)))
        assert c.c_x == pytest.approx(1.0)

    def test_identities(self, rng):
        # switch c_z = lz^2 and timeflip c_z = lz, identically
        for _ in range(50):
            ch = random_channel(rng)
            lz = shrink_factors(ch).lz
            assert coeffs_switch(ch).c_z == pytest.approx(lz**2, abs=1e-12)
            assert coeffs_timeflip(ch).c_z == pytest.approx(lz, abs=1e-12)

    def test_extract_rejects_non_bell_diagonal(self):
        rho = np.diag([1.0, 0, 0, 0]).astype(complex)
        with pytest.raises(ValueError, match="Bell-diagonal"):
            extract_bell_coeffs(rho)


class TestClosedFormUncertainty:
    def test_bell_point(self):
        report = uncertainty_closed_form(BellDiagonalCoeffs(1, 1, 1))
        assert report.total_u == 0.0
        assert report.bound_b == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed_point(self):
        report = uncertainty_closed_form(BellDiagonalCoeffs(0, 0, 0))
        assert report.total_u == pytest.approx(2.0)
        assert report.bound_b == pytest.approx(2.0)

    def test_depolarizing_point(self):
        report = uncertainty_closed_form(BellDiagonalCoeffs(0.6, 0.6, 0.6))
        assert report.total_u == pytest.approx(1.4438561897747246, abs=1e-12)
        assert report.bound_b == pytest.approx(1.356779649447039, abs=1e-12)

    def test_rejects_unphysical_coefficients(self):
        with pytest.raises(ValueError, match="eigenvalue"):
            uncertainty_closed_form(BellDiagonalCoeffs(0.9, 0.9, 0.0))

    def test_eigenvalues_vectorized(self):
        ev = state_eigenvalues([1.0, 0.0], [1.0, 0.0], [1.0, 0.0])
        assert ev.shape == (2, 4)
        np.testing.assert_allclose(ev[0], [1, 0, 0, 0], atol=1e-15)
        np.testing.assert_allclose(ev[1], [0.25] * 4, atol=1e-15)

    def test_oracle_equivalence_sampled(self, rng):
        coeff_fns = {
            "single_use": coeffs_single_use,
            "switch": coeffs_switch,
            "timeflip": coeffs_timeflip,
        }
        for _ in range(50):
            ch = random_channel(rng)
            for process, fn in coeff_fns.items():
                closed = uncertainty_closed_form(fn(ch))
                ref = evaluate_maeur(oracle_state(ch, process))
                assert closed.total_u == pytest.approx(ref.total_u, abs=1e-9)
                assert closed.bound_b == pytest.approx(ref.bound_b, abs=1e-9)


class TestSaturation:
    def test_bit_flip(self, rng):
        for p in rng.uniform(0, 1, size=5):
            assert saturation_predicate(PauliChannel(float(p), (1.0, 0.0, 0.0)))

    def test_phase_flip(self, rng):
        for p in rng.uniform(0, 1, size=5):
            assert saturation_predicate(PauliChannel(float(p), (0.0, 0.0, 1.0)))

    def test_depolarizing_not_saturated(self):
        assert not saturation_predicate(DEPOL_03)

    def test_predicate_implies_tight_bound(self, rng):
        for _ in range(200):
            ch = random_channel(rng)
            if saturation_predicate(ch):
                report = uncertainty_closed_form(coeffs_single_use(ch))
                assert abs(report.slack) <= 1e-9


class TestSwitchAdvantage:
    def test_symmetric_xy_channel_above_threshold(self):
        v = switch_advantage(PauliChannel(0.6, (0.5, 0.5, 0.0)))
        assert v.advantaged
        assert v.necessary_condition_met

    def test_x_reduced_but_total_not(self):
        ch = PauliChannel(0.55, (0.5, 0.1, 0.4))
        v = switch_advantage(ch)
        assert h(coeffs_switch(ch).c_x) < h(coeffs_single_use(ch).c_x)  # x-uncertainty reduced
        assert not v.advantaged

    def test_no_advantage_at_low_noise(self, rng):
        for _ in range(50):
            alpha = tuple(rng.dirichlet((1, 1, 1)))
            assert not switch_advantage(PauliChannel(0.25, alpha)).advantaged

    def test_never_advantaged_below_half(self, rng):
        for _ in range(200):
            alpha = tuple(rng.dirichlet((1, 1, 1)))
            p = float(rng.uniform(0, 0.5))
            assert not switch_advantage(PauliChannel(p, alpha)).advantaged

    def test_z_uncertainty_never_lower_for_switch(self, rng):
        for _ in range(200):
            ch = random_channel(rng)
            lz = shrink_factors(ch).lz
            assert h(lz**2) >= h(lz) - 1e-12

    def test_condition_flagged_not_applicable_for_negative_lx(self):
        # pure bit-phase-flip noise drives lx negative at large p
        ch = PauliChannel(0.9, (0.0, 1.0, 0.0))
        assert shrink_factors(ch).lx < 0
        assert not switch_advantage(ch).condition_applicable


class TestTimeflipAdvantage:
    def test_generic_channel_always_advantaged(self):
        for p in (0.05, 0.3, 0.6, 1.0):
            assert timeflip_advantage(PauliChannel(p, (0.5, 0.3, 0.2))).advantaged

    def test_no_advantage_without_y_bias(self, rng):
        for _ in range(50):
            ax = float(rng.uniform())
            p = float(rng.uniform(0.01, 1.0))
            v = timeflip_advantage(PauliChannel(p, (ax, 0.0, 1.0 - ax)))
            assert not v.advantaged
            assert not v.necessary_condition_met

    def test_maximal_advantage_point(self):
        # az = 0 and ay = 1/(2p): delta_u = -1 exactly
        v = timeflip_advantage(PauliChannel(0.75, (1 - 1 / 1.5, 1 / 1.5, 0.0)))
        assert v.delta_u == pytest.approx(-1.0, abs=1e-12)

    def test_predicate_equals_sign_test(self, rng):
        for _ in range(300):
            ch = random_channel(rng)
            if ch.p == 0:
                continue
            lx = shrink_factors(ch).lx
            tx = coeffs_timeflip(ch).c_x
            assert timeflip_advantage(ch).necessary_condition_met == (abs(tx) > abs(lx))

    def test_predicate_agrees_with_delta_sign(self, rng):
        for _ in range(300):
            ch = random_channel(rng)
            v = timeflip_advantage(ch)
            if abs(v.delta_u) <= 1e-9:
                continue  # boundary band
            assert v.advantaged == v.necessary_condition_met

    def test_z_uncertainty_identical_to_single_use(self, rng):
        for _ in range(100):
            ch = random_channel(rng)
            assert coeffs_timeflip(ch).c_z == pytest.approx(coeffs_single_use(ch).c_z, abs=1e-12)


def test_bell_diagonal_state_round_trip(rng):
    for _ in range(20):
        ch = random_channel(rng)
        c = coeffs_single_use(ch)
        assert extract_bell_coeffs(bell_diagonal_state(c)) == pytest.approx(tuple(c), abs=1e-12)
