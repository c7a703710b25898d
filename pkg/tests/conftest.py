import numpy as np
import pytest

from maeur.channels import PauliChannel


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Gaussian."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random full-rank density matrix (Wishart normalized to unit trace)."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = z @ z.conj().T
    return m / np.trace(m).real


def random_channel(rng: np.random.Generator) -> PauliChannel:
    alpha = rng.dirichlet((1.0, 1.0, 1.0))
    return PauliChannel(float(rng.uniform()), tuple(alpha))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20250826)
