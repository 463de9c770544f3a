import numpy as np
import pytest

from qutritxxz.model import ModelParams


def random_params(rng) -> ModelParams:
    """Parameter draws over the same ranges the validation suite uses."""
    return ModelParams(
        R=float(rng.uniform(0.05, 6.0)),
        gamma=float(rng.uniform(-2.0, 2.0)),
        Dz=float(rng.uniform(-3.0, 3.0)),
        B=float(rng.uniform(-3.0, 3.0)),
    )


def random_hermitian(rng, n=9) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def haar_unitary(rng, n=3) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
