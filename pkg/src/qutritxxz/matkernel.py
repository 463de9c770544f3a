"""Dense complex linear algebra for small Hermitian problems.

Matrices are plain numpy complex128 arrays.  The eigensolver is a cyclic
Jacobi iteration with unitary 2x2 rotations, which is robust and exact
enough (off-diagonal norm driven below 1e-14 * ||A||) for the 9x9
problems this package cares about.  numpy is used only as the array
carrier; no lapack eigenroutine is called.
"""

from dataclasses import dataclass

import numpy as np

HERMITICITY_ATOL = 1e-12
#: target: off-diagonal Frobenius norm below this fraction of ||A||_F
JACOBI_RELTOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class NotHermitian(ValueError):
    """Input matrix fails the Hermitian symmetry check."""


class NoConvergence(RuntimeError):
    """Jacobi iteration exhausted its sweep budget."""


def asmatrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix contains non-finite entries")
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(asmatrix(a), asmatrix(b))


def matmul(a, b) -> np.ndarray:
    a, b = asmatrix(a), asmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return asmatrix(a).conj().T


def trace(a) -> complex:
    a = asmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("trace requires a square matrix")
    return complex(np.trace(a))


def scale(c, a) -> np.ndarray:
    return complex(c) * asmatrix(a)


def add(a, b) -> np.ndarray:
    a, b = asmatrix(a), asmatrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} + {b.shape}")
    return a + b


def is_hermitian(a, atol=HERMITICITY_ATOL) -> bool:
    a = asmatrix(a)
    return a.shape[0] == a.shape[1] and np.max(np.abs(a - a.conj().T)) <= atol


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted ascending; eigenvectors[:, k] belongs to eigenvalues[k]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _jacobi_rotation(app, aqq, apq):
    """Unitary 2x2 rotation (c, s*phase) annihilating the (p, q) entry.

    For the Hermitian block [[app, apq], [conj(apq), aqq]] returns c real,
    s real and the unit phase of apq; the rotation columns are
    (c, -s*conj(phase)) and (s*phase, c).
    """
    mag = abs(apq)
    phase = apq / mag
    tau = (aqq - app).real / (2.0 * mag)
    if tau >= 0.0:
        t = 1.0 / (tau + np.hypot(1.0, tau))
    else:
        t = -1.0 / (-tau + np.hypot(1.0, tau))
    c = 1.0 / np.hypot(1.0, t)
    return c, t * c, phase


def _offdiag_norm(a) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eig(h) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi."""
    a = asmatrix(h)
    n = a.shape[0]
    if a.shape[0] != a.shape[1] or not is_hermitian(a):
        raise NotHermitian(f"matrix of shape {a.shape} is not Hermitian within {HERMITICITY_ATOL}")

    a = a.copy()
    v = np.eye(n, dtype=complex)
    norm = float(np.linalg.norm(a))
    # zero matrix (or numerically zero): nothing to rotate
    target = max(JACOBI_RELTOL * norm, 1e-300)

    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) <= target:
            break
        # rotating entries much smaller than the target norm is wasted work
        thresh = max(_offdiag_norm(a) / n, target / n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 0.1 * thresh:
                    continue
                c, s, phase = _jacobi_rotation(a[p, p], a[q, q], a[p, q])
                r = np.eye(n, dtype=complex)
                r[p, p] = c
                r[q, q] = c
                r[p, q] = s * phase
                r[q, p] = -s * np.conj(phase)
                a = r.conj().T @ a @ r
                v = v @ r
    else:
        raise NoConvergence(
            f"Jacobi failed to converge in {JACOBI_MAX_SWEEPS} sweeps "
            f"(off-diagonal norm {_offdiag_norm(a):.3e}, target {target:.3e})"
        )

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(eigenvalues=w[order], eigenvectors=v[:, order])
