"""Partial transposition and entanglement negativity for two qutrits.

Negativity N = sum of |lambda| over the negative eigenvalues of the
partial transpose; 0 for separable states, 1 for the maximally entangled
qutrit pair.  Eigenvalues above -1e-12 count as zero so that sudden death
of entanglement is reportable as an exact 0.
"""

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .matkernel import hermitian_eig, is_hermitian

#: PT eigenvalues in [-NEGATIVE_EIG_TOL, 0) are eigensolver noise, not entanglement
NEGATIVE_EIG_TOL = 1e-12
STATE_TOL = 1e-9

Subsystem = Literal["first", "second"]


class InvalidState(ValueError):
    """Input is not a valid density matrix within tolerance."""


class UnsupportedStructure(ValueError):
    """Pure-state oracle applied outside its permutation-pattern domain."""


def partial_transpose(rho: np.ndarray, subsystem: Subsystem = "first") -> np.ndarray:
    """Transpose one qutrit's indices; an involution, Hermiticity-preserving."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise ValueError(f"expected a 9x9 matrix, got {rho.shape}")
    t = rho.reshape(3, 3, 3, 3)
    if subsystem == "first":
        t = t.transpose(2, 1, 0, 3)
    elif subsystem == "second":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'first' or 'second', got {subsystem!r}")
    return t.reshape(9, 9).copy()


@dataclass(frozen=True)
class NegativityResult:
    value: float
    negative_eigenvalues: np.ndarray = field(repr=False)


def negativity(rho: np.ndarray, subsystem: Subsystem = "first") -> NegativityResult:
    """Sum of |negative eigenvalues| of the partial transpose of rho."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise InvalidState(f"expected a 9x9 density matrix, got {rho.shape}")
    if not is_hermitian(rho, atol=STATE_TOL):
        raise InvalidState("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > STATE_TOL:
        raise InvalidState(f"trace is {np.trace(rho).real}, expected 1")
    if hermitian_eig(rho).eigenvalues[0] < -STATE_TOL:
        raise InvalidState("density matrix is not positive semidefinite")

    w = hermitian_eig(partial_transpose(rho, subsystem)).eigenvalues
    neg = w[w < -NEGATIVE_EIG_TOL]
    return NegativityResult(value=float(-neg.sum()), negative_eigenvalues=neg)


def pure_state_negativity_oracle(coefficients: np.ndarray) -> float:
    """Closed-form negativity for pure states supported on a permutation
    pattern, i.e. |psi> = sum_i c_i |i, pi(i)> with pi a permutation of the
    occupied first-site labels.  For such states N = sum_{i<j} |c_i||c_j|.

    Independent of the partial-transpose pipeline; used as a test oracle.
    """
    c = np.asarray(coefficients, dtype=complex).reshape(-1)
    if c.shape != (9,):
        raise UnsupportedStructure(f"expected 9 coefficients, got shape {c.shape}")
    if abs(np.vdot(c, c).real - 1.0) > 1e-10:
        raise UnsupportedStructure("coefficients are not unit-normalized")

    support = [divmod(n, 3) for n in range(9) if abs(c[n]) > 1e-12]
    rows = [i for i, _ in support]
    cols = [j for _, j in support]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise UnsupportedStructure("support is not a permutation pattern")

    mags = np.abs(c[np.abs(c) > 1e-12])
    total = float(mags.sum())
    return 0.5 * (total * total - float((mags * mags).sum()))
