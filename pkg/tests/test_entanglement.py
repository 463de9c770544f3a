import numpy as np
import pytest

from qutritxxz.entanglement import (
    InvalidState,
    UnsupportedStructure,
    negativity,
    partial_transpose,
    pure_state_negativity_oracle,
)
from qutritxxz.model import ModelParams, analytic_spectrum
from qutritxxz.thermal import gibbs_analytic, ground_state_mixture

from conftest import haar_unitary, random_params


def _pure(c):
    c = np.asarray(c, dtype=complex)
    c = c / np.linalg.norm(c)
    return np.outer(c, c.conj())


def test_pt_fixes_diagonal():
    rho = np.diag(np.arange(1.0, 10.0)).astype(complex) / 45.0
    assert np.array_equal(partial_transpose(rho), rho)


def test_pt_involution(rng):
    a = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    for sub in ("first", "second"):
        assert np.array_equal(partial_transpose(partial_transpose(a, sub), sub), a)


def test_pt_index_law(rng):
    rho = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    out = partial_transpose(rho, "first")
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for ell in range(3):
                    assert out[3 * i + j, 3 * k + ell] == rho[3 * k + j, 3 * i + ell]


def test_pt_preserves_hermiticity():
    p = ModelParams(R=0.7, gamma=0.9, Dz=1.4, B=0.6)
    rho = gibbs_analytic(p, 0.5).rho
    pt = partial_transpose(rho)
    assert np.max(np.abs(pt - pt.conj().T)) < 1e-14


def test_pt_moves_thermal_elements():
    # the (|-1,0>,|0,-1>) coherence lands on the ((0,0),(1,1)) slot
    p = ModelParams(R=0.7, gamma=0.9, Dz=1.4, B=0.6)
    rho = gibbs_analytic(p, 0.5).rho
    pt = partial_transpose(rho)
    assert pt[0, 4] == rho[3, 1]
    assert pt[0, 8] == rho[6, 2]
    assert pt[4, 8] == rho[7, 5]
    assert pt[1, 5] == rho[4, 2]


def test_pt_bad_shape():
    with pytest.raises(ValueError):
        partial_transpose(np.eye(4))


def test_negativity_maximally_mixed():
    res = negativity(np.eye(9, dtype=complex) / 9)
    assert res.value == 0.0
    assert res.negative_eigenvalues.size == 0


def test_negativity_maximally_entangled():
    c = np.zeros(9)
    c[[0, 4, 8]] = 1.0  # (|00> + |11> + |22>) / sqrt(3)
    res = negativity(_pure(c))
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(res.negative_eigenvalues, -1 / 3, atol=1e-12)


def test_negativity_phi2():
    p = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.0)
    phi2 = analytic_spectrum(p).vecs[:, 1]
    res = negativity(np.outer(phi2, phi2.conj()))
    assert res.value == pytest.approx(0.5, abs=1e-12)
    assert res.negative_eigenvalues.size == 1


def test_negativity_product_states():
    for m1 in range(3):
        for m2 in range(3):
            c = np.zeros(9)
            c[3 * m1 + m2] = 1.0
            assert negativity(_pure(c)).value == 0.0


def test_negativity_headline_value():
    # frozen from the pure-state oracle on the closed-form ground state;
    # the published headline quotes 0.9616 for this regime
    p = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.0)
    n = negativity(ground_state_mixture(p).rho).value
    assert n == pytest.approx(0.9659875012030359, abs=1e-9)
    assert abs(n - 0.9616) < 0.01


def test_negativity_both_subsystems_agree():
    p = ModelParams(R=0.5, gamma=0.8, Dz=1.3, B=0.4)
    rho = gibbs_analytic(p, 0.3).rho
    n1 = negativity(rho, "first").value
    n2 = negativity(rho, "second").value
    assert abs(n1 - n2) < 1e-10


def test_negativity_rejects_invalid_states():
    with pytest.raises(InvalidState):
        negativity(np.eye(9, dtype=complex))  # trace 9
    bad = np.zeros((9, 9), dtype=complex)
    bad[0, 0], bad[1, 1] = 1.5, -0.5
    bad[0, 1] = bad[1, 0] = 0.9
    with pytest.raises(InvalidState):
        negativity(bad)  # not PSD
    nh = np.eye(9, dtype=complex) / 9
    nh[0, 1] = 1e-3
    with pytest.raises(InvalidState):
        negativity(nh)  # not Hermitian


def test_oracle_product_state():
    c = np.zeros(9)
    c[0] = 1.0
    assert pure_state_negativity_oracle(c) == 0.0


def test_oracle_two_term():
    c = np.zeros(9)
    c[[1, 3]] = 1 / np.sqrt(2)  # |-1,0> and |0,-1>
    assert pure_state_negativity_oracle(c) == pytest.approx(0.5, abs=1e-12)


def test_oracle_phi8_closed_form():
    p = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.0)
    spec = analytic_spectrum(p)
    a = 2 / np.sqrt(spec.chi1**2 + 8)
    b = spec.chi1 / np.sqrt(spec.chi1**2 + 8)
    expected = a * a + 2 * a * b
    assert pure_state_negativity_oracle(spec.vecs[:, 7]) == pytest.approx(expected, abs=1e-12)
    full = negativity(_pure(spec.vecs[:, 7])).value
    assert abs(full - expected) < 1e-10


def test_oracle_matches_pipeline_on_all_eigenvectors(rng):
    for _ in range(5):
        p = random_params(rng)
        vecs = analytic_spectrum(p).vecs
        for i in range(9):
            full = negativity(_pure(vecs[:, i])).value
            oracle = pure_state_negativity_oracle(vecs[:, i])
            assert abs(full - oracle) < 1e-10


def test_oracle_rejects_non_permutation_support():
    c = np.zeros(9)
    c[[0, 1]] = 1 / np.sqrt(2)  # |-1,-1> and |-1,0> share the first-site label
    with pytest.raises(UnsupportedStructure):
        pure_state_negativity_oracle(c)


def test_oracle_rejects_unnormalized():
    with pytest.raises(UnsupportedStructure):
        pure_state_negativity_oracle(np.ones(9))


def test_local_unitary_invariance(rng):
    p = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.3)
    rho = gibbs_analytic(p, 0.2).rho
    n0 = negativity(rho).value
    for _ in range(20):
        u = np.kron(haar_unitary(rng), haar_unitary(rng))
        n1 = negativity(u @ rho @ u.conj().T).value
        assert abs(n0 - n1) < 1e-9


def test_parity_in_dz(rng):
    for _ in range(10):
        p = random_params(rng)
        t = float(rng.uniform(0.05, 2.0))
        n_plus = negativity(gibbs_analytic(p, t).rho).value
        p_m = ModelParams(R=p.R, gamma=p.gamma, Dz=-p.Dz, B=p.B)
        n_minus = negativity(gibbs_analytic(p_m, t).rho).value
        assert abs(n_plus - n_minus) < 1e-10


def test_parity_in_b(rng):
    for _ in range(10):
        p = random_params(rng)
        t = float(rng.uniform(0.05, 2.0))
        n_plus = negativity(gibbs_analytic(p, t).rho).value
        p_m = ModelParams(R=p.R, gamma=p.gamma, Dz=p.Dz, B=-p.B)
        n_minus = negativity(gibbs_analytic(p_m, t).rho).value
        assert abs(n_plus - n_minus) < 1e-10


def test_negativity_value_matches_stored_eigenvalues(rng):
    p = random_params(rng)
    res = negativity(gibbs_analytic(p, 0.1).rho)
    assert res.value == pytest.approx(float(np.abs(res.negative_eigenvalues).sum()),
                                      abs=1e-12)
    assert 0.0 <= res.value <= 1.0 + 1e-9
